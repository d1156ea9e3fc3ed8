"""Saddle-point estimates of the Stirling numbers c(n, m) versus exact values.

Run:  python3 demos/saddle_point_estimates.py
"""

import math

from recstats import big_ln, rec_table, scaled_limit_table, solve_u1, temme_estimate
from recstats.temme import phi_prime

# The coefficient-extraction exponent has a unique positive saddle u1.
# At n=2, m=1 it is sqrt(2), a rare closed form worth eyeballing.
u1 = solve_u1(2, 1)
print(f"u1(2, 1) = {u1:.12f}   sqrt(2) = {math.sqrt(2):.12f}")
print(f"residual phi'(u1) = {phi_prime(u1, 2, 1):.2e}")

# The estimate e^B g binom against exact table values, all in logs:
print(f"\n{'n':>4} {'m':>4} {'u1':>10} {'log est':>12} {'log exact':>12} {'rel err':>10}")
for n in (20, 40, 80, 160, 320):
    m = n // 2
    est = temme_estimate(n, m)
    exact = big_ln(rec_table(n).coeffs[m])
    rel = abs(math.exp(est.log_estimate - exact) - 1.0)
    print(f"{n:>4} {m:>4} {est.u1:>10.3f} {est.log_estimate:>12.3f} {exact:>12.3f} {rel:>10.2e}")

# Scaled by n ln n the estimate converges to 1 - x, matching the rec
# limit shape; the deviation shrinks monotonically in n.
print("\nlog estimate / (n ln n) at m = floor(n x), target 1 - x:")
for x in (0.25, 0.5, 0.75):
    values = scaled_limit_table(x, (25, 50, 100, 200, 400))
    path = "  ".join(f"{v:.4f}" for _, v in values)
    print(f"  x={x}: {path}  ->  {1 - x}")
print("\nok")

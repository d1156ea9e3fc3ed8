"""The extremal minimum product m(n, k) and its Gamma-function squeeze.

Run:  python3 demos/minimum_product.py
"""

import math

from recstats import big_ln, gamma_bounds, i0_closed, i0_greedy, min_product
from recstats.extremal import format_witness

# Admissible tuples are increasing position sets starting at 1 with sum
# k; m(n, k) is the smallest possible product.  It is the heaviest term
# in the srec probability sum, so it controls C(n, k) both ways.
for n, k in ((10, 7), (6, 12), (6, 11), (30, 200), (10, 55)):
    result = min_product(n, k)
    print(f"m({n}, {k}) = {result.m}   witness {format_witness(result.witness)}")

# For k <= n the answer is always k-1 via the pair (1, k-1).  Above
# that, the optimum packs records into the last positions, and the
# threshold index i0 says how many are forced.
n = 30
print(f"\ni0(30, k): greedy and closed form agree;"
      f" e.g. k=100 -> {i0_greedy(n, 100)} == {i0_closed(n, 100)}")

# Gamma squeeze: Gamma(n+1)/Gamma(n-i0) <= m(n,k) <= same * e^n, a
# window of exactly n nats.
for k in (60, 200, 400):
    bounds = gamma_bounds(n, k)
    log_m = big_ln(min_product(n, k).m)
    print(f"k={k:3d}: {bounds.log_lower:8.3f} <= ln m = {log_m:8.3f}"
          f" <= {bounds.log_upper:8.3f}   (i0 = {bounds.i0})")
    assert bounds.log_lower - 1e-9 <= log_m <= bounds.log_upper + 1e-9

# n - i0 stays within 3 of n*sqrt(1-x), which is where sqrt(1-x)
# enters the srec limit shape.
print("\nn - i0 versus n sqrt(1-x) at n = 30:")
for k in (40, 150, 300, 460):
    x = 2 * k / (n * (n + 1))
    print(f"  k={k:3d}: n - i0 = {n - i0_closed(n, k):2d},"
          f" n sqrt(1-x) = {n * math.sqrt(1 - x):6.2f}")
print("\nok")

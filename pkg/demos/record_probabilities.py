"""Exact rational record probabilities and the two-sided brackets.

Run:  python3 demos/record_probabilities.py
"""

import math
from fractions import Fraction

from recstats import (
    PatternSpec,
    big_ln,
    pattern_probability,
    rec_prob_bounds,
    rec_prob_sum,
    rec_table,
    srec_prob_bounds,
    srec_prob_sum,
    srec_table,
)
from recstats.probabilities import format_fraction

# Records at distinct positions are independent, so any Y/N pattern has
# probability prod(1/j) over the Y positions times prod(1 - 1/j) over
# the N positions.
spec = PatternSpec(10, {2: "Y", 5: "N", 7: "Y"})
print("P(record at 2 and 7, none at 5, n=10) =",
      format_fraction(pattern_probability(spec)))

# Summing the pattern weights over all record sets of size k gives
# P(rec = k) exactly, and it reproduces c(n,k)/n! coefficient for
# coefficient.
n = 8
for k in (1, 3, 8):
    p = rec_prob_sum(n, k)
    assert p == Fraction(rec_table(n).coeffs[k], math.factorial(n))
    print(f"P(rec = {k}) for n={n}: {format_fraction(p)}")

# The same weights restricted to sets with position sum k give
# P(srec = k); k = 2 is famously impossible (records at 1 and ... what?).
for k in (1, 2, 9):
    p = srec_prob_sum(n, k)
    assert p == Fraction(srec_table(n).coeffs[k], math.factorial(n))
    print(f"P(srec = {k}) for n={n}: {format_fraction(p)}")

# Log-domain brackets: useful where the exact rationals get unwieldy.
lo, hi = rec_prob_bounds(20, 0.5)
actual = big_ln(rec_table(20).coeffs[10]) - big_ln(math.factorial(20))
print(f"\nln P(rec = 10), n=20: {actual:.4f} inside [{lo:.4f}, {hi:.4f}]")

lo, hi = srec_prob_bounds(20, 60)
actual = big_ln(srec_table(20).coeffs[60]) - big_ln(math.factorial(20))
print(f"ln P(srec = 60), n=20: {actual:.4f} inside [{lo:.4f}, {hi:.4f}]")
print("\nok")

"""
Exact rational record probabilities and their two-sided bounds.

Records of a uniform random permutation occur independently, with
probability 1/k at position k.  Three exact consequences are computed
here, all in arbitrary-precision rationals:

* the probability that prescribed positions are (Y) or are not (N)
  records, a product of factors 1/j and 1 - 1/j;
* P(rec = k) as the sum over record-position sets
  {1 = v_1 < ... < v_k <= n} of (1/(v_1...v_k)) * prod (1 - 1/v) over
  the remaining positions, which equals c(n,k)/n! exactly;
* P(srec = k), the same sum restricted to sets with v_1 + ... + v_r = k,
  which equals C(n,k)/n! exactly.

The bound operations return natural logs of the bracket ends because
the lower ends underflow floats long before n gets interesting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import extremal
from .tables import big_ln, srec_max

# direct subset enumeration stays instantaneous up to here
ENUMERATION_LIMIT = 12

YES = "Y"
NO = "N"


@dataclass(frozen=True)
class PatternSpec:
    """Record/non-record marks on positions of an n-permutation.

    ``marks`` maps a position j to ``"Y"`` (j must be a record) or
    ``"N"`` (j must not be one); unmarked positions are unconstrained.
    """

    n: int
    marks: dict[int, str]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        for j, mark in self.marks.items():
            if not 1 <= j <= self.n:
                raise ValueError(f"marked position {j} outside 1..{self.n}")
            if mark not in (YES, NO):
                raise ValueError(f"mark for position {j} must be 'Y' or 'N', got {mark!r}")


def pattern_probability(spec: PatternSpec) -> Fraction:
    """Exact probability that a uniform permutation matches the marks.

    Position 1 is always a record: marking it 'Y' contributes factor 1,
    marking it 'N' is rejected.

    >>> pattern_probability(PatternSpec(3, {2: "Y", 3: "N"}))
    Fraction(1, 3)
    """
    if spec.marks.get(1) == NO:
        raise ValueError("position 1 is always a record and cannot be marked 'N'")
    p = Fraction(1)
    for j, mark in spec.marks.items():
        if j == 1:
            continue
        p *= Fraction(1, j) if mark == YES else Fraction(j - 1, j)
    return p


def _check_enumeration_n(n: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > ENUMERATION_LIMIT:
        raise ValueError(f"subset enumeration is limited to n <= {ENUMERATION_LIMIT}")


def _subset_weight(n: int, chosen: set[int]) -> Fraction:
    # weight of the record set {1} | chosen: prod 1/v over records times
    # prod (1 - 1/v) = (v-1)/v elsewhere; the common denominator is n!
    numerator = math.prod(v - 1 for v in range(2, n + 1) if v not in chosen)
    return Fraction(numerator, math.factorial(n))


def rec_prob_sum(n: int, k: int) -> Fraction:
    """P(rec = k) by direct enumeration of record-position sets.

    Out-of-range k gives probability 0.  Agrees with c(n,k)/n! exactly.

    >>> rec_prob_sum(3, 2)
    Fraction(1, 2)
    """
    _check_enumeration_n(n)
    if not 1 <= k <= n:
        return Fraction(0)
    total = Fraction(0)
    for chosen in combinations(range(2, n + 1), k - 1):
        total += _subset_weight(n, set(chosen))
    return total


def srec_prob_sum(n: int, k: int) -> Fraction:
    """P(srec = k) by enumeration of record sets with position sum k.

    Position 1 is forced, so subsets of {2, ..., n} are tested against
    sum k - 1.  Agrees with C(n,k)/n! exactly.

    >>> srec_prob_sum(3, 4)
    Fraction(1, 6)
    >>> srec_prob_sum(5, 2)
    Fraction(0, 1)
    """
    _check_enumeration_n(n)
    if not 1 <= k <= srec_max(n):
        return Fraction(0)
    total = Fraction(0)
    for r in range(0, n):
        for chosen in combinations(range(2, n + 1), r):
            if 1 + sum(chosen) == k:
                total += _subset_weight(n, set(chosen))
    return total


def rec_prob_bounds(n: int, x: float) -> tuple[float, float]:
    """Log-domain bracket of P(rec = k) for k = floor(n*x).

    Returns (log_lower, log_upper) with
    lower = (n - k)! / (n * n!) and upper = 2^n / k!.  The domain test
    and the floor are exact in the binary value of ``x``, which pins k
    inside [1, n].
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    exact_x = Fraction(x)
    if not Fraction(1, n) <= exact_x <= 1:
        raise ValueError(f"x must lie in [1/n, 1], got {x}")
    k = math.floor(n * exact_x)
    log_lower = big_ln(math.factorial(n - k)) - math.log(n) - big_ln(math.factorial(n))
    log_upper = n * math.log(2.0) - big_ln(math.factorial(k))
    return log_lower, log_upper


def srec_prob_bounds(n: int, k: int) -> tuple[float, float]:
    """Log-domain bracket of P(srec = k) via the minimum product m(n, k).

    Returns (log_lower, log_upper) with lower = 1/(n * m(n,k)) and
    upper = 2^n / m(n,k).  The two k values with count zero have no
    witness tuple and are rejected.
    """
    m = extremal.min_product(n, k).m
    log_m = big_ln(m)
    return -math.log(n) - log_m, n * math.log(2.0) - log_m


def format_fraction(value: Fraction) -> str:
    """Serialize as ``p/q`` in lowest terms, denominator always shown."""
    return f"{value.numerator}/{value.denominator}"

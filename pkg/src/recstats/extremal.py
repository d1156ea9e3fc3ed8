"""
The minimum product m(n, k) over admissible record-position tuples.

A tuple (v_1, ..., v_r) is admissible for (k, n) when v_1 = 1, r <= n,
v_1 < v_2 < ... < v_r <= n and v_1 + ... + v_r = k; such a tuple exists
iff k is a feasible srec value, i.e. k != 2 and k != n(n+1)/2 - 1.
m(n, k) is the smallest product v_1 * ... * v_r over admissible tuples.
It controls two-sided bounds on the srec counts C(n, k), so it has to
be exact: the dynamic program below compares big-integer products
directly, never logs, because ties and hairline margins (2v versus
v + 2) decide real witnesses.

For k <= n the minimum is k - 1, realized by (1, k-1).  For larger k
the threshold index i_0(n, k), the greatest i with
k - 1 >= n + (n-1) + ... + (n-i), squeezes m(n, k) between
Gamma(n+1)/Gamma(n-i_0) and that times e^n, which in turn brackets
C(n, k) between Gamma(n-i_0)/(n e^n) and 2^n Gamma(n-i_0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .tables import srec_max
from .temme import log_gamma


@dataclass(frozen=True)
class ExtremalResult:
    """m(n, k) together with one admissible tuple realizing it."""

    n: int
    k: int
    m: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class GammaBounds:
    """Log-domain squeeze of m(n, k); the gap log_upper - log_lower is n."""

    i0: int
    log_lower: float
    log_upper: float


def _check_feasible(n: int, k: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")
    top = srec_max(n)
    if not 1 <= k <= top:
        raise ValueError(f"k={k} outside [1, {top}] for n={n}")
    if k == 2 or k == top - 1:
        raise ValueError(f"k={k} is infeasible for n={n}: no admissible tuple exists")


@lru_cache(maxsize=8)
def _dp_rows(n: int) -> list[list[int | None]]:
    """rows[j][s]: minimal product of a subset of {j, ..., n} summing to s.

    Entries are None when s is unreachable; the empty subset gives
    rows[j][0] = 1.  Index j runs 2..n+1 (rows[0], rows[1] unused).
    """
    top = srec_max(n) - 1
    base: list[int | None] = [None] * (top + 1)
    base[0] = 1
    rows = [base] * (n + 2)
    for j in range(n, 1, -1):
        prev = rows[j + 1]
        cur = prev[:]
        for s in range(j, top + 1):
            reach = prev[s - j]
            if reach is not None:
                cand = reach * j
                if cur[s] is None or cand < cur[s]:
                    cur[s] = cand
        rows[j] = cur
    return rows


def min_product(n: int, k: int) -> ExtremalResult:
    """Exact m(n, k) with a witness, by subset-sum DP over {2, ..., n}.

    When several tuples share the minimal product the lexicographically
    smallest one is returned: the backtrack walks elements upward and
    keeps j whenever some optimal subset contains it.

    >>> min_product(6, 12)
    ExtremalResult(n=6, k=12, m=30, witness=(1, 5, 6))
    >>> min_product(10, 7).witness
    (1, 6)
    """
    _check_feasible(n, k)
    rows = _dp_rows(n)
    s = k - 1
    m = rows[2][s]
    if m is None:
        raise ValueError(f"k={k} is infeasible for n={n}")  # unreachable after _check_feasible
    witness = [1]
    for j in range(2, n + 1):
        if s == 0:
            break
        nxt = rows[j + 1]
        if s >= j and nxt[s - j] is not None and nxt[s - j] * j == rows[j][s]:
            witness.append(j)
            s -= j
    return ExtremalResult(n, k, m, tuple(witness))


def _check_i0_domain(n: int, k: int) -> None:
    if n < 4:
        raise ValueError("i0 requires n >= 4")
    if not n + 1 <= k <= srec_max(n):
        raise ValueError(f"i0 requires n+1 <= k <= n(n+1)/2, got n={n}, k={k}")


def i0_greedy(n: int, k: int) -> int:
    """Greatest i with k - 1 >= n + (n-1) + ... + (n-i), by accumulation."""
    _check_i0_domain(n, k)
    total = n
    i = 0
    while i < n - 1 and total + (n - i - 1) <= k - 1:
        i += 1
        total += n - i
    return i


def i0_closed(n: int, k: int) -> int:
    """Closed form floor((2n - 1 - sqrt(4n^2 + 4n - 8k + 9)) / 2).

    Uses the exact integer square root: the radicand is a perfect
    square at both ends of the k range (k = n+1 and k = n(n+1)/2), the
    classic spot where a float floor goes off by one.

    >>> [i0_closed(10, k) for k in (11, 27, 55)]
    [0, 1, 8]
    """
    _check_i0_domain(n, k)
    radicand = 4 * n * n + 4 * n - 8 * k + 9
    if radicand < 0:
        raise ValueError("negative radicand; k out of range")  # impossible within domain
    root = math.isqrt(radicand)
    if root * root == radicand:
        return (2 * n - 1 - root) // 2
    # true sqrt lies in (root, root+1): floor drops by one when parity lands even
    return (2 * n - 2 - root) // 2


def gamma_bounds(n: int, k: int) -> GammaBounds:
    """Log-domain squeeze Gamma(n+1)/Gamma(n-i0) <= m(n,k) <= same * e^n."""
    _check_i0_domain(n, k)
    if k == srec_max(n) - 1:
        raise ValueError(f"k={k} is infeasible for n={n}")
    i0 = i0_closed(n, k)
    log_lower = log_gamma(n + 1.0) - log_gamma(float(n - i0))
    return GammaBounds(i0, log_lower, log_lower + n)


def srec_count_bounds(n: int, k: int) -> tuple[float, float]:
    """Log-domain bracket of the srec count C(n, k), 3 <= k <= n(n+1)/2.

    Dispatches on the case split: for 3 <= k <= n the bracket is
    n!/((k-1) n) <= C(n,k) <= 2^n n!/(k-1); for k >= n+1 it is
    Gamma(n-i0)/(n e^n) <= C(n,k) <= 2^n Gamma(n-i0).
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    top = srec_max(n)
    if not 3 <= k <= top:
        raise ValueError(f"k={k} outside [3, {top}] for n={n}")
    if k == top - 1:
        raise ValueError(f"k={k} has count zero for n={n}; log bounds are undefined")
    ln2 = math.log(2.0)
    if k <= n:
        log_fact = log_gamma(n + 1.0)
        log_lower = log_fact - math.log(k - 1) - math.log(n)
        log_upper = n * ln2 + log_fact - math.log(k - 1)
    else:
        i0 = i0_closed(n, k)
        log_g = log_gamma(float(n - i0))
        log_lower = log_g - n - math.log(n)
        log_upper = n * ln2 + log_g
    return log_lower, log_upper


def format_witness(witness: Sequence[int]) -> str:
    """Witness tuples serialize as ``1+5+6``."""
    return "+".join(str(v) for v in witness)


def extremal_csv(results: Sequence[ExtremalResult]) -> str:
    """CSV document ``n,k,m,witness`` with m in decimal."""
    lines = ["n,k,m,witness"]
    lines.extend(f"{r.n},{r.k},{r.m},{format_witness(r.witness)}" for r in results)
    return "\n".join(lines) + "\n"

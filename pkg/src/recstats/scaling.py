"""
Scaled limit shapes of the record-count and record-sum distributions.

Rescale k to x in [0, 1] (x = k/n for rec, x = 2k/(n(n+1)) for srec)
and the log counts collapse onto simple curves:

    ln f_n(x) / (n ln n)   -> 1 - x        (rec)
    ln phi_n(x) / (n ln n) -> sqrt(1 - x)  (srec)

uniformly on [0, 1], at speed O(1/ln n).  Here f_n(x) is c(n, floor(nx))
for x >= 1/n and c(n, 1) below, and phi_n(x) is a three-branch step
curve: (n-1)! before 6/(n(n+1)), the constant 1 from 1 - 2/(n(n+1)) on,
and C(n, floor(n(n+1)x/2)) in between.  The branch cuts dodge the two
zero coefficients, so logs always exist.  Branches are tested in that
order; for n = 2 the first branch swallows [0, 1) and the middle one is
vacuous.

The sup deviation from the target curve is computed exactly, never by
grid search: psi_n is constant on segments while the target decreases,
so each segment attains its extreme deviation at an endpoint (the right
endpoint as a one-sided limit).  tau(n) = sup deviation * ln n is the
bounded series certifying the uniform convergence rate.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .tables import (
    REC,
    SREC,
    CountTable,
    big_ln,
    iter_rec_rows,
    iter_srec_rows,
    rec_table,
    srec_max,
    srec_table,
)

SREC_SERIES_LIMIT = 300  # rows hold ~n^2/2 big integers each


@dataclass(frozen=True)
class ScaledCurve:
    """Samples (x, ln value / (n ln n)) of one scaled step curve."""

    n: int
    stat: str
    samples: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class DeviationReport:
    """Exact sup deviation of the scaled curve from its target shape."""

    n: int
    stat: str
    sup_dev: float
    tau: float
    argmax_x: float


def _check_stat(stat: str) -> None:
    if stat not in (REC, SREC):
        raise ValueError(f"stat must be {REC!r} or {SREC!r}")


def target_value(stat: str, x: float) -> float:
    """Limit shape: 1 - x for rec, sqrt(1 - x) for srec."""
    _check_stat(stat)
    return 1.0 - x if stat == REC else math.sqrt(1.0 - x)


@lru_cache(maxsize=32)
def _cached_table(n: int, stat: str) -> CountTable:
    return rec_table(n) if stat == REC else srec_table(n)


def fn_value(n: int, x: float) -> int:
    """Step extension of the rec counts: c(n, floor(nx)), held at c(n, 1) below 1/n.

    The branch test and the floor are evaluated exactly for the binary
    value of ``x`` (floats convert to Fraction losslessly), so the two
    can never disagree at a threshold.

    >>> fn_value(5, 0.0)
    24
    >>> fn_value(5, 1.0)
    1
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    exact_x = Fraction(x)
    table = _cached_table(n, REC)
    if exact_x >= Fraction(1, n):
        return table.coeffs[math.floor(n * exact_x)]
    return table.coeffs[1]


def phin_value(n: int, x: float) -> int:
    """Step extension of the srec counts, branches tested in order.

    Exact-rational branch tests keep the middle branch index inside
    [3, n(n+1)/2 - 2], clear of both zero coefficients.

    >>> phin_value(5, 0.0)
    24
    >>> phin_value(5, 1.0)
    1
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    exact_x = Fraction(x)
    pairs = n * (n + 1)
    if exact_x < Fraction(6, pairs):
        return math.factorial(n - 1)
    if exact_x >= 1 - Fraction(2, pairs):
        return 1
    return _cached_table(n, SREC).coeffs[math.floor(srec_max(n) * exact_x)]


def _segments(n: int, stat: str, row: Sequence[int]) -> list[tuple[float, float, int]]:
    """Constant segments (x_lo, x_hi, value) covering [0, 1], in order.

    ``row`` is the dense coefficient row, indexed by k.
    """
    if stat == REC:
        segs = [(0.0, 1.0 / n, row[1])]
        segs.extend((k / n, (k + 1) / n, row[k]) for k in range(1, n))
        segs.append((1.0, 1.0, row[n]))
        return segs
    top = srec_max(n)
    first_cut = min(3.0 / top, 1.0)
    segs = [(0.0, first_cut, math.factorial(n - 1))]
    # middle branch k = 3 .. top-2 is empty for n = 2
    segs.extend((k / top, (k + 1) / top, row[k]) for k in range(3, top - 1))
    segs.append((max(first_cut, (top - 1.0) / top), 1.0, 1))
    return segs


def _row_for(n: int, stat: str, table: CountTable | None) -> list[int]:
    if table is not None:
        if table.n != n or table.kind != stat:
            raise ValueError("supplied table does not match (n, stat)")
        src = table
    else:
        src = _cached_table(n, stat)
    size = n if stat == REC else srec_max(n)
    return [src.coeffs.get(k, 0) for k in range(size + 1)]


def _sup_from_row(n: int, stat: str, row: Sequence[int]) -> DeviationReport:
    n_ln_n = n * math.log(n)
    best_dev = -1.0
    best_x = 0.0
    for x_lo, x_hi, value in _segments(n, stat, row):
        y = big_ln(value) / n_ln_n
        for x in (x_lo, x_hi):
            dev = abs(y - target_value(stat, x))
            if dev > best_dev:
                best_dev = dev
                best_x = x
    return DeviationReport(n, stat, best_dev, best_dev * math.log(n), best_x)


def sup_deviation(n: int, stat: str, table: CountTable | None = None) -> DeviationReport:
    """Exact sup over [0, 1] of |scaled curve - target|, and tau = sup * ln n.

    Every constant segment is evaluated at both endpoints, the right one
    standing in for the one-sided limit, so no grid can under-report.

    >>> r = sup_deviation(2, "rec")
    >>> (r.sup_dev, r.argmax_x)
    (1.0, 0.0)
    """
    _check_stat(stat)
    if n < 2:
        raise ValueError("n must be >= 2")
    return _sup_from_row(n, stat, _row_for(n, stat, table))


def default_threads() -> int:
    """Worker cap: RECSTAT_THREADS when set, else machine parallelism."""
    env = os.environ.get("RECSTAT_THREADS")
    if env is not None:
        try:
            cap = int(env)
        except ValueError:
            raise ValueError(f"RECSTAT_THREADS must be an integer, got {env!r}") from None
        if cap < 1:
            raise ValueError("RECSTAT_THREADS must be >= 1")
        return cap
    return os.cpu_count() or 1


def tau_series(
    stat: str, n_min: int, n_max: int, threads: int | None = None
) -> list[DeviationReport]:
    """DeviationReport for every n in [n_min, n_max], ascending.

    Rows are built once, incrementally; with threads > 1 the per-row sup
    scans fan out to a thread pool while results are collected in n
    order, so output is identical regardless of schedule.
    """
    _check_stat(stat)
    if not 2 <= n_min <= n_max:
        raise ValueError("need 2 <= n_min <= n_max")
    if stat == SREC and n_max > SREC_SERIES_LIMIT:
        raise ValueError(f"srec series is limited to n_max <= {SREC_SERIES_LIMIT}")
    if threads is None:
        threads = default_threads()
    rows = iter_rec_rows(n_max) if stat == REC else iter_srec_rows(n_max)
    wanted = ((n, row) for n, row in rows if n >= n_min)
    if threads <= 1:
        return [_sup_from_row(n, stat, row) for n, row in wanted]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_sup_from_row, n, stat, row) for n, row in wanted]
        return [f.result() for f in futures]


def curve_samples(
    n: int,
    stat: str,
    num_points: int | None = None,
    table: CountTable | None = None,
) -> ScaledCurve:
    """The scaled curve sampled at its breakpoints or on an even grid.

    ``num_points=None`` samples every segment's left endpoint plus x = 1
    (the full step structure); an integer asks for that many evenly
    spaced points, and needs num_points >= 2.
    """
    _check_stat(stat)
    if n < 2:
        raise ValueError("n must be >= 2")
    row = _row_for(n, stat, table)
    n_ln_n = n * math.log(n)
    samples: list[tuple[float, float]] = []
    if num_points is None:
        for x_lo, _, value in _segments(n, stat, row):
            samples.append((x_lo, big_ln(value) / n_ln_n))
        if samples[-1][0] != 1.0:
            samples.append((1.0, big_ln(row[-1]) / n_ln_n))
    else:
        if num_points < 2:
            raise ValueError("num_points must be >= 2")
        value_at = fn_value if stat == REC else phin_value
        for i in range(num_points):
            x = i / (num_points - 1)
            samples.append((x, big_ln(value_at(n, x)) / n_ln_n))
    return ScaledCurve(n, stat, tuple(samples))


def curve_csv(curve: ScaledCurve) -> str:
    """CSV document ``x,psi_n,target``."""
    lines = ["x,psi_n,target"]
    lines.extend(
        f"{x!r},{y!r},{target_value(curve.stat, x)!r}" for x, y in curve.samples
    )
    return "\n".join(lines) + "\n"


def tau_csv(reports: Iterable[DeviationReport]) -> str:
    """CSV document ``n,sup_dev,tau,argmax_x``."""
    lines = ["n,sup_dev,tau,argmax_x"]
    lines.extend(
        f"{r.n},{r.sup_dev!r},{r.tau!r},{r.argmax_x!r}" for r in reports
    )
    return "\n".join(lines) + "\n"

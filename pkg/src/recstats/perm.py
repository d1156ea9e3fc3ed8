"""
Permutations in one-line notation and their record statistics.

A permutation of {1, ..., n} is stored as the tuple of its values
(a_1, ..., a_n).  An entry a_j is a *record* (a left-to-right maximum)
when a_i < a_j for every i < j; the first entry is always a record.
Two statistics are derived from the records: ``rec``, the number of
records, and ``srec``, the sum of the positions of the records.

The inversion code used throughout is the tuple (r_1, ..., r_n) with

    r_i = #{j < i : a_j > a_i},

a Lehmer-style code satisfying 0 <= r_i <= i-1.  The map is a bijection
onto all such tuples, and r_i = 0 exactly at the record positions, so
records of a uniform random permutation occur independently with
probability 1/i at position i.  Decoding independent uniform digits is
therefore also how :func:`sample_uniform` draws uniform permutations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation.

    Construction validates in O(n) that ``entries`` is a bijection of
    {1, ..., n} with n >= 1.

    >>> Permutation((2, 1, 3))
    Permutation(entries=(2, 1, 3))
    >>> Permutation((1, 1, 3))
    Traceback (most recent call last):
        ...
    ValueError: entries are not a permutation of 1..3
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n == 0:
            raise ValueError("a permutation needs at least one entry")
        seen = [False] * (n + 1)
        for a in self.entries:
            if not isinstance(a, int) or not 1 <= a <= n or seen[a]:
                raise ValueError(f"entries are not a permutation of 1..{n}")
            seen[a] = True

    @classmethod
    def from_string(cls, text: str) -> Permutation:
        """Parse the comma-separated serialization, e.g. ``"4,7,5,1,6,8,2,3"``."""
        try:
            values = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"not a comma-separated list of integers: {text!r}") from None
        return cls(values)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]


@dataclass(frozen=True)
class RecordProfile:
    """Record positions of one permutation together with rec and srec."""

    positions: tuple[int, ...]
    rec: int = field(init=False)
    srec: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "rec", len(self.positions))
        object.__setattr__(self, "srec", sum(self.positions))


def record_positions(entries: tuple[int, ...]) -> tuple[int, ...]:
    """Positions (1-based) of the records of a raw value tuple.

    Running-maximum scan; no validation, callers pass known permutations.
    """
    positions = []
    best = 0
    for i, a in enumerate(entries, start=1):
        if a > best:
            positions.append(i)
            best = a
    return tuple(positions)


def records(p: Permutation) -> RecordProfile:
    """Record profile of ``p``.

    >>> records(Permutation((4, 7, 5, 1, 6, 8, 2, 3)))
    RecordProfile(positions=(1, 2, 6), rec=3, srec=9)
    >>> records(Permutation((3, 2, 1))).positions
    (1,)
    """
    return RecordProfile(record_positions(p.entries))


def lehmer_encode(p: Permutation) -> tuple[int, ...]:
    """Code tuple r with r_i = #{j < i : a_j > a_i}.

    >>> lehmer_encode(Permutation((4, 7, 5, 1, 6, 8, 2, 3)))
    (0, 0, 1, 3, 1, 0, 5, 5)
    """
    entries = p.entries
    return tuple(
        sum(1 for j in range(i) if entries[j] > entries[i]) for i in range(len(entries))
    )


def lehmer_decode(code: tuple[int, ...]) -> Permutation:
    """Inverse of :func:`lehmer_encode`.

    Rejects digits outside 0 <= r_i <= i-1.  Position i receives the
    (r_i+1)-th largest of the values still unused at step i, walking the
    positions from the right.

    >>> lehmer_decode((0, 0, 1, 3, 1, 0, 5, 5))
    Permutation(entries=(4, 7, 5, 1, 6, 8, 2, 3))
    >>> lehmer_decode((0, 0, 0)).entries
    (1, 2, 3)
    """
    n = len(code)
    for i, r in enumerate(code, start=1):
        if not isinstance(r, int) or not 0 <= r <= i - 1:
            raise ValueError(f"code digit r_{i}={r} outside [0, {i - 1}]")
    remaining = list(range(1, n + 1))
    out = [0] * n
    for i in range(n, 0, -1):
        out[i - 1] = remaining.pop(len(remaining) - 1 - code[i - 1])
    return Permutation(tuple(out))


def _draw(rng: random.Random, n: int) -> Permutation:
    # independent digits r_i uniform on [0, i-1], then decode
    return lehmer_decode(tuple(rng.randrange(i) for i in range(1, n + 1)))


def sample_uniform(n: int, seed: int) -> Permutation:
    """One uniform random permutation of {1, ..., n}, deterministic in (n, seed).

    The generator is Python's Mersenne Twister (``random.Random(seed)``);
    one code digit is drawn per position with ``randrange(i)`` for
    i = 1..n in order and the digits are decoded, so the output is
    reproducible across runs and platforms.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return _draw(random.Random(seed), n)


def sample_uniform_many(n: int, seed: int, count: int) -> list[Permutation]:
    """``count`` permutations drawn from the single stream seeded once."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if count < 0:
        raise ValueError("count must be >= 0")
    rng = random.Random(seed)
    return [_draw(rng, n) for _ in range(count)]

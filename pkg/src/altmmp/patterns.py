"""Quadrant patterns, the mmp statistic, and brute-force distributions.

A quadrant pattern places one requirement on each of the four quadrants
around a chosen point of a permutation's graph: a lower bound k on the
number of points there (k = 0 imposes nothing), or None meaning the
quadrant must be empty.  The statistic mmp counts the positions whose
four quadrant counts satisfy all four requirements.

The distribution polynomials computed here by direct enumeration are
the ground truth that the recursion and series paths are checked
against.  Enumeration is capped by a configurable budget because the
class sizes grow like n!/2^n; the default cap of 13 covers roughly
2.2e7 permutations per class.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from . import _counting
from .permutations import AlternatingClass, generate_alternating
from .polynomials import ONE, Poly

DEFAULT_BUDGET = 13

EMPTY = None


class BudgetExceededError(ValueError):
    """Raised when an enumeration would exceed the configured length cap."""


@dataclass(frozen=True)
class QuadrantPattern:
    """Requirements (q1, q2, q3, q4) for quadrants I..IV.

    Each field is a nonnegative integer lower bound or None for "must be
    empty".  The text form uses the letter e for None: "1,0,e,0".
    """

    q1: int | None
    q2: int | None
    q3: int | None
    q4: int | None

    def __post_init__(self) -> None:
        for q in self.specs:
            if q is not None and (not isinstance(q, int) or q < 0):
                raise ValueError(f"quadrant spec must be None or an int >= 0: {q!r}")

    @property
    def specs(self) -> tuple[int | None, ...]:
        return (self.q1, self.q2, self.q3, self.q4)

    @classmethod
    def parse(cls, text: str) -> "QuadrantPattern":
        """Parse "a,b,c,d" with "e" standing for an empty-quadrant mark.

        >>> QuadrantPattern.parse("1,0,e,0")
        QuadrantPattern(q1=1, q2=0, q3=None, q4=0)
        """
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError(f"pattern needs exactly 4 fields: {text!r}")
        specs: list[int | None] = []
        for p in parts:
            if p == "e":
                specs.append(None)
            elif p.isdigit():
                specs.append(int(p))
            else:
                raise ValueError(f"pattern field must be a number or 'e': {p!r}")
        return cls(*specs)

    def __str__(self) -> str:
        return ",".join("e" if q is None else str(q) for q in self.specs)

    def under_reverse(self) -> "QuadrantPattern":
        """Pattern whose statistic on the reversed permutation matches."""
        return QuadrantPattern(self.q2, self.q1, self.q4, self.q3)

    def under_complement(self) -> "QuadrantPattern":
        return QuadrantPattern(self.q4, self.q3, self.q2, self.q1)

    def under_reverse_complement(self) -> "QuadrantPattern":
        return QuadrantPattern(self.q3, self.q4, self.q1, self.q2)


def all_patterns(entries: Sequence[int | None] = (0, 1, EMPTY)) -> Iterator[QuadrantPattern]:
    """All patterns whose four fields are drawn from ``entries``."""
    for specs in itertools.product(entries, repeat=4):
        yield QuadrantPattern(*specs)


def quadrant_counts(values: Sequence[int], i: int) -> tuple[int, int, int, int]:
    """Counts of points in quadrants I..IV around 1-based position i.

    >>> quadrant_counts((4, 7, 1, 5, 6, 9, 2, 8, 3), 4)
    (3, 1, 2, 2)
    >>> quadrant_counts((4, 7, 1, 5, 6, 9, 2, 8, 3), 3)
    (6, 2, 0, 0)
    """
    if not 1 <= i <= len(values):
        raise ValueError(f"position {i} out of range 1..{len(values)}")
    pivot = values[i - 1]
    n1 = n2 = n3 = n4 = 0
    for j, v in enumerate(values, start=1):
        if j > i:
            if v > pivot:
                n1 += 1
            else:
                n4 += 1
        elif j < i:
            if v > pivot:
                n2 += 1
            else:
                n3 += 1
    return n1, n2, n3, n4


def _satisfied(count: int, spec: int | None) -> bool:
    return count == 0 if spec is None else count >= spec


def matches(values: Sequence[int], i: int, pattern: QuadrantPattern) -> bool:
    """True when position i meets all four quadrant requirements."""
    counts = quadrant_counts(values, i)
    return all(_satisfied(c, q) for c, q in zip(counts, pattern.specs))


def mmp(values: Sequence[int], pattern: QuadrantPattern) -> int:
    """Number of positions of the permutation matching the pattern.

    >>> mmp((2, 1, 4, 5, 3), QuadrantPattern(1, 0, None, 0))
    2
    """
    return sum(1 for i in range(1, len(values) + 1) if matches(values, i, pattern))


def _check_budget(n: int, budget: int | None) -> None:
    cap = DEFAULT_BUDGET if budget is None else budget
    if n > cap:
        raise BudgetExceededError(
            f"length {n} exceeds the enumeration budget of {cap}; "
            "raise the budget to enumerate this class"
        )


def _stratum_pure(n: int, cls: AlternatingClass, pattern: QuadrantPattern, first: int) -> tuple[int, ...]:
    counts = [0] * (n + 1)
    first_value = None if first == 0 else first
    for perm in generate_alternating(n, cls, first_value=first_value):
        counts[mmp(perm, pattern)] += 1
    return tuple(counts)


def _stratum_kernel(n: int, cls: AlternatingClass, pattern: QuadrantPattern, first: int) -> tuple[int, ...]:
    down = np.zeros(n, dtype=np.bool_)
    for i in range(1, n):
        down[i] = cls.descends_into(i + 1)
    specs = [-1 if q is None else q for q in pattern.specs]
    out = _counting.count_stratum(n, down, specs[0], specs[1], specs[2], specs[3], first)
    return tuple(int(c) for c in out)


@lru_cache(maxsize=None)
def _stratum(n: int, cls: AlternatingClass, pattern: QuadrantPattern, first: int) -> tuple[int, ...]:
    """Statistic histogram over one stratum; first = 0 means the whole class."""
    if n >= 2 and _counting.count_stratum is not None:
        return _stratum_kernel(n, cls, pattern, first)
    return _stratum_pure(n, cls, pattern, first)


def _histogram(
    n: int,
    cls: AlternatingClass,
    pattern: QuadrantPattern,
    shards: int,
) -> tuple[int, ...]:
    if shards <= 1:
        return _stratum(n, cls, pattern, 0)
    with ThreadPoolExecutor(max_workers=shards) as pool:
        futures = [
            pool.submit(_stratum, n, cls, pattern, first)
            for first in range(1, n + 1)
        ]
        parts = [f.result() for f in futures]
    return tuple(sum(col) for col in zip(*parts))


def distribution(
    n: int,
    cls: AlternatingClass,
    pattern: QuadrantPattern,
    *,
    budget: int | None = None,
    shards: int = 1,
) -> Poly:
    """Distribution of the statistic over the alternating class, by count.

    Coefficient k of the result is the number of class members whose
    statistic equals k; the value at 1 is therefore the class size.
    n = 0 contributes the empty permutation with statistic 0.

    >>> from .permutations import UP_DOWN
    >>> str(distribution(4, UP_DOWN, QuadrantPattern(1, 0, None, 0)))
    '2x + 3x^2'
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n == 0:
        return ONE
    _check_budget(n, budget)
    return Poly(_histogram(n, cls, pattern, shards))


@dataclass(frozen=True)
class MarkedDistribution:
    """Distribution split by whether the first value is the maximum.

    ``first_is_max`` collects the class members with that property and
    ``others`` the rest, both as statistic histograms.  The split carries
    the indicator refinement: weighting the first stratum by one extra
    power of x gives the barred polynomial, while merging the strata
    plainly recovers the ordinary distribution.
    """

    first_is_max: Poly
    others: Poly

    def plain(self) -> Poly:
        return self.first_is_max + self.others

    def barred(self) -> Poly:
        return self.first_is_max.shift(1) + self.others


def marked_distribution(
    n: int,
    cls: AlternatingClass,
    pattern: QuadrantPattern,
    *,
    budget: int | None = None,
    shards: int = 1,
) -> MarkedDistribution:
    """Distribution refined by the indicator that position 1 holds n.

    >>> from .permutations import DOWN_UP
    >>> str(marked_distribution(3, DOWN_UP, QuadrantPattern(1, 0, None, 0)).barred())
    '2x^2'
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n == 0:
        return MarkedDistribution(first_is_max=Poly(), others=ONE)
    _check_budget(n, budget)
    top = Poly(_stratum(n, cls, pattern, n))
    full = Poly(_histogram(n, cls, pattern, shards))
    return MarkedDistribution(first_is_max=top, others=full - top)

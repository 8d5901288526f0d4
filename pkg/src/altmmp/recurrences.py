"""Zigzag numbers and the convolution recursions for the six families.

The recursions below compute, without any enumeration, the distribution
of the statistic that counts positions with at least one point to the
upper right and an empty lower-left quadrant ("1,0,e,0").  Removing the
value 1 from an alternating permutation and splitting at its position
yields the convolution structure; the barred variants track whether the
first value is the maximum, which is what makes the down-up recursions
close.

Everything here is exact integer arithmetic and memoized, so whole
tables cost milliseconds.  The zigzag numbers are computed by the
boustrophedon triangle, independently of the series engine, so the two
can cross-validate.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from math import comb

from .permutations import DOWN_UP, UP_DOWN, AlternatingClass
from .polynomials import ONE, X, Poly

ONE_MINUS_X = Poly([1, -1])


class Family(Enum):
    """The six polynomial families, named by class, parity and marking."""

    A = "A"  # up-down, even length
    B = "B"  # up-down, odd length
    C = "C"  # down-up, even length
    D = "D"  # down-up, odd length
    DBAR = "Dbar"  # D refined by the first-value-is-maximum mark
    CBAR = "Cbar"  # C refined by the same mark

    @property
    def alternating_class(self) -> AlternatingClass:
        return UP_DOWN if self in (Family.A, Family.B) else DOWN_UP

    @property
    def odd_lengths(self) -> bool:
        return self in (Family.B, Family.D, Family.DBAR)

    @property
    def barred(self) -> bool:
        return self in (Family.DBAR, Family.CBAR)

    def length(self, row: int) -> int:
        """Length of the permutations counted in table row ``row``."""
        if row < 0:
            raise ValueError("row must be nonnegative")
        return 2 * row + 1 if self.odd_lengths else 2 * row


@lru_cache(maxsize=None)
def _boustrophedon_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _boustrophedon_row(n - 1)[::-1]
    row = [0]
    for v in prev:
        row.append(row[-1] + v)
    return tuple(row)


def zigzag(n: int) -> int:
    """Number of alternating permutations of length n (either class).

    >>> [zigzag(n) for n in range(8)]
    [1, 1, 1, 2, 5, 16, 61, 272]
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    return _boustrophedon_row(n)[-1]


@lru_cache(maxsize=None)
def _a(n: int) -> Poly:
    # up-down, length 2n; convolution over the position of the value 1
    if n == 0:
        return ONE
    total = Poly()
    for k in range(n):
        total = total + comb(2 * n - 1, 2 * k) * zigzag(2 * n - 2 * k - 1) * _a(k)
    return X * total


@lru_cache(maxsize=None)
def _b(n: int) -> Poly:
    # up-down, length 2n+1
    if n == 0:
        return ONE
    total = Poly()
    for k in range(n):
        total = total + comb(2 * n, 2 * k) * zigzag(2 * n - 2 * k) * _a(k)
    return _a(n) + X * total


@lru_cache(maxsize=None)
def _dbar(n: int) -> Poly:
    # down-up, length 2n+1, first value marked as maximum
    if n == 0:
        return X
    total = Poly()
    for k in range(1, n + 1):
        total = total + comb(2 * n, 2 * k - 1) * zigzag(2 * n - 2 * k + 1) * _dbar(k - 1)
    return X * total


@lru_cache(maxsize=None)
def _d(n: int) -> Poly:
    # down-up, length 2n+1; unmark the refinement
    return _dbar(n) + ONE_MINUS_X * _a(n)


@lru_cache(maxsize=None)
def _cbar(n: int) -> Poly:
    # down-up, length 2n, first value marked as maximum
    if n == 0:
        return ONE
    total = Poly()
    for k in range(1, n):
        total = total + comb(2 * n - 1, 2 * k - 1) * zigzag(2 * n - 2 * k) * _dbar(k - 1)
    return _dbar(n - 1) + X * total


@lru_cache(maxsize=None)
def _c(n: int) -> Poly:
    # down-up, length 2n
    if n == 0:
        return ONE
    return _cbar(n) + ONE_MINUS_X * _b(n - 1)


_BY_FAMILY = {
    Family.A: _a,
    Family.B: _b,
    Family.C: _c,
    Family.D: _d,
    Family.DBAR: _dbar,
    Family.CBAR: _cbar,
}


def _row_for_length(fam: Family, n: int) -> int:
    if n < 0 or n % 2 != (1 if fam.odd_lengths else 0):
        raise ValueError(f"family {fam.value} has no length-{n} entry")
    return n // 2


def family_poly(fam: Family, n: int) -> Poly:
    """Distribution polynomial of the family at permutation length n.

    >>> str(family_poly(Family.A, 4))
    '2x + 3x^2'
    >>> str(family_poly(Family.D, 5))
    '2x + 9x^2 + 5x^3'
    """
    if fam.barred:
        raise ValueError("use barred_poly for the marked families")
    return _BY_FAMILY[fam](_row_for_length(fam, n))


def barred_poly(fam: Family, n: int) -> Poly:
    """Marked-refinement polynomial (first value equal to the maximum
    carries one extra power of x) at permutation length n.

    >>> str(barred_poly(Family.DBAR, 5))
    '8x^2 + 8x^3'
    """
    if not fam.barred:
        raise ValueError("barred_poly handles only the marked families")
    return _BY_FAMILY[fam](_row_for_length(fam, n))

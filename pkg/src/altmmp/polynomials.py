"""Dense univariate polynomials over exact rationals.

The distribution polynomials handled throughout this package have small
degree but large integer coefficients, so a polynomial is simply a tuple
of `fractions.Fraction` coefficients, lowest power first, trimmed so the
last entry is nonzero.  The zero polynomial stores no coefficients and
reports degree -1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Union

Scalar = Union[int, Fraction]


def _as_fraction(value: Scalar) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


class Poly:
    """A polynomial in one variable with exact rational coefficients.

    >>> p = Poly([0, 2, 3])
    >>> str(p)
    '2x + 3x^2'
    >>> p.degree, p.coeff(1), p(1)
    (2, Fraction(2, 1), Fraction(5, 1))
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        items = [_as_fraction(c) for c in coeffs]
        while items and items[-1] == 0:
            items.pop()
        self._coeffs = tuple(items)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 as the sentinel for the zero polynomial."""
        return len(self._coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        """Coefficient of x^k; zero beyond the degree."""
        if k < 0:
            raise ValueError("power must be nonnegative")
        if k >= len(self._coeffs):
            return Fraction(0)
        return self._coeffs[k]

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly([other])
        return NotImplemented

    def __hash__(self) -> int:
        if self.degree <= 0:
            return hash(self.coeff(0))  # constants equal scalars, so hash alike
        return hash(self._coeffs)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self._coeffs)

    def __add__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        return self + (-other if isinstance(other, Poly) else Poly([other]).__neg__())

    def __rsub__(self, other: Scalar) -> "Poly":
        return Poly([other]) + (-self)

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self._coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, value: Scalar) -> Fraction:
        """Exact evaluation by Horner's rule."""
        v = _as_fraction(value)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * v + c
        return acc

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k.

        >>> str(Poly([2, 1]).shift(2))
        '2x^2 + x^3'
        """
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if not self._coeffs:
            return Poly()
        return Poly((Fraction(0),) * k + self._coeffs)

    def is_unimodal(self) -> bool:
        """True when the coefficients rise weakly and then fall weakly."""
        cs = self._coeffs
        i = 0
        while i + 1 < len(cs) and cs[i] <= cs[i + 1]:
            i += 1
        while i + 1 < len(cs) and cs[i] >= cs[i + 1]:
            i += 1
        return i + 1 >= len(cs)

    def to_strings(self) -> list[str]:
        """Coefficients as decimal strings, "num/den" when non-integer."""
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> "Poly":
        return cls(Fraction(s) for s in items)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            body = _format_term(abs(c), k)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        items = [int(c) if c.denominator == 1 else str(c) for c in self._coeffs]
        return f"Poly({items!r})"


def _format_term(c: Fraction, k: int) -> str:
    # c is positive here
    if k == 0:
        return str(c)
    if c == 1:
        num = ""
    elif c.denominator == 1:
        num = str(c)
    else:
        num = f"({c})"
    return num + ("x" if k == 1 else f"x^{k}")


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])

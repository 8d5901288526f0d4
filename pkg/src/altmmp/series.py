"""Truncated power series in t whose coefficients are polynomials in x.

A series of order N keeps the ordinary coefficients of t^0..t^N; the
exponential-generating-function coefficient of t^n is n! times the
stored entry, extracted by `egf_coeff`.  All arithmetic is exact over
the rationals and never reads past the truncation order.

The six distribution families are assembled here from their defining
differential and integral equations: the even up-down family is
sec(t)^x, the odd one solves y' = sec(t)^x (1-x+x sec(t)), the marked
down-up family solves y' = x tan(t) y + x, and the remaining three
follow by the unmarking relations.  A hypergeometric evaluator supports
checking the closed form of the odd up-down family under both
Pochhammer conventions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Literal, Union

from .polynomials import ONE, X, Poly, Scalar
from .recurrences import ONE_MINUS_X, Family

Coeffable = Union[Poly, int, Fraction]


def _as_poly(value: Coeffable) -> Poly:
    return value if isinstance(value, Poly) else Poly([value])


class Series:
    """Truncated series sum_{n<=N} c_n t^n with c_n in Q[x]."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coeffable]) -> None:
        items = tuple(_as_poly(c) for c in coeffs)
        if not items:
            raise ValueError("a series stores at least the t^0 coefficient")
        self._coeffs = items

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([Poly()] * (order + 1))

    @classmethod
    def constant(cls, value: Coeffable, order: int) -> "Series":
        return cls([_as_poly(value)] + [Poly()] * order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Poly, ...]:
        return self._coeffs

    def coeff(self, n: int) -> Poly:
        """Ordinary coefficient of t^n."""
        if not 0 <= n <= self.order:
            raise ValueError(f"t-power {n} outside stored range 0..{self.order}")
        return self._coeffs[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def _match(self, other: "Series") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "Series | Coeffable") -> "Series":
        if not isinstance(other, Series):
            other = Series.constant(other, self.order)
        self._match(other)
        return Series(a + b for a, b in zip(self._coeffs, other._coeffs))

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(-c for c in self._coeffs)

    def __sub__(self, other: "Series | Coeffable") -> "Series":
        if not isinstance(other, Series):
            other = Series.constant(other, self.order)
        return self + (-other)

    def __rsub__(self, other: "Coeffable") -> "Series":
        return (-self) + other

    def __mul__(self, other: "Series | Coeffable") -> "Series":
        if not isinstance(other, Series):
            p = _as_poly(other)
            return Series(c * p for c in self._coeffs)
        self._match(other)
        n = self.order
        out = [Poly() for _ in range(n + 1)]
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other._coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return Series(out)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return any(self._coeffs)

    def __repr__(self) -> str:
        return f"Series(order={self.order}, coeffs={[str(c) for c in self._coeffs]})"


def egf_coeff(f: Series, n: int) -> Poly:
    """Coefficient of t^n/n!, the table polynomial at length n."""
    return f.coeff(n) * factorial(n)


def integrate(f: Series) -> Series:
    """Definite integral from 0; keeps the order, dropping the top term."""
    out = [Poly()]
    for n in range(f.order):
        out.append(f.coeff(n) * Fraction(1, n + 1))
    return Series(out)


def differentiate(f: Series) -> Series:
    """Termwise derivative; the order drops by one."""
    if f.order < 1:
        raise ValueError("cannot differentiate an order-0 series")
    return Series((n + 1) * f.coeff(n + 1) for n in range(f.order))


def reciprocal(f: Series) -> Series:
    """Multiplicative inverse; needs a nonzero constant t^0 coefficient."""
    c0 = f.coeff(0)
    if c0.degree > 0 or not c0:
        raise ValueError("reciprocal needs a nonzero constant leading coefficient")
    inv0 = Fraction(1) / c0.coeff(0)
    out = [Poly([inv0])]
    for n in range(1, f.order + 1):
        acc = Poly()
        for k in range(1, n + 1):
            acc = acc + f.coeff(k) * out[n - k]
        out.append(acc * -inv0)
    return Series(out)


def log1(f: Series) -> Series:
    """Logarithm of a series with constant term 1."""
    if f.coeff(0) != ONE:
        raise ValueError("log needs constant term 1")
    out = [Poly()]
    for n in range(1, f.order + 1):
        acc = f.coeff(n)
        for j in range(1, n):
            acc = acc - Fraction(j, n) * out[j] * f.coeff(n - j)
        out.append(acc)
    return Series(out)


def exp0(f: Series) -> Series:
    """Exponential of a series with constant term 0."""
    if f.coeff(0):
        raise ValueError("exp needs constant term 0")
    out = [ONE]
    for n in range(1, f.order + 1):
        acc = Poly()
        for j in range(1, n + 1):
            acc = acc + Fraction(j, n) * f.coeff(j) * out[n - j]
        out.append(acc)
    return Series(out)


def pow_poly(f: Series, exponent: Poly) -> Series:
    """f raised to a polynomial exponent, via exp(exponent * log f).

    >>> secx = pow_poly(sec_series(5), X)
    >>> str(egf_coeff(secx, 4))
    '2x + 3x^2'
    """
    return exp0(Series(exponent * c for c in log1(f).coeffs))


def solve_linear_ode(p: Series, q: Series, y0: Poly) -> Series:
    """Unique truncated solution of y' = p y + q with y(0) = y0.

    >>> dbar = solve_linear_ode(X * tan_series(5), Series.constant(X, 5), Poly())
    >>> str(egf_coeff(dbar, 3))
    '2x^2'
    """
    p._match(q)
    out = [y0]
    for n in range(p.order):
        acc = q.coeff(n)
        for j in range(n + 1):
            acc = acc + p.coeff(j) * out[n - j]
        out.append(acc * Fraction(1, n + 1))
    return Series(out)


@lru_cache(maxsize=None)
def cos_series(order: int) -> Series:
    return Series(
        Fraction((-1) ** (n // 2), factorial(n)) if n % 2 == 0 else 0
        for n in range(order + 1)
    )


@lru_cache(maxsize=None)
def sin_series(order: int) -> Series:
    return Series(
        Fraction((-1) ** (n // 2), factorial(n)) if n % 2 == 1 else 0
        for n in range(order + 1)
    )


@lru_cache(maxsize=None)
def sec_series(order: int) -> Series:
    return reciprocal(cos_series(order))


@lru_cache(maxsize=None)
def tan_series(order: int) -> Series:
    return sin_series(order) * sec_series(order)


@lru_cache(maxsize=None)
def _sec_pow_x(order: int) -> Series:
    return pow_poly(sec_series(order), X)


@lru_cache(maxsize=None)
def _cos_pow_x(order: int) -> Series:
    return pow_poly(cos_series(order), X)


def _mix(order: int) -> Series:
    # (1-x) + x sec(t), the weight that toggles the statistic at the new maximum
    return X * sec_series(order) + ONE_MINUS_X


@lru_cache(maxsize=None)
def family_series(fam: Family, order: int) -> Series:
    """The generating series of a family, truncated at the given order.

    >>> str(egf_coeff(family_series(Family.C, 6), 6))
    '7x + 35x^2 + 19x^3'
    """
    if fam is Family.A:
        return _sec_pow_x(order)
    if fam is Family.B:
        q = _sec_pow_x(order) * _mix(order)
        return solve_linear_ode(Series.zero(order), q, Poly())
    if fam is Family.DBAR:
        return solve_linear_ode(
            X * tan_series(order), Series.constant(X, order), Poly()
        )
    if fam is Family.D:
        return family_series(Family.DBAR, order) + ONE_MINUS_X * integrate(
            _sec_pow_x(order)
        )
    if fam is Family.CBAR:
        inner = X * _sec_pow_x(order) * _mix(order) * integrate(_cos_pow_x(order))
        return integrate(inner) + 1
    if fam is Family.C:
        return family_series(Family.CBAR, order) + ONE_MINUS_X * integrate(
            family_series(Family.B, order)
        )
    raise ValueError(f"unknown family: {fam!r}")


def closed_form_d(order: int) -> Series:
    """x sec(t)^x int cos^x + (1-x) int sec^x, the integral form of D."""
    secx = _sec_pow_x(order)
    return X * secx * integrate(_cos_pow_x(order)) + ONE_MINUS_X * integrate(secx)


Convention = Literal["rising", "falling"]


def hyp2f1(
    a: Scalar,
    b: Poly,
    c: Scalar,
    z: Series,
    convention: Convention = "rising",
) -> Series:
    """Gauss hypergeometric sum with a polynomial middle parameter.

    Evaluates sum_n (a)_n (b)_n / ((c)_n n!) z^n truncated to the order
    of z, where (u)_n is the rising factorial u(u+1)...(u+n-1) or, with
    convention="falling", the product u(u-1)...(u-n+1).  z must have
    zero constant term so only finitely many summands contribute.
    """
    if z.coeff(0):
        raise ValueError("substituted series must have zero constant term")
    if convention not in ("rising", "falling"):
        raise ValueError(f"unknown Pochhammer convention: {convention!r}")
    step = 1 if convention == "rising" else -1
    a = Fraction(a)
    c = Fraction(c)
    result = Series.constant(1, z.order)
    zpow = Series.constant(1, z.order)
    poch_a = Fraction(1)
    poch_b = ONE
    poch_c = Fraction(1)
    for n in range(1, z.order + 1):
        zpow = zpow * z
        if not zpow:
            break
        offset = step * (n - 1)
        poch_a *= a + offset
        poch_b = poch_b * (b + offset)
        poch_c *= c + offset
        if poch_c == 0:
            raise ValueError("lower parameter hits a nonpositive integer")
        scale = poch_a / (poch_c * factorial(n))
        result = result + zpow * (poch_b * scale)
    return result


def closed_form_b(order: int, convention: Convention = "rising") -> Series:
    """The hypergeometric closed form of the odd up-down family.

    sin cos (1-x+x sec) / (x+(1-x)cos) times the weighted pair of
    2F1(1/2, (1+x)/2; 3/2; sin^2) and 2F1(1/2, (2+x)/2; 3/2; sin^2).
    """
    sin = sin_series(order)
    cos = cos_series(order)
    z = sin * sin
    half = Fraction(1, 2)
    f1 = hyp2f1(half, Poly([half, half]), Fraction(3, 2), z, convention)
    f2 = hyp2f1(half, Poly([1, half]), Fraction(3, 2), z, convention)
    prefactor = sin * cos * _mix(order) * reciprocal(X + ONE_MINUS_X * cos)
    return prefactor * (ONE_MINUS_X * f1 + X * f2)

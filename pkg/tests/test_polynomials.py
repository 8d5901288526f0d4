"""Unit tests for the exact polynomial ring."""

import doctest
import random
from fractions import Fraction

import pytest

from altmmp import polynomials
from altmmp.polynomials import ONE, X, ZERO, Poly


def test_construction_trims_trailing_zeros():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0, 0]).coeffs == ()
    assert Poly([]).coeffs == ()


def test_coefficients_are_fractions():
    p = Poly([1, Fraction(1, 2)])
    assert all(isinstance(c, Fraction) for c in p.coeffs)


def test_degree():
    assert ZERO.degree == -1
    assert ONE.degree == 0
    assert X.degree == 1
    assert Poly([0, 0, 5]).degree == 2


def test_coeff_out_of_range_is_zero():
    p = Poly([1, 2])
    assert p.coeff(0) == 1
    assert p.coeff(1) == 2
    assert p.coeff(99) == 0


def test_equality_with_scalars():
    assert Poly([5]) == 5
    assert Poly([Fraction(1, 2)]) == Fraction(1, 2)
    assert ZERO == 0
    assert Poly([0, 1]) != 1
    assert Poly([1, 2]) == Poly([1, 2])
    assert Poly([1, 2]) != Poly([1, 3])


def test_hash_consistent_with_scalar_equality():
    # constants compare equal to scalars, so they must hash alike
    assert hash(Poly([5])) == hash(5)
    assert hash(ZERO) == hash(0)
    assert hash(Poly([Fraction(3, 2)])) == hash(Fraction(3, 2))
    assert {Poly([7]): "found"}[7] == "found"


def test_ring_operations():
    p = Poly([1, 2])
    q = Poly([0, 0, 3])
    assert p + q == Poly([1, 2, 3])
    assert p - p == ZERO
    assert p * q == Poly([0, 0, 3, 6])
    assert -p == Poly([-1, -2])
    assert (X + 1) * (X - 1) == X * X - 1


def test_scalar_mixing():
    p = Poly([1, 1])
    assert p + 2 == Poly([3, 1])
    assert 2 + p == Poly([3, 1])
    assert p * 3 == Poly([3, 3])
    assert Fraction(1, 2) * p == Poly([Fraction(1, 2), Fraction(1, 2)])
    assert p - 1 == X


def test_power():
    assert X ** 0 == ONE
    assert X ** 3 == Poly([0, 0, 0, 1])
    assert (ONE + X) ** 2 == Poly([1, 2, 1])
    with pytest.raises(ValueError):
        X ** -1


def test_evaluation():
    p = Poly([1, 2, 3])
    assert p(0) == 1
    assert p(1) == 6
    assert p(Fraction(1, 2)) == Fraction(11, 4)
    assert ZERO(17) == 0


def test_evaluation_at_one_is_coefficient_sum():
    rng = random.Random(7)
    for _ in range(50):
        coeffs = [rng.randrange(-9, 10) for _ in range(rng.randrange(8))]
        assert Poly(coeffs)(1) == sum(coeffs)


def test_shift():
    assert Poly([1, 2]).shift(2) == Poly([0, 0, 1, 2])
    assert Poly([1]).shift(0) == ONE
    assert ZERO.shift(3) == ZERO
    with pytest.raises(ValueError):
        X.shift(-1)


def test_is_unimodal():
    assert Poly([1, 2, 1]).is_unimodal()
    assert Poly([1, 1, 1]).is_unimodal()
    assert Poly([0, 1, 3, 3, 2]).is_unimodal()
    assert ZERO.is_unimodal()
    assert not Poly([1, 0, 2]).is_unimodal()
    assert not Poly([2, 1, 2]).is_unimodal()


def test_string_round_trip():
    p = Poly([0, 5, Fraction(2, 3)])
    assert Poly.from_strings(p.to_strings()) == p
    assert Poly.from_strings(["1", "3/2"]) == Poly([1, Fraction(3, 2)])


def test_str_formats():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(X) == "x"
    assert str(Poly([1, 1])) == "1 + x"
    assert str(Poly([0, 2, 3])) == "2x + 3x^2"
    assert str(Poly([0, -1, 2])) == "-x + 2x^2"
    assert str(Poly([0, 0, Fraction(3, 4)])) == "(3/4)x^2"
    assert str(Poly([-3])) == "-3"


def test_random_ring_axioms():
    rng = random.Random(11)

    def rand_poly():
        return Poly([rng.randrange(-5, 6) for _ in range(rng.randrange(6))])

    for _ in range(200):
        p, q, r = rand_poly(), rand_poly(), rand_poly()
        assert p + q == q + p
        assert (p + q) + r == p + (q + r)
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p * ONE == p
        assert p + ZERO == p


def test_doctests():
    assert doctest.testmod(polynomials).failed == 0

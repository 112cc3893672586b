from fractions import Fraction

import pytest

from ddhooks.v1.data import PartitionClass
from ddhooks.v1.enumerate import partitions_of
from ddhooks.v1.qseries import (X, CoefficientRing, Jet, SpecializedRing, SymbolicRing, TruncatedSeries, as_counts,
                                as_polynomial, coefficient_sum, coefficients, degree, export_value, extract_poly,
                                from_counts, is_integral, moment_from_jet, pochhammer, pochhammer_inf, polynomial,
                                series_add, series_mul, series_scale, to_strings)
from ddhooks.v1.resources import DomainError, NonCancellation, OrderMismatch

RING = SpecializedRing(0)


def values(s: TruncatedSeries):
    return [s.extract(m) for m in range(s.order + 1)]


def series(*coefficients, order=None, ring=RING):
    return TruncatedSeries(ring, len(coefficients) - 1 if order is None else order, list(coefficients))


def test_product_truncates():
    assert values(series_mul(series(1, 1, 0), series(1, -1, 0))) == [1, 0, -1]
    assert values(series(1, 1, order=2) * series(1, -1, order=2)) == [1, 0, -1]


def test_multiplying_by_zero():
    zero = TruncatedSeries.zero(RING, 4)
    assert values(series_mul(series(1, 2, 3, 4, 5), zero)) == [0] * 5


def test_arithmetic_is_associative_and_distributive():
    ring = SpecializedRing(Fraction(1, 3))
    a = series(1, Fraction(1, 2), -3, 0, 7, ring=ring)
    b = series(2, 0, Fraction(-5, 4), 1, 1, ring=ring)
    c = series(Fraction(1, 7), 1, 1, 0, -2, ring=ring)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert series_add(a, b) == series_add(b, a)


def test_series_scale_keeps_exact_rationals():
    s = series_scale(series(3, 6, 1), Fraction(1, 3))
    assert values(s) == [1, 2, Fraction(1, 3)]
    assert s.denominator == 3
    assert s == series(1, 2, Fraction(1, 3))


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        series_add(series(1, 1), series(1, 1, 1))
    with pytest.raises(OrderMismatch):
        series_mul(series(1, 1), series(1, 1, ring=SpecializedRing(2)))


def test_coefficient_outside_order():
    with pytest.raises(DomainError):
        series(1, 2).coefficient(2)


def test_euler_function():
    assert values(pochhammer_inf(1, 1, 1, 5, RING)) == [1, -1, -1, 0, 0, 1]


def test_trivial_product():
    assert values(pochhammer_inf(0, 1, 1, 6, RING)) == [1, 0, 0, 0, 0, 0, 0]


def test_strict_partitions_into_even_parts():
    product = pochhammer_inf(-1, 2, 2, 12, RING)
    for m in range(13):
        expected = sum(1 for p in partitions_of(m, PartitionClass.strict()) if all(part % 2 == 0 for part in p))
        assert product.extract(m) == expected


def test_infinite_product_needs_positive_start():
    with pytest.raises(DomainError):
        pochhammer_inf(1, 0, 1, 5, RING)


def test_finite_product():
    # (q;q)_2 = (1 - q)(1 - q^2)
    assert values(pochhammer(1, 1, 1, 2, 4, RING)) == [1, -1, -1, 1, 0]


def test_spread_and_shift():
    s = series(1, 2, 3)
    assert values(s.spread(2, 5)) == [1, 0, 2, 0, 3, 0]
    assert values(s.shift(1)) == [0, 1, 2]
    with pytest.raises(OrderMismatch):
        s.spread(2, 6)
    with pytest.raises(OrderMismatch):
        s.truncate(3)


def test_division_by_factor_inverts_multiplication():
    ring = SpecializedRing(Fraction(2, 5))
    s = series(1, 3, -2, 5, 1, ring=ring)
    a = ring.x()
    assert s.times_factor(a, 2).divided_by_factor(a, 2) == s


def test_symbolic_coefficients():
    ring = SymbolicRing()
    # (1 - x q)(1 - x q^2) = 1 - x q - x q^2 + x^2 q^3
    s = TruncatedSeries.one(ring, 4).times_factors(ring.x(), 1, 1, count=2)
    assert s.polynomials() == [polynomial([1]), polynomial([0, -1]), polynomial([0, -1]),
                               polynomial([0, 0, 1]), polynomial()]


def test_radical_part_must_cancel():
    ring = SymbolicRing()
    s = TruncatedSeries(ring, 1, [ring.one(), ring.y()])
    assert extract_poly(s, 0) == 1
    with pytest.raises(NonCancellation):
        extract_poly(s, 1)


def test_non_integral_extraction():
    ring = SymbolicRing()
    s = TruncatedSeries.one(ring, 0).scale(Fraction(1, 2))
    with pytest.raises(NonCancellation):
        extract_poly(s, 0)
    assert extract_poly(s, 0, integral=False) == polynomial([Fraction(1, 2)])


def test_conjugate_sum_is_radical_free():
    ring = SymbolicRing()
    s = TruncatedSeries.one(ring, 6).times_factors(ring.y(), 1, 1)
    even, odd = s.radical_parts()
    assert s + s.conjugate() == even.scale(2)
    assert s - s.conjugate() == (odd * TruncatedSeries.monomial(ring, 6, ring.y(), 0)).scale(2)


class TestPolynomials:
    def test_counts(self):
        p = from_counts({1: 2, 2: 4, 3: 2, 4: 2})
        assert p == polynomial([0, 2, 4, 2, 2])
        assert degree(p) == 4
        assert coefficient_sum(p) == 10
        assert as_counts(p) == {1: 2, 2: 4, 3: 2, 4: 2}
        assert coefficients(p) == [0, 2, 4, 2, 2]

    def test_zero(self):
        assert from_counts({}) == polynomial()
        assert polynomial([0, 0]) == 0
        assert degree(polynomial([0, 0])) == -1
        assert coefficients(polynomial()) == []

    def test_export(self):
        p = polynomial([Fraction(1, 2), 0, 3])
        assert to_strings(p) == ["1/2", "0/1", "3/1"]
        assert export_value(p) == {"poly": ["1/2", "0/1", "3/1"]}
        assert export_value(Fraction(-2, 6)) == {"value": "-1/3"}
        assert coefficients(p) == [Fraction(1, 2), 0, 3]
        assert not is_integral(p)
        assert is_integral(p * 2)

    def test_field_elements_are_reduced(self):
        # (1 - x^2) / (1 - x) = 1 + x
        assert as_polynomial((1 - X * X) / (1 - X)) == polynomial([1, 1])
        assert as_polynomial(X / 2) == polynomial([0, Fraction(1, 2)])
        assert as_polynomial(1 / (1 - X)) is None

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            polynomial([0.5])


class TestSymbolicRing:
    def test_rational_scalars(self):
        ring = SymbolicRing()
        half = ring.scalar(Fraction(1, 2))
        assert half == Fraction(1, 2)
        assert half + Fraction(1, 2) == 1
        assert ring.split(half)[0] == 2
        assert half.integer_value() is None
        assert (half * 4).integer_value() == 2

    def test_inverse(self):
        ring = SymbolicRing()
        inverse = ring.inverse(ring.one() - ring.x())
        assert inverse * (ring.one() - ring.x()) == 1
        with pytest.raises(NonCancellation):
            ring.extract(inverse)
        with pytest.raises(ZeroDivisionError):
            ring.inverse(ring.zero())

    def test_radicand_switch_is_required(self):
        assert "with_radicand" in CoefficientRing.__abstractmethods__


class TestJet:
    def test_product_truncates(self):
        x = Jet(1, 1, 0)
        assert x * x == Jet(1, 2, 1)
        assert x * x * x == Jet(1, 3, 3)

    def test_inverse(self):
        assert Jet(1, 1, 0).inverse() == Jet(1, -1, 1)
        assert Jet(2, 1, 0) * Jet(2, 1, 0).inverse() == 1
        with pytest.raises(ZeroDivisionError):
            Jet(0, 1, 0).inverse()

    def test_moments_from_jet(self):
        # p(x) = x^3 at x = 1 + e: (x d/dx) p = 3, (x d/dx)^2 p = 9
        jet = Jet(1, 3, 3)
        assert [moment_from_jet(jet, k) for k in range(3)] == [1, 3, 9]
        with pytest.raises(DomainError):
            moment_from_jet(jet, 3)

"""
Package: ddhooks
License: MIT
"""
from __future__ import annotations

import logging
from fractions import Fraction
from math import lcm
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

from ddhooks.v1.resources import DomainError, NonCancellation, OrderMismatch
from .rings import CoefficientRing, SeriesCoefficient, SymbolicRing
from .polynomials import Polynomial, is_integral, polynomial, to_strings

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction, SeriesCoefficient]


class TruncatedSeries:
    """
    sum_{m <= order} coeffs[m] / denominator * q^m over a coefficient ring.

    The integer denominator lets factors with rational coefficients act on integer
    coefficients; coefficient(m) divides it back out. Instances are never mutated.
    """
    __slots__ = ("_ring", "_order", "_coeffs", "_den")

    def __init__(self, ring: CoefficientRing, order: int, coeffs: Optional[Iterable[Scalar]] = None,
                 denominator: int = 1):
        if not isinstance(ring, CoefficientRing):
            raise TypeError(f"Expected 'ring' to be a CoefficientRing, got {type(ring).__name__}")
        if isinstance(order, bool) or not isinstance(order, int):
            raise TypeError(f"Expected 'order' to be an int, got {type(order).__name__}")
        if order < 0:
            raise ValueError("Truncation order must be nonnegative")
        if isinstance(denominator, bool) or not isinstance(denominator, int) or denominator < 1:
            raise ValueError("Series denominator must be a positive int")
        values = [_coerce(ring, c) for c in (coeffs or ())][:order + 1]
        values.extend(ring.zero() for _ in range(order + 1 - len(values)))
        self._ring = ring
        self._order = order
        self._coeffs = values
        self._den = denominator

    @classmethod
    def _raw(cls, ring: CoefficientRing, order: int, coeffs: List[SeriesCoefficient],
             denominator: int = 1) -> TruncatedSeries:
        s = cls.__new__(cls)
        s._ring = ring
        s._order = order
        s._coeffs = coeffs
        s._den = denominator
        return s

    @classmethod
    def zero(cls, ring: CoefficientRing, order: int) -> TruncatedSeries:
        return cls(ring, order)

    @classmethod
    def one(cls, ring: CoefficientRing, order: int) -> TruncatedSeries:
        return cls(ring, order, [ring.one()])

    @classmethod
    def monomial(cls, ring: CoefficientRing, order: int, coefficient: Scalar, power: int) -> TruncatedSeries:
        if power < 0:
            raise ValueError("Monomial power must be nonnegative")
        s = cls(ring, order)
        if power <= order:
            s._coeffs[power] = _coerce(ring, coefficient)
        return s

    @classmethod
    def from_integers(cls, ring: CoefficientRing, order: int, values: Iterable[int]) -> TruncatedSeries:
        return cls(ring, order, [ring.scalar(v) for v in values])

    @property
    def ring(self) -> CoefficientRing:
        return self._ring

    @property
    def order(self) -> int:
        return self._order

    @property
    def denominator(self) -> int:
        return self._den

    def __len__(self) -> int:
        return self._order + 1

    def coefficient(self, m: int) -> SeriesCoefficient:
        if m < 0 or m > self._order:
            raise DomainError("Coefficient index outside the truncation order", {"m": m, "order": self._order})
        return self._coeffs[m].divide(self._den)

    __getitem__ = coefficient

    def coefficients(self) -> List[SeriesCoefficient]:
        return [self.coefficient(m) for m in range(self._order + 1)]

    def normalized(self) -> TruncatedSeries:
        if self._den == 1:
            return self
        return TruncatedSeries._raw(self._ring, self._order, self.coefficients())

    def extract(self, m: int):
        """The plain value of the q^m coefficient (a Polynomial in x, a Fraction or a Jet depending on the ring)."""
        return self._ring.extract(self.coefficient(m))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self._ring != other._ring or self._order != other._order:
            return False
        if self._den == other._den:
            return self._coeffs == other._coeffs
        return all(a * other._den == b * self._den for a, b in zip(self._coeffs, other._coeffs))

    __hash__ = None

    def conjugate(self) -> TruncatedSeries:
        """The image under y -> -y."""
        return TruncatedSeries._raw(self._ring, self._order, [c.conjugate() for c in self._coeffs], self._den)

    def radical_parts(self) -> Tuple[TruncatedSeries, TruncatedSeries]:
        """(E, O) with self = E + O y, both free of y."""
        ring = self._ring
        zero = ring.base_zero
        even = [ring.element(c.even) for c in self._coeffs]
        odd = [ring.element(c.odd if c.odd else zero) for c in self._coeffs]
        return (TruncatedSeries._raw(ring, self._order, even, self._den),
                TruncatedSeries._raw(ring, self._order, odd, self._den))

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self._order:
            raise OrderMismatch("Cannot raise the truncation order", {"order": self._order, "requested": order})
        return TruncatedSeries._raw(self._ring, order, self._coeffs[:order + 1], self._den)

    def shift(self, m: int) -> TruncatedSeries:
        """Multiply by q^m."""
        zero = self._ring.zero()
        c = ([zero] * m + self._coeffs)[:self._order + 1]
        return TruncatedSeries._raw(self._ring, self._order, c, self._den)

    def spread(self, step: int, order: Optional[int] = None) -> TruncatedSeries:
        """Substitute q -> q^step. The new order may not exceed what the known coefficients determine."""
        if step < 1:
            raise ValueError("Spread step must be positive")
        if order is None:
            order = self._order * step
        if order > self._order * step + step - 1:
            raise OrderMismatch("Spread order exceeds the known coefficients",
                                {"order": self._order, "step": step, "requested": order})
        zero = self._ring.zero()
        c = [zero] * (order + 1)
        for i in range(min(self._order, order // step) + 1):
            c[i * step] = self._coeffs[i]
        return TruncatedSeries._raw(self._ring, order, c, self._den)

    def scale(self, factor: Scalar) -> TruncatedSeries:
        factor = _coerce(self._ring, factor)
        u, v = self._ring.split(factor)
        iv = v.integer_value()
        if iv == 1:
            c = list(self._coeffs)
        else:
            c = [x * v if x else x for x in self._coeffs]
        return TruncatedSeries._raw(self._ring, self._order, c, self._den * u)

    def times_factor(self, a: Scalar, m: int) -> TruncatedSeries:
        """Multiply by (1 - a q^m)."""
        ring = self._ring
        a = _coerce(ring, a)
        if not a or m > self._order:
            return self
        if m == 0:
            return self.scale(ring.one() - a)
        u, v = ring.split(a)
        iv = v.integer_value() if u == 1 else None
        c = list(self._coeffs)
        n = self._order
        if iv == 1:
            for k in range(n, m - 1, -1):
                if c[k - m]:
                    c[k] = c[k] - c[k - m]
        elif iv == -1:
            for k in range(n, m - 1, -1):
                if c[k - m]:
                    c[k] = c[k] + c[k - m]
        else:
            for k in range(n, -1, -1):
                value = c[k] * u if u != 1 and c[k] else c[k]
                if k >= m and c[k - m]:
                    value = value - v * c[k - m]
                c[k] = value
        return TruncatedSeries._raw(ring, n, c, self._den * u)

    def divided_by_factor(self, a: Scalar, m: int) -> TruncatedSeries:
        """Multiply by 1 / (1 - a q^m) = sum_j a^j q^{jm}."""
        ring = self._ring
        a = _coerce(ring, a)
        if not a or m > self._order:
            return self
        if m == 0:
            return self.scale(ring.inverse(ring.one() - a))
        iv = a.integer_value()
        c = list(self._coeffs)
        if iv == 1:
            for k in range(m, self._order + 1):
                if c[k - m]:
                    c[k] = c[k] + c[k - m]
        elif iv == -1:
            for k in range(m, self._order + 1):
                if c[k - m]:
                    c[k] = c[k] - c[k - m]
        else:
            for k in range(m, self._order + 1):
                if c[k - m]:
                    c[k] = c[k] + a * c[k - m]
        return TruncatedSeries._raw(ring, self._order, c, self._den)

    def times_factors(self, a: Scalar, start: int, step: int, sign: int = 1,
                      count: Optional[int] = None) -> TruncatedSeries:
        """Multiply by prod_{k >= 0} (1 - a sign^k q^{start + k step}), optionally only the first count factors."""
        return self._factors(a, start, step, sign, count)

    def divided_by_factors(self, a: Scalar, start: int, step: int, sign: int = 1,
                           count: Optional[int] = None) -> TruncatedSeries:
        return self._factors(a, start, step, sign, count, divide=True)

    def _factors(self, a, start, step, sign, count, divide: bool = False) -> TruncatedSeries:
        if step < 1:
            raise ValueError("Factor step must be positive")
        if start < 0:
            raise ValueError("Factor start must be nonnegative")
        if sign not in (1, -1):
            raise ValueError("Factor sign must be 1 or -1")
        a = _coerce(self._ring, a)
        result = self
        k = 0
        while start + k * step <= self._order and (count is None or k < count):
            factor = a if sign == 1 or k % 2 == 0 else -a
            if divide:
                result = result.divided_by_factor(factor, start + k * step)
            else:
                result = result.times_factor(factor, start + k * step)
            k += 1
        logger.debug("Applied %d factors (start=%d, step=%d, divide=%s) at order %d over %s",
                     k, start, step, divide, self._order, self._ring.name)
        return result

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries._raw(self._ring, self._order, [-c for c in self._coeffs], self._den)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_add(self, other)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_add(self, -other)

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> TruncatedSeries:
        return self.scale(other)

    def polynomials(self) -> List[Polynomial]:
        if not isinstance(self._ring, SymbolicRing):
            raise DomainError("Polynomial coefficients need the symbolic ring", {"ring": self._ring.name})
        return [self.extract(m) for m in range(self._order + 1)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": self._order,
            "ring": self._ring.name,
            "radicand": self._ring.radicand_kind.value,
            "coeffs": [export_value(self.extract(m)) for m in range(self._order + 1)],
        }

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self._order}, ring={self._ring!r})"


def export_value(value) -> Dict[str, Any]:
    if isinstance(value, Polynomial):
        return {"poly": to_strings(value)}
    if isinstance(value, (int, Fraction)):
        v = Fraction(value)
        return {"value": f"{v.numerator}/{v.denominator}"}
    return {"jet": [f"{Fraction(c).numerator}/{Fraction(c).denominator}" for c in (value.c0, value.c1, value.c2)]}


def _coerce(ring: CoefficientRing, value: Scalar) -> SeriesCoefficient:
    if isinstance(value, SeriesCoefficient):
        if value.ring != ring:
            raise OrderMismatch("Coefficient belongs to another ring", {"ring": ring.name, "other": value.ring.name})
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return ring.scalar(value)
    raise TypeError(f"Expected a SeriesCoefficient or rational scalar, got {type(value).__name__}")


def _check_compatible(a: TruncatedSeries, b: TruncatedSeries):
    if not isinstance(a, TruncatedSeries) or not isinstance(b, TruncatedSeries):
        raise TypeError("Expected TruncatedSeries operands")
    if a.order != b.order:
        raise OrderMismatch("Truncation orders differ", {"left": a.order, "right": b.order})
    if a.ring != b.ring:
        raise OrderMismatch("Coefficient rings differ", {"left": a.ring.name, "right": b.ring.name})


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_compatible(a, b)
    den = lcm(a.denominator, b.denominator)
    fa, fb = den // a.denominator, den // b.denominator
    c = []
    for x, y in zip(a._coeffs, b._coeffs):
        if fa != 1:
            x = x * fa
        if fb != 1:
            y = y * fb
        c.append(x + y if y else x)
    return TruncatedSeries._raw(a.ring, a.order, c, den)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_compatible(a, b)
    n = a.order
    ring = a.ring
    c = [ring.zero() for _ in range(n + 1)]
    bc = b._coeffs
    for i, ai in enumerate(a._coeffs):
        if not ai:
            continue
        for j in range(n - i + 1):
            if bc[j]:
                c[i + j] = c[i + j] + ai * bc[j]
    return TruncatedSeries._raw(ring, n, c, a.denominator * b.denominator)


def series_scale(a: TruncatedSeries, factor: Scalar) -> TruncatedSeries:
    if not isinstance(a, TruncatedSeries):
        raise TypeError("Expected a TruncatedSeries")
    return a.scale(factor)


def pochhammer_inf(a: Scalar, start: int, step: int, order: int, ring: Optional[CoefficientRing] = None,
                   sign: int = 1) -> TruncatedSeries:
    """prod_{k >= 0} (1 - a sign^k q^{start + k step}) truncated at q^order."""
    if ring is None:
        ring = a.ring if isinstance(a, SeriesCoefficient) else SymbolicRing()
    if start < 1:
        raise DomainError("Infinite products need a positive start", {"start": start})
    return TruncatedSeries.one(ring, order).times_factors(a, start, step, sign)


def pochhammer(a: Scalar, start: int, step: int, count: int, order: int,
               ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    """The finite product of the first count factors (1 - a q^{start + k step})."""
    if ring is None:
        ring = a.ring if isinstance(a, SeriesCoefficient) else SymbolicRing()
    return TruncatedSeries.one(ring, order).times_factors(a, start, step, count=count)


def extract_poly(s: TruncatedSeries, m: int, integral: bool = True) -> Polynomial:
    """The q^m coefficient as a polynomial in x; integral=True also requires integer coefficients."""
    value = s.extract(m)
    if isinstance(value, (int, Fraction)):
        value = polynomial([value])
    if not isinstance(value, Polynomial):
        raise DomainError("Coefficient is not a polynomial in x", {"ring": s.ring.name})
    if integral and not is_integral(value):
        raise NonCancellation("Coefficient has non-integral entries", {"m": m, "poly": to_strings(value)})
    return value

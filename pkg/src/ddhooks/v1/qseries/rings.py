"""
Coefficient rings for the q-series. Every coefficient is even + odd * y with y^2 equal to a fixed
radicand (1 - x^2 or 1 - x) of the base field. The base field is Q(x) (symbolic), Q at a fixed
rational x (specialized), or second order jets at x = 1 (moments).
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Any, Dict, Optional, Tuple, Union

from sympy.polys.domains import QQ

from ddhooks.v1.resources import NonCancellation, DomainError
from .polynomials import (X, X_FIELD, Polynomial, RationalFunction, as_polynomial, common_denominator, degree,
                          to_fraction, to_ground)

Number = Union[int, Fraction]


class Radicand(Enum):
    OneMinusXSquared = "1-x^2"
    OneMinusX = "1-x"


class Jet:
    """
    c0 + c1*e + c2*e^2 with e^3 = 0; the value of a function of x at x = 1 + e.
    """
    __slots__ = ("c0", "c1", "c2")

    def __init__(self, c0: Number = 0, c1: Number = 0, c2: Number = 0):
        self.c0 = c0
        self.c1 = c1
        self.c2 = c2

    def __bool__(self) -> bool:
        return bool(self.c0 or self.c1 or self.c2)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.c0 == other and not self.c1 and not self.c2
        if not isinstance(other, Jet):
            return NotImplemented
        return (self.c0, self.c1, self.c2) == (other.c0, other.c1, other.c2)

    def __hash__(self) -> int:
        return hash((self.c0, self.c1, self.c2))

    def __neg__(self) -> Jet:
        return Jet(-self.c0, -self.c1, -self.c2)

    def __add__(self, other) -> Jet:
        if isinstance(other, (int, Fraction)):
            return Jet(self.c0 + other, self.c1, self.c2)
        return Jet(self.c0 + other.c0, self.c1 + other.c1, self.c2 + other.c2)

    __radd__ = __add__

    def __sub__(self, other) -> Jet:
        if isinstance(other, (int, Fraction)):
            return Jet(self.c0 - other, self.c1, self.c2)
        return Jet(self.c0 - other.c0, self.c1 - other.c1, self.c2 - other.c2)

    def __rsub__(self, other) -> Jet:
        return (-self) + other

    def __mul__(self, other) -> Jet:
        if isinstance(other, (int, Fraction)):
            return Jet(self.c0 * other, self.c1 * other, self.c2 * other)
        a0, a1, a2 = self.c0, self.c1, self.c2
        b0, b1, b2 = other.c0, other.c1, other.c2
        return Jet(a0 * b0, a0 * b1 + a1 * b0, a0 * b2 + a1 * b1 + a2 * b0)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Jet:
        if isinstance(other, (int, Fraction)):
            r = Fraction(1) / other
            return Jet(self.c0 * r, self.c1 * r, self.c2 * r)
        return self * other.inverse()

    def inverse(self) -> Jet:
        if not self.c0:
            raise ZeroDivisionError("jet with zero constant term is not invertible")
        a0 = Fraction(self.c0)
        i0 = 1 / a0
        i1 = -self.c1 * i0 * i0
        i2 = (self.c1 * self.c1 * i0 - self.c2) * i0 * i0
        return Jet(i0, i1, i2)

    def common_denominator(self) -> int:
        return lcm(1, *(v.denominator for v in (self.c0, self.c1, self.c2) if isinstance(v, Fraction)))

    def __repr__(self) -> str:
        return f"Jet({self.c0}, {self.c1}, {self.c2})"


class SeriesCoefficient:
    """
    even + odd * y in a quadratic extension of the ring's base field.
    """
    __slots__ = ("_even", "_odd", "_ring")

    def __init__(self, ring: CoefficientRing, even: Any, odd: Any = None):
        self._ring = ring
        self._even = even
        self._odd = ring.base_zero if odd is None else odd

    @property
    def ring(self) -> CoefficientRing:
        return self._ring

    @property
    def even(self):
        return self._even

    @property
    def odd(self):
        return self._odd

    def __bool__(self) -> bool:
        return bool(self._even) or bool(self._odd)

    def _ground(self, value: Number):
        # ints act on every base field directly
        return value if isinstance(value, int) else self._ring.base(value)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return not self._odd and self._even == self._ground(other)
        if not isinstance(other, SeriesCoefficient):
            return NotImplemented
        return self._even == other._even and self._odd == other._odd

    def __hash__(self) -> int:
        return hash((self._even, self._odd))

    def __neg__(self) -> SeriesCoefficient:
        return SeriesCoefficient(self._ring, -self._even, -self._odd if self._odd else self._odd)

    def __add__(self, other) -> SeriesCoefficient:
        if isinstance(other, (int, Fraction)):
            return SeriesCoefficient(self._ring, self._even + self._ground(other), self._odd)
        if not other._odd:
            return SeriesCoefficient(self._ring, self._even + other._even, self._odd)
        return SeriesCoefficient(self._ring, self._even + other._even, self._odd + other._odd)

    __radd__ = __add__

    def __sub__(self, other) -> SeriesCoefficient:
        if isinstance(other, (int, Fraction)):
            return SeriesCoefficient(self._ring, self._even - self._ground(other), self._odd)
        if not other._odd:
            return SeriesCoefficient(self._ring, self._even - other._even, self._odd)
        return SeriesCoefficient(self._ring, self._even - other._even, self._odd - other._odd)

    def __rsub__(self, other) -> SeriesCoefficient:
        return (-self) + other

    def __mul__(self, other) -> SeriesCoefficient:
        if isinstance(other, (int, Fraction)):
            other = self._ground(other)
            return SeriesCoefficient(self._ring, self._even * other, self._odd * other if self._odd else self._odd)
        a, b, c, d = self._even, self._odd, other._even, other._odd
        if not d:
            return SeriesCoefficient(self._ring, a * c, b * c if b else b)
        if not b:
            return SeriesCoefficient(self._ring, a * c, a * d)
        return SeriesCoefficient(self._ring, a * c + b * d * self._ring.radicand, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> SeriesCoefficient:
        """The image under y -> -y."""
        if not self._odd:
            return self
        return SeriesCoefficient(self._ring, self._even, -self._odd)

    def divide(self, n: int) -> SeriesCoefficient:
        if n == 1:
            return self
        ring = self._ring
        return SeriesCoefficient(ring, ring.base_divide(self._even, n),
                                 ring.base_divide(self._odd, n) if self._odd else self._odd)

    def integer_value(self) -> Optional[int]:
        """The value as a Python int when the coefficient is an integer constant, else None."""
        if self._odd:
            return None
        return self._ring.base_integer(self._even)

    def __repr__(self) -> str:
        if not self._odd:
            return f"SeriesCoefficient({self._even!r})"
        return f"SeriesCoefficient({self._even!r} + ({self._odd!r})*y)"


class CoefficientRing(ABC):
    """
    The base field operations and the radicand y^2 of a coefficient ring.
    """

    def __init__(self, radicand: Radicand = Radicand.OneMinusXSquared):
        if not isinstance(radicand, Radicand):
            raise TypeError(f"Expected 'radicand' to be a Radicand, got {type(radicand).__name__}")
        self.__radicand_kind = radicand
        x = self.base_x()
        one = self.base(1)
        self.__radicand = one - x * x if radicand == Radicand.OneMinusXSquared else one - x
        self.__zero = self.base(0)

    @property
    def radicand_kind(self) -> Radicand:
        return self.__radicand_kind

    @property
    def radicand(self):
        return self.__radicand

    @property
    def base_zero(self):
        return self.__zero

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @abstractmethod
    def base(self, value: Number):
        pass

    @abstractmethod
    def base_x(self):
        pass

    @abstractmethod
    def base_inverse(self, e):
        pass

    @abstractmethod
    def base_divide(self, e, n: int):
        pass

    @abstractmethod
    def base_denominator(self, e) -> int:
        pass

    @abstractmethod
    def base_integer(self, e) -> Optional[int]:
        pass

    @abstractmethod
    def extract(self, c: SeriesCoefficient):
        """The plain value of a coefficient whose radical part has cancelled."""
        pass

    @abstractmethod
    def _key(self) -> Tuple:
        pass

    @abstractmethod
    def with_radicand(self, radicand: Radicand) -> CoefficientRing:
        """The same base field with another radicand."""
        pass

    def __eq__(self, other) -> bool:
        return isinstance(other, CoefficientRing) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def zero(self) -> SeriesCoefficient:
        return SeriesCoefficient(self, self.__zero, self.__zero)

    def one(self) -> SeriesCoefficient:
        return SeriesCoefficient(self, self.base(1), self.__zero)

    def scalar(self, value: Number) -> SeriesCoefficient:
        return SeriesCoefficient(self, self.base(value), self.__zero)

    def x(self) -> SeriesCoefficient:
        return SeriesCoefficient(self, self.base_x(), self.__zero)

    def y(self) -> SeriesCoefficient:
        return SeriesCoefficient(self, self.__zero, self.base(1))

    def element(self, even, odd=None) -> SeriesCoefficient:
        return SeriesCoefficient(self, even, self.__zero if odd is None else odd)

    def inverse(self, c: SeriesCoefficient) -> SeriesCoefficient:
        if c.odd:
            raise DomainError("Only radical-free coefficients are inverted", {"ring": self.name})
        return SeriesCoefficient(self, self.base_inverse(c.even), self.__zero)

    def split(self, c: SeriesCoefficient) -> Tuple[int, SeriesCoefficient]:
        """
        (u, v) with c = v / u and v free of rational denominators where the base allows it.
        """
        u = lcm(self.base_denominator(c.even), self.base_denominator(c.odd))
        if u == 1:
            return 1, c
        return u, c * u

    def _radical_free(self, c: SeriesCoefficient, what: str):
        if c.odd:
            raise NonCancellation(f"Radical part of {what} did not cancel", {"ring": self.name, "odd": repr(c.odd)})
        return c.even

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.__radicand_kind.value})"


class SymbolicRing(CoefficientRing):
    """
    Q(x) from sympy: elements are reduced fractions of polynomials over QQ.
    """

    @property
    def name(self) -> str:
        return "symbolic"

    def base(self, value: Number) -> RationalFunction:
        return X_FIELD(to_ground(value))

    def base_x(self) -> RationalFunction:
        return X

    def base_inverse(self, e: RationalFunction) -> RationalFunction:
        if not e:
            raise ZeroDivisionError("inverse of zero rational function")
        return X_FIELD.one / e

    def base_divide(self, e: RationalFunction, n: int) -> RationalFunction:
        return e * QQ(1, n)

    def base_denominator(self, e: RationalFunction) -> int:
        p = as_polynomial(e)
        return 1 if p is None else common_denominator(p)

    def base_integer(self, e: RationalFunction) -> Optional[int]:
        p = as_polynomial(e)
        if p is None or degree(p) > 0:
            return None
        value = to_fraction(p.LC)
        return value if isinstance(value, int) else None

    def extract(self, c: SeriesCoefficient) -> Polynomial:
        even = self._radical_free(c, "a coefficient")
        p = as_polynomial(even)
        if p is None:
            raise NonCancellation("Denominator did not cancel", {"ring": self.name, "value": str(even)})
        return p

    def with_radicand(self, radicand: Radicand) -> SymbolicRing:
        return SymbolicRing(radicand)

    def _key(self) -> Tuple:
        return ("symbolic", self.radicand_kind)


class SpecializedRing(CoefficientRing):
    """
    Q(sqrt(d)) at a fixed rational x, coefficients stored as pairs a + b * sqrt(d).
    """

    def __init__(self, x: Union[Number, str], radicand: Radicand = Radicand.OneMinusXSquared):
        try:
            value = Fraction(x)
        except (TypeError, ValueError) as e:
            raise TypeError(f"Expected 'x' to be rational, got {x!r}") from e
        self.__x = value.numerator if value.denominator == 1 else value
        super().__init__(radicand)

    @property
    def x_value(self) -> Number:
        return self.__x

    @property
    def name(self) -> str:
        return f"specialized(x={Fraction(self.__x)})"

    def base(self, value: Number) -> Number:
        return value

    def base_x(self) -> Number:
        return self.__x

    def base_inverse(self, e: Number) -> Fraction:
        if not e:
            raise ZeroDivisionError(f"zero is not invertible at x={self.__x}")
        return Fraction(1) / e

    def base_divide(self, e: Number, n: int) -> Number:
        r = Fraction(e, n) if isinstance(e, int) else e / n
        return r.numerator if r.denominator == 1 else r

    def base_denominator(self, e: Number) -> int:
        return e.denominator if isinstance(e, Fraction) else 1

    def base_integer(self, e: Number) -> Optional[int]:
        if isinstance(e, int):
            return e
        return e.numerator if e.denominator == 1 else None

    def extract(self, c: SeriesCoefficient) -> Fraction:
        return Fraction(self._radical_free(c, "a coefficient"))

    def with_radicand(self, radicand: Radicand) -> SpecializedRing:
        return SpecializedRing(self.__x, radicand)

    def _key(self) -> Tuple:
        return ("specialized", Fraction(self.__x), self.radicand_kind)


class JetRing(CoefficientRing):
    """
    Second order jets at x = 1: x = 1 + e with e^3 = 0.
    """

    @property
    def name(self) -> str:
        return "jet"

    def base(self, value: Number) -> Jet:
        return Jet(value)

    def base_x(self) -> Jet:
        return Jet(1, 1, 0)

    def base_inverse(self, e: Jet) -> Jet:
        return e.inverse()

    def base_divide(self, e: Jet, n: int) -> Jet:
        return e / n

    def base_denominator(self, e: Jet) -> int:
        return e.common_denominator()

    def base_integer(self, e: Jet) -> Optional[int]:
        if e.c1 or e.c2:
            return None
        v = e.c0
        if isinstance(v, int):
            return v
        return v.numerator if v.denominator == 1 else None

    def extract(self, c: SeriesCoefficient) -> Jet:
        return self._radical_free(c, "a jet coefficient")

    def with_radicand(self, radicand: Radicand) -> JetRing:
        return JetRing(radicand)

    def _key(self) -> Tuple:
        return ("jet", self.radicand_kind)


def describe(ring: CoefficientRing) -> Dict[str, str]:
    return {"ring": ring.name, "radicand": ring.radicand_kind.value}

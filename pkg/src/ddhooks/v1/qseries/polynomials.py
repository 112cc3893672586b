"""
Polynomials in x over Q and the rational function field Q(x), both from sympy's sparse
polynomial rings. Field elements are kept in lowest terms by sympy; the helpers here move
coefficients between sympy's QQ and Python's Fraction.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, List, Optional, Union

from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field
from sympy.polys.rings import PolyElement

Number = Union[int, Fraction]

X_FIELD, X = field("x", QQ)
X_RING = X_FIELD.ring

Polynomial = PolyElement
RationalFunction = FracElement


def to_ground(value: Number):
    """A Python rational as an element of QQ."""
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise TypeError(f"Expected int or Fraction coefficients, got {type(value).__name__}")
    if isinstance(value, int):
        return QQ(value)
    return QQ(value.numerator, value.denominator)


def to_fraction(value) -> Number:
    """An element of QQ as an int when integral, else a Fraction."""
    v = Fraction(int(value.numerator), int(value.denominator))
    return v.numerator if v.denominator == 1 else v


def polynomial(coefficients: Iterable[Number] = ()) -> Polynomial:
    """
    The polynomial with coefficients[i] at x^i.

    Args:
        coefficients (Iterable[Number]): Coefficients in increasing powers of x.

    Returns:
        Polynomial: An element of QQ[x].

    Raises:
        TypeError: A coefficient is not an int or Fraction.
    """
    terms = {(i,): to_ground(c) for i, c in enumerate(coefficients)}
    return X_RING.from_dict({m: c for m, c in terms.items() if c})


def from_counts(counts: Dict[int, int]) -> Polynomial:
    return polynomial([counts.get(i, 0) for i in range(max(counts, default=-1) + 1)])


def degree(p: Polynomial) -> int:
    """The degree in x; -1 for the zero polynomial."""
    return max((i for (i,) in p.keys()), default=-1)


def coefficients(p: Polynomial) -> List[Number]:
    out: List[Number] = [0] * (degree(p) + 1)
    for (i,), c in p.items():
        out[i] = to_fraction(c)
    return out


def as_counts(p: Polynomial) -> Dict[int, Number]:
    return {i: to_fraction(c) for (i,), c in sorted(p.items())}


def coefficient_sum(p: Polynomial) -> Number:
    return sum(as_counts(p).values())


def common_denominator(p: Polynomial) -> int:
    """The least integer clearing every coefficient denominator."""
    return lcm(1, *(int(c.denominator) for c in p.values()))


def is_integral(p: Polynomial) -> bool:
    return common_denominator(p) == 1


def to_strings(p: Polynomial) -> List[str]:
    return [f"{Fraction(v).numerator}/{Fraction(v).denominator}" for v in coefficients(p)]


def as_polynomial(e: RationalFunction) -> Optional[Polynomial]:
    """e as an element of QQ[x], or None when its reduced denominator involves x."""
    if not e.denom.is_ground:
        return None
    return e.numer.quo_ground(e.denom.LC)

"""
Package: ddhooks
License: MIT
"""
from __future__ import annotations

import functools
from fractions import Fraction
from typing import Callable, Optional, TypeVar

import mpmath

from ddhooks.v1.resources.settings import DEFAULT_PRECISION

F = TypeVar('F', bound=Callable)


def precise(func: F) -> F:
    """
    Runs the wrapped function inside ``mpmath.workdps``.

    The wrapped function accepts an extra ``precision`` keyword (decimal digits). Without it the
    current working precision is kept when it is already higher than the package default, so nested
    calls never lose digits.
    """

    @functools.wraps(func)
    def wrapper(*args, precision: Optional[int] = None, **kwargs):
        digits = precision if precision is not None else max(DEFAULT_PRECISION, mpmath.mp.dps)
        with mpmath.workdps(digits):
            return func(*args, **kwargs)

    return wrapper  # type: ignore[return-value]


def to_mpf(value):
    """Converts ints, Fractions, decimal strings and mpmath numbers to mpmath values."""
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    if isinstance(value, str):
        if "/" in value:
            return to_mpf(Fraction(value))
        return mpmath.mpf(value)
    return mpmath.mpmathify(value)


def log_of_rational(value) -> mpmath.mpf:
    """Natural logarithm of a positive rational, computed without forming the (possibly huge) quotient."""
    value = Fraction(value)
    if value <= 0:
        raise ValueError(f"Logarithm of a non-positive value: {value}")
    return mpmath.log(value.numerator) - mpmath.log(value.denominator)

"""
Package: ddhooks
License: MIT
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Union

import mpmath


class Parameter(ABC):
    @abstractmethod
    def __str__(self) -> str:
        """
        Format the parameter as it is written on the command line.
        """
        pass


class RationalParameter(Parameter):
    """
    An exact rational flag value written as "p/q" (or a decimal such as "0.9").
    """

    def __init__(self, value: Union[str, int, Fraction]):
        if isinstance(value, bool) or not isinstance(value, (str, int, Fraction)):
            raise TypeError(f"Expected 'value' to be a str, int or Fraction, got {type(value).__name__}")
        try:
            self.__value = Fraction(value)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not a rational number: {value!r}") from e

    @property
    def value(self) -> Fraction:
        return self.__value

    def __str__(self) -> str:
        return f"{self.__value.numerator}/{self.__value.denominator}"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalParameter) and other.value == self.__value

    def __hash__(self) -> int:
        return hash(self.__value)


def format_rational(value: Union[int, Fraction]) -> str:
    """Lossless "p/q" rendering used by every exact artifact."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value) -> str:
    """Decimal rendering with 15 significant digits for numeric estimates."""
    return mpmath.nstr(value, 15, min_fixed=-5, max_fixed=20)

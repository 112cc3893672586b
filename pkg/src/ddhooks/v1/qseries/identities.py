"""
Both sides of the classical q-series identities, as truncated series with rational parameters.
The free argument z is replaced by z*q so that every side truncates.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Tuple, Union

from .rings import SpecializedRing
from .series import TruncatedSeries

Rational = Union[int, Fraction]
_RING = SpecializedRing(0)


def q_binomial_sides(a: Rational, z: Rational, order: int) -> Tuple[TruncatedSeries, TruncatedSeries]:
    """
    (a z q; q)_inf / (z q; q)_inf against sum_n (a;q)_n (z q)^n / (q;q)_n.
    """
    a, z = Fraction(a), Fraction(z)
    one = TruncatedSeries.one(_RING, order)
    product = one.times_factors(a * z, 1, 1).divided_by_factors(z, 1, 1)
    total = TruncatedSeries.zero(_RING, order)
    term = one
    n = 0
    while n <= order:
        total = total + term
        n += 1
        # (a;q)_n / (q;q)_n gains (1 - a q^{n-1}) / (1 - q^n); z^n q^n gains z q
        term = term.times_factor(a, n - 1).divided_by_factor(1, n).shift(1).scale(z)
    return product, total


def heine_sides(a: Rational, b: Rational, c: Rational, order: int) -> Tuple[TruncatedSeries, TruncatedSeries]:
    """
    The Heine transformation with b -> b q, c -> c q and z = q:

        sum_n (a;q)_n (bq;q)_n / ((q;q)_n (cq;q)_n) q^n
          = (bq;q)_inf (aq;q)_inf / ((cq;q)_inf (q;q)_inf) sum_n (c/b;q)_n b^n q^n / (aq;q)_n
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if not b:
        raise ValueError("Heine transformation needs b != 0")
    one = TruncatedSeries.one(_RING, order)

    left = TruncatedSeries.zero(_RING, order)
    term = one
    n = 0
    while n <= order:
        left = left + term
        n += 1
        term = (term.times_factor(a, n - 1).times_factor(b, n)
                .divided_by_factor(1, n).divided_by_factor(c, n).shift(1))

    prefactor = (one.times_factors(b, 1, 1).times_factors(a, 1, 1)
                 .divided_by_factors(c, 1, 1).divided_by_factors(1, 1, 1))
    inner = TruncatedSeries.zero(_RING, order)
    term = one
    n = 0
    while n <= order:
        inner = inner + term
        n += 1
        term = term.times_factor(c / b, n - 1).divided_by_factor(a, n).shift(1).scale(b)
    return left, prefactor * inner

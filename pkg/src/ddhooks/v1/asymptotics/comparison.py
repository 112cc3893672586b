"""
Package: ddhooks
License: MIT
"""
from __future__ import annotations

import logging
import time
from fractions import Fraction
from typing import Iterable, List, Union

import mpmath

from ddhooks.v1.data import ComparisonRow
from ddhooks.v1.qseries import SpecializedRing, half_F_t, half_Fhat_t
from ddhooks.v1.resources import DomainError, format_decimal, format_rational
from .estimates import dd_asymptotic, ddhat_asymptotic
from .precision import log_of_rational, precise

logger = logging.getLogger(__name__)


def as_rational(x: Union[int, str, Fraction, float]) -> Fraction:
    """Exact value of a flag or test parameter; floats are read through their shortest repr."""
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


@precise
def compare_dd(t: int, n_values: Iterable[int], x, hat: bool = False, strict: bool = False) -> List[ComparisonRow]:
    """
    Exact dd_t(2n;x) (or the shifted-hook count when ``hat``) against its main term for every n.

    One series expansion to the largest n serves all rows. The exact side needs a rational x.

    Returns:
        List[ComparisonRow]: Sorted by n; log_ratio is log(exact) - log(estimate).
    """
    sizes = sorted(set(n_values))
    if not sizes or sizes[0] < 1:
        raise DomainError("Need at least one n >= 1", {"n_values": sizes})
    value = as_rational(x)
    started = time.monotonic()
    ring = SpecializedRing(value)
    series = half_Fhat_t(t, sizes[-1], ring) if hat else half_F_t(t, sizes[-1], ring)
    logger.info("Expanded %s series for t=%d to q^%d at x=%s in %.1fs", "shifted" if hat else "plain", t,
                sizes[-1], format_rational(value), time.monotonic() - started)
    estimator = ddhat_asymptotic if hat else dd_asymptotic
    rows = []
    for n in sizes:
        exact = series.extract(n)
        estimate = estimator(t, n, value, strict=strict)
        log_exact = log_of_rational(exact)
        rows.append(ComparisonRow({
            "t": t,
            "n": n,
            "x": format_rational(value),
            "exact": format_decimal(mpmath.exp(log_exact)),
            "estimate": format_decimal(estimate.value),
            "log_ratio": format_decimal(log_exact - estimate.log_value),
        }))
    return rows


def log_ratios(rows: Iterable[ComparisonRow]) -> List[mpmath.mpf]:
    return [mpmath.mpf(row.log_ratio) for row in rows]

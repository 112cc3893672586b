"""
Moment series of the hook statistics over doubled distinct partitions, read off second order jets
of the generating functions at x = 1.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import List

from ddhooks.v1.resources import DomainError, ParityError
from .generating import half_F_t, half_Fhat_t, strict_series
from .rings import Jet, JetRing, SpecializedRing
from .series import TruncatedSeries

logger = logging.getLogger(__name__)


def moment_from_jet(jet: Jet, k: int) -> Fraction:
    """(x d/dx)^k p at x = 1 from the jet p(1 + e)."""
    if k == 0:
        return Fraction(jet.c0)
    if k == 1:
        return Fraction(jet.c1)
    if k == 2:
        return Fraction(jet.c1) + 2 * Fraction(jet.c2)
    raise DomainError("Only the first two moments are available from second order jets", {"k": k})


def moment_jets(t: int, n: int, hat: bool = False) -> List[Jet]:
    """Jets of dd_t(2m; 1 + e) (or the hat analogue) for m = 0..n."""
    ring = JetRing()
    s = half_Fhat_t(t, n, ring) if hat else half_F_t(t, n, ring)
    return [s.extract(m) for m in range(n + 1)]


def moment_series(t: int, k: int, n: int, hat: bool = False) -> TruncatedSeries:
    """
    sum_m m_{k,t}(2m) q^m up to q^n over the rational ring: the k-th raw moment sum of the t-hook
    count (shifted t-hook count when hat) over doubled distinct partitions of 2m.
    """
    if k not in (1, 2):
        raise DomainError("Moment order must be 1 or 2", {"k": k})
    jets = moment_jets(t, n, hat)
    ring = SpecializedRing(1)
    logger.debug("Moment series k=%d t=%d hat=%s to half order %d", k, t, hat, n)
    return TruncatedSeries(ring, n, [moment_from_jet(j, k) for j in jets])


def first_moment_closed_form(t: int, n: int) -> TruncatedSeries:
    """(-q;q)_inf t q^t / (1 - q^t) in the half variable, the first moment series for odd t."""
    if t % 2 == 0:
        raise ParityError("The closed form holds for odd t only", {"t": t})
    ring = SpecializedRing(1)
    return strict_series(n, ring).shift(t).scale(t).divided_by_factor(1, t)

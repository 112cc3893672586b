"""
Bivariate generating functions for hook statistics.

Series over doubled distinct partitions only have even powers of q; they are expanded in the
half variable (q^2 -> q, index n for size 2n) by the ``half_*`` functions and spread back by the
``gen_*`` functions.
"""
from __future__ import annotations

import logging
from typing import Callable, Dict, Optional

from ddhooks.v1.resources import DomainError
from .rings import CoefficientRing, Radicand, SymbolicRing
from .series import TruncatedSeries

logger = logging.getLogger(__name__)


def _ring_for(ring: Optional[CoefficientRing], radicand: Radicand) -> CoefficientRing:
    if ring is None:
        return SymbolicRing(radicand)
    if ring.radicand_kind != radicand:
        return ring.with_radicand(radicand)
    return ring


def _check_t(t: int):
    if isinstance(t, bool) or not isinstance(t, int):
        raise TypeError(f"Expected 't' to be an int, got {type(t).__name__}")
    if t < 1:
        raise DomainError("t must be a positive integer", {"t": t})


def _check_order(order: int):
    if isinstance(order, bool) or not isinstance(order, int):
        raise TypeError(f"Expected 'order' to be an int, got {type(order).__name__}")
    if order < 0:
        raise DomainError("Truncation order must be nonnegative", {"order": order})


def strict_series(order: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    """(-q;q)_inf, the generating function of strict partitions."""
    ring = ring or SymbolicRing()
    return TruncatedSeries.one(ring, order).times_factors(-1, 1, 1)


def _half_core(t: int, n: int, ring: CoefficientRing, a) -> TruncatedSeries:
    # (-q;q)_inf (a q^t; q^t)_inf^e with e = floor((t-1)/2)
    s = strict_series(n, ring)
    for _ in range((t - 1) // 2):
        s = s.times_factors(a, t, t)
    return s


def half_F_t(t: int, n: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    """sum_n dd_t(2n;x) q^n up to q^n."""
    _check_t(t)
    _check_order(n)
    r = _ring_for(ring, Radicand.OneMinusXSquared)
    a = r.element(r.radicand)
    x = r.x()
    c = _half_core(t, n, r, a)
    z = c.times_factors(a, t, 2 * t) + c.times_factors(a, 2 * t, 2 * t).scale(x)
    if t % 2:
        result = z.scale(r.inverse(r.one() + x))
    else:
        # D* H* = (E + (1-x) O) / (x (1+x)) where E + O y = (X1 + x X2) (y; -q^{t/2})_inf
        even, odd = z.times_factors(r.y(), 0, t // 2, sign=-1).radical_parts()
        result = (even + odd.scale(r.one() - x)).scale(r.inverse(x * (r.one() + x)))
    logger.debug("Expanded F_%d to half order %d over %s", t, n, r.name)
    return result


def half_sum_bracket(t: int, order: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    """
    sum_j (x-1)^j q^{t j(2j+1)} / ((-q^t;q^{2t})_j (q^{2t};q^{2t})_j), the radical-free form of
    1/2 [(-sqrt(1-x) q^t; -q^t)_inf + (sqrt(1-x) q^t; -q^t)_inf].
    """
    _check_t(t)
    _check_order(order)
    r = _ring_for(ring, Radicand.OneMinusX)
    x_minus_one = r.x() - 1
    total = TruncatedSeries.zero(r, order)
    term = TruncatedSeries.one(r, order)
    j = 0
    while t * j * (2 * j + 1) <= order:
        total = total + term
        j += 1
        # term_j = term_{j-1} (x-1) q^{t(4j-1)} / ((1 + q^{t(2j-1)}) (1 - q^{2tj}))
        term = term.shift(t * (4 * j - 1)).scale(x_minus_one)
        term = term.divided_by_factor(-1, t * (2 * j - 1)).divided_by_factor(1, 2 * t * j)
    return total


def radical_bracket(t: int, order: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    """1/2 [(-y q^t; -q^t)_inf + (y q^t; -q^t)_inf] with y^2 = 1 - x, evaluated in the y-extension."""
    _check_t(t)
    _check_order(order)
    r = _ring_for(ring, Radicand.OneMinusX)
    p = TruncatedSeries.one(r, order).times_factors(r.y(), t, t, sign=-1)
    return (p + p.conjugate()).scale(r.inverse(r.scalar(2)))


def half_Fhat_t(t: int, n: int, ring: Optional[CoefficientRing] = None, radical: bool = False) -> TruncatedSeries:
    """sum_n dd^_t(2n;x) q^n up to q^n. Even t uses the radical-free bracket unless radical=True."""
    _check_t(t)
    _check_order(n)
    r = _ring_for(ring, Radicand.OneMinusX)
    a = r.one() - r.x()
    s = _half_core(t, n, r, a).times_factors(a, t, 2 * t)
    if t % 2 == 0:
        bracket = radical_bracket(t // 2, n, r) if radical else half_sum_bracket(t // 2, n, r)
        s = s * bracket
    logger.debug("Expanded Fhat_%d to half order %d over %s", t, n, r.name)
    return s


def half_tcore_DD(t: int, n: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    _check_t(t)
    _check_order(n)
    r = ring or SymbolicRing()
    s = strict_series(n, r)
    if t % 2:
        for _ in range((t - 1) // 2):
            s = s.times_factors(1, t, t)
        return s.divided_by_factors(-1, t, t)
    for _ in range((t - 2) // 2):
        s = s.times_factors(1, t, t)
    return s.divided_by_factors(-1, t // 2, t // 2)


def half_F1(n: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    """(1/x) sum_j q^{j(j+1)/2} (1 - (1-x) q^j) (1-x^2;q)_j / (q;q)_j."""
    _check_order(n)
    r = _ring_for(ring, Radicand.OneMinusXSquared)
    a = r.element(r.radicand)
    one_minus_x = r.one() - r.x()
    total = TruncatedSeries.zero(r, n)
    term = TruncatedSeries.one(r, n)
    j = 0
    while j * (j + 1) // 2 <= n:
        total = total + term.times_factor(one_minus_x, j)
        j += 1
        term = term.shift(j).times_factor(a, j - 1).divided_by_factor(1, j)
    return total.scale(r.inverse(r.x()))


def half_DD_n1hat(n: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    """((1-x)q;q^2)_inf (-q;q)_inf."""
    _check_order(n)
    r = _ring_for(ring, Radicand.OneMinusX)
    return strict_series(n, r).times_factors(r.one() - r.x(), 1, 2)


def half_DD_n1hat_sum(n: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    """sum_j q^{j(j+1)/2} (1-x;q)_j / (q;q)_j."""
    _check_order(n)
    r = _ring_for(ring, Radicand.OneMinusX)
    a = r.one() - r.x()
    total = TruncatedSeries.zero(r, n)
    term = TruncatedSeries.one(r, n)
    j = 0
    while j * (j + 1) // 2 <= n:
        total = total + term
        j += 1
        term = term.shift(j).times_factor(a, j - 1).divided_by_factor(1, j)
    return total


def gen_F_t(t: int, order: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    """sum_m dd_t(m;x) q^m up to q^order."""
    return half_F_t(t, order // 2, ring).spread(2, order)


def gen_Fhat_t(t: int, order: int, ring: Optional[CoefficientRing] = None, radical: bool = False) -> TruncatedSeries:
    return half_Fhat_t(t, order // 2, ring, radical).spread(2, order)


def gen_F1(order: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    return half_F1(order // 2, ring).spread(2, order)


def gen_DD_n1hat(order: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    return half_DD_n1hat(order // 2, ring).spread(2, order)


def gen_DD_n1hat_sum(order: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    return half_DD_n1hat_sum(order // 2, ring).spread(2, order)


def gen_tcore_DD(t: int, order: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    return half_tcore_DD(t, order // 2, ring).spread(2, order)


def gen_SC_n1hat(order: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    """sum over self-conjugate partitions of x^{n^_1} q^{|pi|}."""
    _check_order(order)
    r = _ring_for(ring, Radicand.OneMinusX)
    odd_parts = TruncatedSeries.one(r, order).times_factors(-1, 1, 2)
    return odd_parts * radical_bracket(1, order, r)


def gen_SC_n1hat_sum(order: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    """sum_j q^{j^2} ((1-x)q^2;q^2)_j / (q^2;q^2)_j."""
    _check_order(order)
    r = _ring_for(ring, Radicand.OneMinusX)
    a = r.one() - r.x()
    total = TruncatedSeries.zero(r, order)
    term = TruncatedSeries.one(r, order)
    j = 0
    while j * j <= order:
        total = total + term
        j += 1
        term = term.shift(2 * j - 1).times_factor(a, 2 * j).divided_by_factor(1, 2 * j)
    return total


def gen_SC_n1(order: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    """(-q;q^2)_inf H*(x;q): sum over self-conjugate partitions of x^{n_1} q^{|pi|}."""
    _check_order(order)
    r = _ring_for(ring, Radicand.OneMinusXSquared)
    x = r.x()
    # H* = (E + (1-x) O) / x where E + O y = (y; -q)_inf
    p = TruncatedSeries.one(r, order).times_factors(-1, 1, 2).times_factors(r.y(), 0, 1, sign=-1)
    even, odd = p.radical_parts()
    return (even + odd.scale(r.one() - x)).scale(r.inverse(x))


def gen_han(t: int, order: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    """((1-x)q^t;q^t)_inf^t / (q;q)_inf: x marks t-hooks over all partitions."""
    _check_t(t)
    _check_order(order)
    r = ring or SymbolicRing()
    a = r.one() - r.x()
    s = TruncatedSeries.one(r, order)
    for _ in range(t):
        s = s.times_factors(a, t, t)
    return s.divided_by_factors(1, 1, 1)


GENERATORS: Dict[str, Callable[..., TruncatedSeries]] = {
    "F": lambda t, order, ring=None: gen_F_t(t, order, ring),
    "Fhat": lambda t, order, ring=None: gen_Fhat_t(t, order, ring),
    "F1": lambda t, order, ring=None: gen_F1(order, ring),
    "han": lambda t, order, ring=None: gen_han(t, order, ring),
    "tcore": lambda t, order, ring=None: gen_tcore_DD(t, order, ring),
    "ddn1hat": lambda t, order, ring=None: gen_DD_n1hat(order, ring),
    "scn1hat": lambda t, order, ring=None: gen_SC_n1hat(order, ring),
    "scn1": lambda t, order, ring=None: gen_SC_n1(order, ring),
}


def generate(name: str, t: int, order: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    try:
        builder = GENERATORS[name]
    except KeyError:
        raise DomainError("Unknown generating function", {"gen": name, "known": sorted(GENERATORS)}) from None
    return builder(t, order, ring)

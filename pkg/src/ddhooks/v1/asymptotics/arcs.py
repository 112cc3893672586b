"""
Behaviour of sum_n dd_t(2n;x) q^n near the roots of unity.

For odd t the series splits as A_0 + A_1 and for even t as B_0^+ + B_0^- + B_1^+ + B_1^-. Near
exp(2 pi i h / k) with k odd each piece behaves like a constant (alpha_j or beta_j^+-) times
exp((Li_2(1) - d^2 Li_2((1 - x^2)^{k/d})) / (4 pi k z)).
"""
from __future__ import annotations

import logging
from fractions import Fraction

import mpmath

from ddhooks.v1.data import ArcBranch
from ddhooks.v1.resources import DomainError, ParityError
from .dilog import dilog
from .expansions import root_of_unity
from .multiplier import _check_pair, dedekind_multiplier
from .precision import precise, to_mpf

logger = logging.getLogger(__name__)


def _check_arguments(t: int, x, j: int, branch: ArcBranch):
    if isinstance(t, bool) or not isinstance(t, int) or t < 1:
        raise DomainError("t must be a positive integer", {"t": t})
    if j not in (0, 1):
        raise DomainError("j must be 0 or 1", {"j": j})
    if not isinstance(branch, ArcBranch):
        raise TypeError(f"Expected 'branch' to be an ArcBranch, got {type(branch).__name__}")
    if branch is ArcBranch.Alpha and t % 2 == 0:
        raise ParityError("alpha constants belong to odd t", {"t": t})
    if branch is not ArcBranch.Alpha and t % 2 == 1:
        raise ParityError("beta constants belong to even t", {"t": t})
    x = to_mpf(x)
    if not 0 < x < mpmath.sqrt(2):
        raise DomainError("Need 0 < x < sqrt(2)", {"x": str(x)})
    return x


def _power(base, exponent):
    # principal branch, exponent real
    return mpmath.exp(to_mpf(exponent) * mpmath.log(base))


def _radicals(x, branch: ArcBranch):
    sign = 1 if branch is ArcBranch.BetaPlus else -1
    ratio = mpmath.sqrt((1 - x) / (1 + x))
    root = mpmath.sqrt(1 - x ** 2)
    return sign, ratio, root


@precise
def dominant_arc_constants(t: int, x, h: int, k: int, j: int, branch: ArcBranch) -> mpmath.mpc:
    """
    alpha_j(x, h, k) for odd t or beta_j^+-(x, h, k) for even t.

    Raises:
        ParityError: k is even, or the branch does not match the parity of t.
    """
    x = _check_arguments(t, x, j, branch)
    _check_pair(h, k)
    if k % 2 == 0:
        raise ParityError("Arc constants are defined for odd k", {"k": k})
    X = 1 - x ** 2
    half = Fraction(1, 2)
    multiplier = dedekind_multiplier(h, k) / dedekind_multiplier(2 * h % k, k)
    hooks = Fraction(t - 1, 2) if branch is ArcBranch.Alpha else Fraction(t - 2, 2)
    value = mpmath.mpc(1)
    for l in range(1, k + 1):
        value *= _power(1 - X * root_of_unity(k, h * t * l), hooks * (half - Fraction(l, k)))
        value *= _power(1 - X * root_of_unity(k, h * t * (2 * l - j)), half - Fraction(2 * l - j, 2 * k))
    if branch is ArcBranch.Alpha:
        return multiplier / mpmath.sqrt(2) * x ** (1 - j) / (1 + x) * value
    sign, ratio, root = _radicals(x, branch)
    for l in range(1, 2 * k + 1):
        value *= _power(1 - sign * (-1) ** l * root * root_of_unity(k, Fraction(h * t * l, 2)),
                        half - Fraction(l, 2 * k))
    return (multiplier / (2 * mpmath.sqrt(2) * x ** j * (1 + x)) * (1 + sign * ratio) * (1 - sign * root)
            * value)


@precise
def dominant_arc_magnitude(t: int, x, j: int, branch: ArcBranch) -> mpmath.mpf:
    """Closed form of |alpha_j| or |beta_j^+-|; it depends on neither h nor k."""
    x = _check_arguments(t, x, j, branch)
    if branch is ArcBranch.Alpha:
        return 1 / (mpmath.sqrt(2) * x ** (mpmath.mpf(t - 1) / 2) * (1 + x))
    sign, ratio, root = _radicals(x, branch)
    return (abs(1 + sign * ratio) * mpmath.sqrt(abs(1 - sign * root))
            / (2 * mpmath.sqrt(2) * x ** (mpmath.mpf(t) / 2) * (1 + x)))


@precise
def arc_piece(t: int, x, q, j: int, branch: ArcBranch):
    """
    A_j(x; q) (alpha branch) or B_j^+-(x; q) evaluated with infinite products.

    The pieces of one parity of t add up to sum_n dd_t(2n;x) q^n.
    """
    x = _check_arguments(t, x, j, branch)
    q = to_mpf(q)
    if abs(q) >= 1:
        raise DomainError("Need |q| < 1", {"q": str(q)})
    X = 1 - x ** 2
    qt = q ** t
    core = mpmath.qp(-q, q)
    hooks = (t - 1) // 2 if branch is ArcBranch.Alpha else (t - 2) // 2
    if hooks:
        core *= mpmath.qp(X * qt, qt) ** hooks
    # j = 0 takes (X q^{2t}; q^{2t}), j = 1 takes (X q^t; q^{2t})
    core *= mpmath.qp(X * qt ** (2 - j), qt ** 2)
    if branch is ArcBranch.Alpha:
        return core * x ** (1 - j) / (1 + x)
    sign, ratio, root = _radicals(x, branch)
    core *= mpmath.qp(sign * root, -q ** (t // 2))
    return core * (1 + sign * ratio) / (2 * x ** j * (1 + x))


@precise
def arc_ratio(t: int, x, z, j: int, branch: ArcBranch):
    """
    A_j / (alpha_j(x, 0, 1) exp((Li_2(1) - Li_2(1 - x^2)) / (4 pi z))) at q = exp(-2 pi z), or the
    same for B_j^+-; tends to 1 as z -> 0.
    """
    x = _check_arguments(t, x, j, branch)
    z = to_mpf(z)
    if z <= 0:
        raise DomainError("z must be positive", {"z": str(z)})
    q = mpmath.exp(-2 * mpmath.pi * z)
    main = mpmath.exp((mpmath.pi ** 2 / 6 - dilog(1 - x ** 2)) / (4 * mpmath.pi * z))
    ratio = arc_piece(t, x, q, j, branch) / (dominant_arc_constants(t, x, 0, 1, j, branch) * main)
    logger.debug("Arc ratio t=%d x=%s z=%s j=%d %s: %s", t, x, z, j, branch.value, ratio)
    return ratio

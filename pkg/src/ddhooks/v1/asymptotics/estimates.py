"""
Closed-form asymptotics: the main terms of dd_t(2n;x) and its shifted-hook analogue, the corrected
expansion of q(n), the first two hook moments and the mean and variance of the hook counts.

delta below is 1 for even t and 0 for odd t.
"""
from __future__ import annotations

import logging
from typing import Tuple

import mpmath

from ddhooks.v1.data import AsymptoticEstimate
from ddhooks.v1.resources import DomainError, HypothesisViolated, ParityError
from .dilog import dilog
from .precision import precise, to_mpf

logger = logging.getLogger(__name__)


def _check_t(t: int):
    if isinstance(t, bool) or not isinstance(t, int) or t < 1:
        raise DomainError("t must be a positive integer", {"t": t})


def _check_n(n: int):
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"Expected 'n' to be an int, got {type(n).__name__}")
    if n < 1:
        raise DomainError("n must be at least 1", {"n": n})


def _delta(t: int) -> int:
    return 1 if t % 2 == 0 else 0


def _x_in(x, upper):
    x = to_mpf(x)
    if isinstance(x, mpmath.mpc) or not 0 < x < upper:
        raise DomainError(f"Need 0 < x < {mpmath.nstr(upper, 6)}", {"x": str(x)})
    return x


@precise
def c_fn(x):
    """c(x) = pi^2/6 - Li_2(1 - x^2) for 0 < x < sqrt(2)."""
    x = _x_in(x, mpmath.sqrt(2))
    return mpmath.pi ** 2 / 6 - dilog(1 - x ** 2)


@precise
def b_fn(x):
    """(1 + sqrt((1-x)/(1+x))) (1 - sqrt(1-x^2))^(1/2) + (1 - sqrt((1-x)/(1+x))) (1 + sqrt(1-x^2))^(1/2)."""
    x = _x_in(x, mpmath.sqrt(2))
    ratio = mpmath.sqrt((1 - x) / (1 + x))
    root = mpmath.sqrt(1 - x ** 2)
    # for x > 1 both radicals are imaginary and the two terms are conjugate
    return mpmath.re((1 + ratio) * mpmath.sqrt(1 - root) + (1 - ratio) * mpmath.sqrt(1 + root))


@precise
def a_fn(x, t: int):
    _check_t(t)
    x = _x_in(x, mpmath.sqrt(2))
    if t % 2:
        return 1 / (2 ** mpmath.mpf(0.75) * mpmath.sqrt(mpmath.pi) * x ** (mpmath.mpf(t - 1) / 2) * (1 + x))
    return b_fn(x) / (2 ** mpmath.mpf(1.75) * mpmath.sqrt(mpmath.pi) * x ** (mpmath.mpf(t) / 2) * (1 + x))


@precise
def chat_fn(x):
    """pi^2/6 - Li_2(1 - x) for 0 < x < 2."""
    x = _x_in(x, 2)
    return mpmath.pi ** 2 / 6 - dilog(1 - x)


@precise
def ahat_fn(x, t: int):
    _check_t(t)
    x = _x_in(x, 2)
    if t % 2:
        return 1 / (2 ** mpmath.mpf(1.75) * mpmath.sqrt(mpmath.pi) * x ** (mpmath.mpf(t - 1) / 4))
    root = mpmath.sqrt(1 - x)
    numerator = mpmath.re(mpmath.sqrt(1 + root) + mpmath.sqrt(1 - root))
    return numerator / (2 ** mpmath.mpf(2.75) * mpmath.sqrt(mpmath.pi) * x ** (mpmath.mpf(t) / 4))


def _hypothesis(name: str, t: int, x, argument, strict: bool):
    bound = mpmath.pi ** 2 / (12 * t ** 2)
    value = dilog(argument)
    if value < bound:
        return
    context = {"t": t, "x": str(x), "dilog": mpmath.nstr(value, 15), "bound": mpmath.nstr(bound, 15)}
    if strict:
        raise HypothesisViolated(f"{name} needs Li_2 below pi^2/(12 t^2)", context)
    logger.warning("%s evaluated outside its hypotheses: %s", name, context)


def _main_term(a, c, n: int) -> mpmath.mpf:
    return mpmath.log(a) + mpmath.log(c) / 4 - 3 * mpmath.log(n) / 4 + mpmath.sqrt(2 * c * n)


@precise
def dd_asymptotic(t: int, n: int, x, strict: bool = True) -> AsymptoticEstimate:
    """
    a(x) c(x)^(1/4) n^(-3/4) exp(sqrt(2 c(x) n)), the main term of dd_t(2n;x).

    Args:
        t (int): Hook length.
        n (int): Half the partition size.
        x: Real with 0 < x < sqrt(2).
        strict (bool): Raise HypothesisViolated when Li_2(1 - x^2) >= pi^2/(12 t^2); otherwise log a
            warning and evaluate anyway.
    """
    _check_t(t)
    _check_n(n)
    x = _x_in(x, mpmath.sqrt(2))
    _hypothesis("dd_asymptotic", t, x, 1 - x ** 2, strict)
    return AsymptoticEstimate(_main_term(a_fn(x, t), c_fn(x), n), n, mpmath.mpf(-0.5))


@precise
def ddhat_asymptotic(t: int, n: int, x, strict: bool = True) -> AsymptoticEstimate:
    """The shifted-hook analogue of dd_asymptotic, with c^ and a^; needs 0 < x < 2."""
    _check_t(t)
    _check_n(n)
    x = _x_in(x, 2)
    _hypothesis("ddhat_asymptotic", t, x, 1 - x, strict)
    return AsymptoticEstimate(_main_term(ahat_fn(x, t), chat_fn(x), n), n, mpmath.mpf(-0.5))


@precise
def q_n_asymptotic(n: int, terms: int = 3) -> mpmath.mpf:
    """
    The number of strict partitions of n, (1/(4 3^(1/4))) n^(-3/4) exp(pi sqrt(n/3)) times the
    bracket truncated after ``terms`` terms.
    """
    _check_n(n)
    if terms not in (1, 2, 3):
        raise DomainError("terms must be 1, 2 or 3", {"terms": terms})
    pi = mpmath.pi
    root = mpmath.sqrt(3 * n)
    bracket = mpmath.mpf(1)
    if terms >= 2:
        bracket += (pi / 48 - 9 / (8 * pi)) / root
    if terms >= 3:
        bracket += (pi ** 2 / 4608 - mpmath.mpf(15) / 128 - 135 / (128 * pi ** 2)) / (3 * n)
    main = mpmath.exp(pi * mpmath.sqrt(mpmath.mpf(n) / 3)) / (4 * mpmath.mpf(3) ** mpmath.mpf(0.25) * mpmath.mpf(n) ** mpmath.mpf(0.75))
    return main * bracket


@precise
def moment_asymptotics(t: int, n: int, k: int) -> mpmath.mpf:
    """m_{k,t}(2n), the k-th raw moment sum of the t-hook count, through the 1/n term."""
    _check_t(t)
    _check_n(n)
    pi = mpmath.pi
    delta = _delta(t)
    root = mpmath.sqrt(3 * n)
    growth = mpmath.exp(pi * mpmath.sqrt(mpmath.mpf(n) / 3))
    if k == 1:
        first = 3 / (8 * pi) + pi * (1 - 12 * t + 6 * delta) / 48
        second = (81 / (128 * pi ** 2) - mpmath.mpf(3 * (1 - 12 * t + 6 * delta)) / 128
                  + pi ** 2 * (1 + 12 * delta - 24 * t + 96 * t ** 2) / 4608)
        main = mpmath.mpf(3) ** mpmath.mpf(0.25) / (2 * pi) * mpmath.mpf(n) ** mpmath.mpf(-0.25) * growth
        return main * (1 + first / root + second / (3 * n))
    if k == 2:
        first = 9 / (8 * pi) + pi * (24 * t - 25 - 12 * delta) / 48
        second = (135 / (128 * pi ** 2) + mpmath.mpf(24 * t - 25 - 12 * delta) / 128
                  + pi ** 2 * (239 + 48 * delta + 48 * t + 288 * t * delta - 480 * t ** 2) / 4608)
        main = mpmath.mpf(3) ** mpmath.mpf(0.75) / pi ** 2 * mpmath.mpf(n) ** mpmath.mpf(0.25) * growth
        return main * (1 - first / root - second / (3 * n))
    raise DomainError("Moment order must be 1 or 2", {"k": k})


@precise
def mean_var_asymptotic(t: int, n: int, hat: bool = False) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """
    Mean and variance of the t-hook count (shifted t-hook count when ``hat``) of a uniformly random
    doubled distinct partition of 2n, through the constant term.
    """
    _check_t(t)
    _check_n(n)
    pi = mpmath.pi
    delta = _delta(t)
    root = mpmath.sqrt(3 * n)
    if hat:
        mean = root / pi + 3 / (2 * pi ** 2) - mpmath.mpf(t) / 4 + mpmath.mpf(1) / 4 - mpmath.mpf(delta) / 8
        variance = (pi ** 2 - 6) * root / (2 * pi ** 3) - 9 / pi ** 4 + 3 / (4 * pi ** 2) + mpmath.mpf(delta) / 32
    else:
        mean = 2 * root / pi + 3 / pi ** 2 - mpmath.mpf(t) / 2 + mpmath.mpf(delta) / 4
        variance = (2 * (pi ** 2 - 6) * root / pi ** 3 - 36 / pi ** 4 + 3 / pi ** 2 - mpmath.mpf(1) / 4
                    - mpmath.mpf(delta) / 8)
    return mean, variance


@precise
def f_moment_expansion(t: int, k: int, z):
    """
    Small z expansion of f_{k,t}(e^{-z}), the rational factor with S_{k,t}(q) = (-q;q)_inf f_{k,t}(q).
    """
    _check_t(t)
    z = to_mpf(z)
    delta = _delta(t)
    if k == 1:
        return 1 / z - mpmath.mpf(t) / 2 + mpmath.mpf(delta) / 4 + t ** 2 * z / 12
    if k == 2:
        return (1 / z ** 2 + (1 - t + mpmath.mpf(delta) / 2) / z + mpmath.mpf(5 * t ** 2) / 12 - mpmath.mpf(1) / 4
                - mpmath.mpf(delta) / 4 * (t + mpmath.mpf(1) / 4))
    raise DomainError("Moment order must be 1 or 2", {"k": k})


@precise
def strict_product_expansion(z):
    """(-q;q)_inf at q = e^{-z}, up to a factor 1 + O(exp(-2 pi^2 / z))."""
    z = to_mpf(z)
    return mpmath.exp(mpmath.pi ** 2 / (12 * z) + z / 24) / mpmath.sqrt(2)


@precise
def sqrt_c_expansion(u):
    """pi/sqrt(6) + sqrt(6) u / pi + sqrt(3/2) (pi^2 - 6) u^2 / pi^3, the expansion of sqrt(c(e^u))."""
    u = to_mpf(u)
    pi = mpmath.pi
    return pi / mpmath.sqrt(6) + mpmath.sqrt(6) * u / pi + mpmath.sqrt(mpmath.mpf(3) / 2) * (pi ** 2 - 6) * u ** 2 / pi ** 3


@precise
def first_moment_odd_closed_form(t: int, z):
    """t q^t / (1 - q^t) at q = e^{-z}; f_{1,t} for odd t."""
    _check_t(t)
    if t % 2 == 0:
        raise ParityError("The closed form holds for odd t only", {"t": t})
    q = mpmath.exp(-to_mpf(z))
    return t * q ** t / (1 - q ** t)

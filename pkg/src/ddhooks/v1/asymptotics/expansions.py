"""
Logarithms of the infinite products (X q^t; q^t), (X q^t; q^{2t}) and (X; -q^t) near a root of
unity q -> exp(2 pi i h / k), with q = exp(2 pi i (h + i z) / k).

The expansion keeps the 1/z pole and the finite sum of principal logarithms; what is left over is
O(k z). ``log_pochhammer_direct`` sums the principal logarithms of the factors themselves and is
the reference the expansion is measured against.
"""
from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Optional

import mpmath

from ddhooks.v1.data import ProductForm, RootOfUnityContext
from ddhooks.v1.resources import DomainError
from .dilog import dilog
from .precision import precise, to_mpf

logger = logging.getLogger(__name__)

# factors are summed until |q^t|^m drops below exp(-TAIL_CUTOFF)
TAIL_CUTOFF = 70


def root_of_unity(k: int, exponent) -> mpmath.mpc:
    """zeta_k^exponent for an integer or half-integer exponent."""
    exponent = Fraction(exponent)
    period = k * exponent.denominator
    reduced = Fraction(exponent.numerator % period, exponent.denominator)
    return mpmath.expjpi(to_mpf(2 * reduced / k))


def _check(ctx: RootOfUnityContext, X, form: ProductForm):
    if not isinstance(ctx, RootOfUnityContext):
        raise TypeError(f"Expected 'ctx' to be a RootOfUnityContext, got {type(ctx).__name__}")
    if not isinstance(form, ProductForm):
        raise TypeError(f"Expected 'form' to be a ProductForm, got {type(form).__name__}")
    X = to_mpf(X)
    if isinstance(X, mpmath.mpc) or abs(X) >= 1:
        raise DomainError("The product expansions need a real X with |X| < 1", {"X": str(X)})
    return X


@precise
def pole_term(ctx: RootOfUnityContext, X, form: ProductForm):
    """The 1/z part of the expansion, in the closed form using d = gcd(t, k)."""
    X = _check(ctx, X, form)
    k, t, d, z = ctx.k, ctx.t, ctx.d, ctx.z
    reduced = k // d
    pi = mpmath.pi
    if form is ProductForm.QtQt:
        return -d ** 2 * dilog(X ** reduced) / (2 * pi * t * k * z)
    if form is ProductForm.QtQ2t:
        if reduced % 2:
            return -d ** 2 * dilog(X ** reduced) / (4 * pi * t * k * z)
        return -d ** 2 * (dilog(X ** reduced) - 2 * dilog(X ** (reduced // 2))) / (2 * pi * t * k * z)
    if reduced % 2:
        return -d ** 2 * dilog(X ** (2 * reduced)) / (8 * pi * t * k * z)
    # (X; -q^t) = (1 - X) (X q^{2t}; q^{2t}) (-X q^t; q^{2t}); both pieces have gcd 2d with k
    half = reduced // 2
    return -d ** 2 * (dilog(X ** half) + dilog(-(-X) ** half)) / (pi * t * k * z)


@precise
def pole_term_by_roots(ctx: RootOfUnityContext, X, form: ProductForm):
    """The 1/z part summed root by root with the complex dilogarithm."""
    X = _check(ctx, X, form)
    h, k, t, z = ctx.h, ctx.k, ctx.t, ctx.z
    pi = mpmath.pi
    if form is ProductForm.QtQt:
        total = mpmath.fsum(mpmath.polylog(2, X * root_of_unity(k, h * t * l)) for l in range(1, k + 1))
        return -total / (2 * pi * t * z)
    if form is ProductForm.QtQ2t:
        total = mpmath.fsum(mpmath.polylog(2, X * root_of_unity(k, h * t * (2 * l - 1))) for l in range(1, k + 1))
        return -total / (4 * pi * t * z)
    total = mpmath.fsum(mpmath.polylog(2, (-1) ** l * X * root_of_unity(k, h * t * l)) for l in range(1, 2 * k + 1))
    return -total / (4 * pi * t * z)


@precise
def finite_term(ctx: RootOfUnityContext, X, form: ProductForm):
    """The z-independent part of the expansion: weighted principal logarithms at the roots."""
    X = _check(ctx, X, form)
    h, k, t = ctx.h, ctx.k, ctx.t
    half = Fraction(1, 2)
    if form is ProductForm.QtQt:
        return mpmath.fsum(
            to_mpf(half - Fraction(l, k)) * mpmath.log(1 - X * root_of_unity(k, h * t * l))
            for l in range(1, k + 1))
    if form is ProductForm.QtQ2t:
        return mpmath.fsum(
            to_mpf(half - Fraction(2 * l - 1, 2 * k)) * mpmath.log(1 - X * root_of_unity(k, h * t * (2 * l - 1)))
            for l in range(1, k + 1))
    return mpmath.log(1 - X) + mpmath.fsum(
        to_mpf(half - Fraction(l, 2 * k)) * mpmath.log(1 - (-1) ** l * X * root_of_unity(k, h * t * l))
        for l in range(1, 2 * k + 1))


@precise
def log_pochhammer_expansion(ctx: RootOfUnityContext, X, form: ProductForm):
    """
    Main terms of Log(X q^t; q^t), Log(X q^t; q^{2t}) or Log(X; -q^t) as z -> 0.

    Args:
        ctx (RootOfUnityContext): h, k, t and z.
        X: A real number with |X| < 1.
        form (ProductForm): Which product.

    Returns:
        mpc: pole_term + finite_term; the difference to the true logarithm is O(k z).
    """
    return pole_term(ctx, X, form) + finite_term(ctx, X, form)


def _auto_terms(ctx: RootOfUnityContext, step: int) -> int:
    decay = 2 * math.pi * ctx.t * float(mpmath.re(ctx.z)) * step / ctx.k
    return int(math.ceil(TAIL_CUTOFF / decay)) + 1


@precise
def log_pochhammer_direct(ctx: RootOfUnityContext, X, form: ProductForm, terms: Optional[int] = None):
    """
    The sum of principal logarithms of the first ``terms`` factors of the product.

    Without ``terms`` enough factors are taken for the tail to drop below exp(-70).
    """
    X = _check(ctx, X, form)
    base = mpmath.exp(2j * mpmath.pi * ctx.t * (ctx.h + 1j * ctx.z) / ctx.k)
    if form is ProductForm.QtQt:
        count = terms if terms is not None else _auto_terms(ctx, 1)
        power, ratio = base, base
        first = []
    elif form is ProductForm.QtQ2t:
        count = terms if terms is not None else _auto_terms(ctx, 2)
        power, ratio = base, base * base
        first = []
    else:
        count = terms if terms is not None else _auto_terms(ctx, 1)
        power, ratio = -base, -base
        first = [mpmath.log(1 - X)]
    logger.debug("Direct log product %s over %d factors for %r", form.value, count, ctx)
    total = mpmath.fsum(first)
    chunk = []
    for _ in range(count):
        chunk.append(mpmath.log(1 - X * power))
        power *= ratio
        if len(chunk) == 1024:
            total += mpmath.fsum(chunk)
            chunk = []
    return total + mpmath.fsum(chunk)


@precise
def expansion_residual(ctx: RootOfUnityContext, X, form: ProductForm, terms: Optional[int] = None):
    """|direct - expansion|, the quantity that shrinks linearly in z."""
    return abs(log_pochhammer_direct(ctx, X, form, terms) - log_pochhammer_expansion(ctx, X, form))

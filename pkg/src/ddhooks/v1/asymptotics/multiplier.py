"""
Dedekind sums, the eta multiplier and a numeric check of the transformation of (q;q)_inf.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

import mpmath

from ddhooks.v1.resources import DomainError
from .precision import precise, to_mpf


def _check_pair(h: int, k: int):
    for name, value in (("h", h), ("k", k)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"Expected '{name}' to be an int, got {type(value).__name__}")
    if k < 1 or not 0 <= h < k or math.gcd(h, k) != 1:
        raise DomainError("Need 0 <= h < k with gcd(h, k) = 1", {"h": h, "k": k})


def sawtooth(x: Fraction) -> Fraction:
    """((x)): x - floor(x) - 1/2 off the integers, 0 on them."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def dedekind_sum(h: int, k: int) -> Fraction:
    """s(h, k) = sum_{mu=1}^{k-1} ((mu/k)) ((h mu/k)), exactly."""
    _check_pair(h, k)
    return sum((sawtooth(Fraction(mu, k)) * sawtooth(Fraction(h * mu, k)) for mu in range(1, k)), Fraction(0))


@precise
def dedekind_multiplier(h: int, k: int) -> mpmath.mpc:
    """omega_{h,k} = exp(pi i s(h, k))."""
    return mpmath.expjpi(to_mpf(dedekind_sum(h, k)))


def modular_inverse(h: int, k: int) -> int:
    """The h' in [0, k) with h h' = -1 (mod k)."""
    _check_pair(h, k)
    if k == 1:
        return 0
    return (-pow(h, -1, k)) % k


@precise
def eta_transform_check(h: int, k: int, z, terms: Optional[int] = None) -> mpmath.mpf:
    """
    Residual |LHS - RHS| of (q1;q1)_inf = omega_{h,k} sqrt(z) exp(pi (1/z - z) / (12 k)) (q;q)_inf with
    q = exp(2 pi i (h + i z) / k) and q1 = exp(2 pi i (h' + i / z) / k).

    Args:
        h (int): Numerator of the root of unity.
        k (int): Its order.
        z: Complex with positive real part.
        terms (int, optional): Truncate both products after this many factors. Infinite products
            otherwise.
    """
    _check_pair(h, k)
    z = to_mpf(z)
    if mpmath.re(z) <= 0:
        raise DomainError("z must have positive real part", {"z": str(z)})
    h_prime = modular_inverse(h, k)
    q = mpmath.exp(2j * mpmath.pi * (h + 1j * z) / k)
    q1 = mpmath.exp(2j * mpmath.pi * (h_prime + 1j / z) / k)
    lhs = mpmath.qp(q1, q1, terms)
    rhs = (dedekind_multiplier(h, k) * mpmath.sqrt(z) * mpmath.exp(mpmath.pi * (1 / z - z) / (12 * k))
           * mpmath.qp(q, q, terms))
    return abs(lhs - rhs)

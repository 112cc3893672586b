"""
The dilogarithm on [-1, 1].
"""
from __future__ import annotations

import mpmath

from ddhooks.v1.resources import DomainError
from .precision import precise, to_mpf


def _real_argument(z):
    z = to_mpf(z)
    if isinstance(z, mpmath.mpc):
        if mpmath.im(z) != 0:
            raise DomainError("Dilogarithm is evaluated for real arguments only", {"z": str(z)})
        z = mpmath.re(z)
    if z < -1 or z > 1:
        raise DomainError("Dilogarithm is evaluated on [-1, 1] only", {"z": str(z)})
    return z


@precise
def dilog(z, reflect: bool = True):
    """
    Li_2(z) for real -1 <= z <= 1.

    Above 1/2 the value comes from the reflection Li_2(z) + Li_2(1 - z) = pi^2/6 - log(z) log(1 - z),
    unless ``reflect`` is False, in which case ``mpmath.polylog`` is used throughout.
    """
    z = _real_argument(z)
    if z == 1:
        return mpmath.pi ** 2 / 6
    if reflect and z > mpmath.mpf(1) / 2:
        return dilog_reflection(z)
    return mpmath.polylog(2, z)


@precise
def dilog_reflection(z):
    """pi^2/6 - log(z) log(1 - z) - Li_2(1 - z) for 0 < z <= 1."""
    z = _real_argument(z)
    if z <= 0:
        raise DomainError("Reflection needs a positive argument", {"z": str(z)})
    if z == 1:
        return mpmath.pi ** 2 / 6
    return mpmath.pi ** 2 / 6 - mpmath.log(z) * mpmath.log(1 - z) - mpmath.polylog(2, 1 - z)

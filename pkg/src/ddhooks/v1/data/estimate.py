from __future__ import annotations

import math
from enum import Enum
from typing import Dict, Union

import mpmath


class ProductForm(Enum):
    QtQt = "qt_qt"          # (X q^t; q^t)_inf
    QtQ2t = "qt_q2t"        # (X q^t; q^{2t})_inf
    XMinusQt = "x_minusqt"  # (X; -q^t)_inf


class ArcBranch(Enum):
    Alpha = "alpha"
    BetaPlus = "beta_plus"
    BetaMinus = "beta_minus"


class RootOfUnityContext:
    """
    The neighbourhood q = exp(2 pi i (h + i z) / k) of the root of unity exp(2 pi i h / k), for a
    product in the base q^t.
    """

    def __init__(self, h: int, k: int, t: int, z: Union[complex, float, mpmath.mpf, mpmath.mpc]):
        for name, value in (("h", h), ("k", k), ("t", t)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"Expected '{name}' to be an int, got {type(value).__name__}")
        if k < 1 or t < 1:
            raise ValueError("k and t must be positive")
        if not 0 <= h < k:
            raise ValueError(f"h must satisfy 0 <= h < k, got h={h}, k={k}")
        if math.gcd(h, k) != 1:
            raise ValueError(f"h and k must be coprime, got h={h}, k={k}")
        z = mpmath.mpmathify(z)
        if mpmath.re(z) <= 0:
            raise ValueError("z must have positive real part")
        self.__h = h
        self.__k = k
        self.__t = t
        self.__z = z

    @property
    def h(self) -> int:
        return self.__h

    @property
    def k(self) -> int:
        return self.__k

    @property
    def t(self) -> int:
        return self.__t

    @property
    def d(self) -> int:
        return math.gcd(self.__t, self.__k)

    @property
    def z(self):
        return self.__z

    @property
    def q(self):
        return mpmath.exp(2j * mpmath.pi * (self.__h + 1j * self.__z) / self.__k)

    def with_z(self, z) -> RootOfUnityContext:
        return RootOfUnityContext(self.__h, self.__k, self.__t, z)

    def __repr__(self) -> str:
        return f"RootOfUnityContext(h={self.__h}, k={self.__k}, t={self.__t}, z={self.__z})"

    def to_dict(self) -> Dict:
        return {"h": self.__h, "k": self.__k, "t": self.__t, "d": self.d, "z": str(self.__z)}


class AsymptoticEstimate:
    """
    The main term of an asymptotic formula at size parameter n, kept with its logarithm so that
    comparisons happen in log space.
    """

    def __init__(self, log_value, n: int, claimed_error_exponent=mpmath.mpf(-0.5)):
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError(f"Expected 'n' to be an int, got {type(n).__name__}")
        log_value = mpmath.mpmathify(log_value)
        if not mpmath.isfinite(log_value):
            raise ValueError("Estimate must be finite and positive")
        self.__log_value = log_value
        self.__n = n
        self.__exponent = mpmath.mpmathify(claimed_error_exponent)

    @property
    def value(self):
        return mpmath.exp(self.__log_value)

    @property
    def log_value(self):
        return self.__log_value

    @property
    def n(self) -> int:
        return self.__n

    @property
    def claimed_error_exponent(self):
        return self.__exponent

    def log_ratio(self, exact) -> mpmath.mpf:
        """log(exact) - log(estimate)."""
        return mpmath.log(exact) - self.__log_value

    def __repr__(self) -> str:
        return f"AsymptoticEstimate(value={mpmath.nstr(self.value, 15)}, n={self.__n})"

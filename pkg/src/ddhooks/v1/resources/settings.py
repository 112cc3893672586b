"""
Package: ddhooks
License: MIT
"""
from __future__ import annotations

import os
from typing import Mapping, Optional

DEFAULT_PRECISION = 50
DEFAULT_WORKERS = 1
DEFAULT_ORACLE_LIMIT = 40


class Settings:
    """
    Run configuration shared by the commands.

    Attributes:
        precision (int): mpmath working precision in decimal digits.
        workers (int): Process pool size used by sweeps.
        oracle_limit (int): Largest partition size for which generating function results are
            cross-checked against enumeration.
    """

    def __init__(self, precision: int = DEFAULT_PRECISION, workers: int = DEFAULT_WORKERS,
                 oracle_limit: int = DEFAULT_ORACLE_LIMIT):
        self.precision = precision
        self.workers = workers
        self.oracle_limit = oracle_limit

    @classmethod
    def from_environment(cls, environ: Optional[Mapping[str, str]] = None) -> Settings:
        environ = os.environ if environ is None else environ
        return cls(
            precision=int(environ.get("DDHOOKS_PRECISION", DEFAULT_PRECISION)),
            workers=int(environ.get("DDHOOKS_WORKERS", DEFAULT_WORKERS)),
            oracle_limit=int(environ.get("DDHOOKS_ORACLE_LIMIT", DEFAULT_ORACLE_LIMIT)),
        )

    @property
    def precision(self) -> int:
        return self.__precision

    @precision.setter
    def precision(self, precision: int):
        if not isinstance(precision, int) or isinstance(precision, bool):
            raise TypeError(f"Expected 'precision' to be an int, got {type(precision).__name__}")
        if precision < 20:
            raise ValueError("Precision must be at least 20 decimal digits")
        self.__precision = precision

    @property
    def workers(self) -> int:
        return self.__workers

    @workers.setter
    def workers(self, workers: int):
        if not isinstance(workers, int) or isinstance(workers, bool):
            raise TypeError(f"Expected 'workers' to be an int, got {type(workers).__name__}")
        if workers < 1:
            raise ValueError("Workers must be at least 1")
        self.__workers = workers

    @property
    def oracle_limit(self) -> int:
        return self.__oracle_limit

    @oracle_limit.setter
    def oracle_limit(self, oracle_limit: int):
        if not isinstance(oracle_limit, int) or isinstance(oracle_limit, bool):
            raise TypeError(f"Expected 'oracle_limit' to be an int, got {type(oracle_limit).__name__}")
        if oracle_limit < 0:
            raise ValueError("Oracle limit must be nonnegative")
        self.__oracle_limit = oracle_limit

    def to_dict(self):
        return {"precision": self.__precision, "workers": self.__workers, "oracle_limit": self.__oracle_limit}

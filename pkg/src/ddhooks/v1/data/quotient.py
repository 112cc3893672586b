from __future__ import annotations

import json
from typing import Dict, Iterable, Tuple

from .partition import Partition


class QuotientDecomposition:
    """
    A t-core together with t quotient partitions indexed 0..t-1.
    """

    def __init__(self, t: int, core: Partition, quotient: Iterable[Partition]):
        if not isinstance(t, int) or isinstance(t, bool):
            raise TypeError(f"Expected 't' to be an int, got {type(t).__name__}")
        if t < 1:
            raise ValueError("t must be at least 1")
        if not isinstance(core, Partition):
            raise TypeError(f"Expected 'core' to be a Partition, got {type(core).__name__}")
        quotient = tuple(quotient)
        if len(quotient) != t:
            raise ValueError(f"Expected {t} quotient partitions, got {len(quotient)}")
        for q in quotient:
            if not isinstance(q, Partition):
                raise TypeError(f"Expected quotient entries to be Partitions, got {type(q).__name__}")
        self.__t = t
        self.__core = core
        self.__quotient = quotient

    @property
    def t(self) -> int:
        return self.__t

    @property
    def core(self) -> Partition:
        return self.__core

    @property
    def quotient(self) -> Tuple[Partition, ...]:
        return self.__quotient

    @property
    def size(self) -> int:
        return self.__core.size + self.__t * sum(q.size for q in self.__quotient)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuotientDecomposition):
            return NotImplemented
        return (self.__t, self.__core, self.__quotient) == (other.t, other.core, other.quotient)

    def __hash__(self) -> int:
        return hash((self.__t, self.__core, self.__quotient))

    def __repr__(self) -> str:
        return f"QuotientDecomposition(t={self.__t}, core={self.__core!r}, quotient={list(self.__quotient)!r})"

    def to_dict(self) -> Dict:
        return {
            "t": self.__t,
            "core": self.__core.to_list(),
            "quotient": [q.to_list() for q in self.__quotient],
        }

    def __str__(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

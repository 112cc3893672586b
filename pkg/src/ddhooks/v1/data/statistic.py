from __future__ import annotations

from enum import Enum
from typing import Dict


class StatisticTag(Enum):
    NT = "nt"
    NHat = "nhat"
    ST = "st"
    N1 = "n1"


class StatisticKind:
    """
    A hook-count statistic: n_t (hooks of length t), n-hat_t (those strictly above the diagonal),
    s_t (shifted hooks of a strict partition) or n_1.
    """

    def __init__(self, tag: StatisticTag, t: int = 1):
        if not isinstance(tag, StatisticTag):
            raise TypeError(f"Expected 'tag' to be a StatisticTag, got {type(tag).__name__}")
        if not isinstance(t, int) or isinstance(t, bool):
            raise TypeError(f"Expected 't' to be an int, got {type(t).__name__}")
        if t < 1:
            raise ValueError("t must be at least 1")
        self.__tag = tag
        self.__t = 1 if tag == StatisticTag.N1 else t

    @staticmethod
    def nt(t: int) -> StatisticKind:
        return StatisticKind(StatisticTag.NT, t)

    @staticmethod
    def nhat(t: int) -> StatisticKind:
        return StatisticKind(StatisticTag.NHat, t)

    @staticmethod
    def st(t: int) -> StatisticKind:
        return StatisticKind(StatisticTag.ST, t)

    @staticmethod
    def n1() -> StatisticKind:
        return StatisticKind(StatisticTag.N1)

    @property
    def tag(self) -> StatisticTag:
        return self.__tag

    @property
    def t(self) -> int:
        return self.__t

    def __eq__(self, other) -> bool:
        return isinstance(other, StatisticKind) and (self.__tag, self.__t) == (other.tag, other.t)

    def __hash__(self) -> int:
        return hash((self.__tag, self.__t))

    def __repr__(self) -> str:
        return f"StatisticKind({self.__tag.value}, t={self.__t})"

    def to_dict(self) -> Dict:
        return {"tag": self.__tag.value, "t": self.__t}

from __future__ import annotations

from enum import Enum
from typing import Dict, Optional


class ClassTag(Enum):
    All = "all"
    Strict = "strict"
    DoubledDistinct = "dd"
    SelfConjugate = "sc"
    TCore = "tcore"
    DDTCore = "ddtcore"


class PartitionClass:
    def __init__(self, tag: ClassTag, t: Optional[int] = None):
        """
        Args:
            tag (ClassTag): The family of partitions.
            t (Optional[int]): Required for TCore and DDTCore, ignored otherwise.
        """
        if not isinstance(tag, ClassTag):
            raise TypeError(f"Expected 'tag' to be a ClassTag, got {type(tag).__name__}")
        if tag in (ClassTag.TCore, ClassTag.DDTCore):
            if not isinstance(t, int) or isinstance(t, bool):
                raise TypeError(f"Expected 't' to be an int for {tag.value}, got {type(t).__name__}")
            if t < 1:
                raise ValueError("t must be at least 1")
        else:
            t = None
        self.__tag = tag
        self.__t = t

    @staticmethod
    def all() -> PartitionClass:
        return PartitionClass(ClassTag.All)

    @staticmethod
    def strict() -> PartitionClass:
        return PartitionClass(ClassTag.Strict)

    @staticmethod
    def doubled_distinct() -> PartitionClass:
        return PartitionClass(ClassTag.DoubledDistinct)

    @staticmethod
    def self_conjugate() -> PartitionClass:
        return PartitionClass(ClassTag.SelfConjugate)

    @staticmethod
    def t_core(t: int) -> PartitionClass:
        return PartitionClass(ClassTag.TCore, t)

    @staticmethod
    def dd_t_core(t: int) -> PartitionClass:
        return PartitionClass(ClassTag.DDTCore, t)

    @staticmethod
    def parse(name: str, t: Optional[int] = None) -> PartitionClass:
        return PartitionClass(ClassTag(name), t)

    @property
    def tag(self) -> ClassTag:
        return self.__tag

    @property
    def t(self) -> Optional[int]:
        return self.__t

    def __eq__(self, other) -> bool:
        return isinstance(other, PartitionClass) and (self.__tag, self.__t) == (other.tag, other.t)

    def __hash__(self) -> int:
        return hash((self.__tag, self.__t))

    def __repr__(self) -> str:
        return f"PartitionClass({self.__tag.value}{'' if self.__t is None else f', t={self.__t}'})"

    def to_dict(self) -> Dict:
        data = {"tag": self.__tag.value}
        if self.__t is not None:
            data["t"] = self.__t
        return data

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple

from .partition_class import PartitionClass
from .statistic import StatisticKind


class DistributionTable:
    """
    Exact law of a hook statistic over the partitions of size n in a class.

    The table keeps integer counts; probabilities are the counts over total_count, so they sum to
    exactly one.
    """

    def __init__(self, t: int, n: int, partition_class: PartitionClass, stat: StatisticKind,
                 counts: Mapping[int, int]):
        if not isinstance(partition_class, PartitionClass):
            raise TypeError(f"Expected 'partition_class' to be a PartitionClass, got {type(partition_class).__name__}")
        if not isinstance(stat, StatisticKind):
            raise TypeError(f"Expected 'stat' to be a StatisticKind, got {type(stat).__name__}")
        cleaned = {}
        for value, count in counts.items():
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"Support values must be nonnegative ints, got {value!r}")
            if not isinstance(count, int) or count < 0:
                raise ValueError(f"Counts must be nonnegative ints, got {count!r}")
            if count:
                cleaned[value] = count
        total = sum(cleaned.values())
        if total < 1:
            raise ValueError("A distribution needs at least one partition")
        self.__t = t
        self.__n = n
        self.__class = partition_class
        self.__stat = stat
        self.__counts = dict(sorted(cleaned.items()))
        self.__total = total

    @property
    def t(self) -> int:
        return self.__t

    @property
    def n(self) -> int:
        return self.__n

    @property
    def partition_class(self) -> PartitionClass:
        return self.__class

    @property
    def stat(self) -> StatisticKind:
        return self.__stat

    @property
    def counts(self) -> Dict[int, int]:
        return dict(self.__counts)

    @property
    def total_count(self) -> int:
        return self.__total

    @property
    def mass(self) -> Dict[int, Fraction]:
        return {value: Fraction(count, self.__total) for value, count in self.__counts.items()}

    @property
    def support(self) -> List[int]:
        return list(self.__counts)

    def moment(self, k: int) -> Fraction:
        return Fraction(sum(count * value ** k for value, count in self.__counts.items()), self.__total)

    @property
    def mean(self) -> Fraction:
        return self.moment(1)

    @property
    def variance(self) -> Fraction:
        mean = self.mean
        return self.moment(2) - mean * mean

    def cdf_jumps(self) -> List[Tuple[int, Fraction, Fraction]]:
        """(value, cdf just below, cdf at value) for every support point."""
        jumps = []
        running = Fraction(0)
        for value, count in self.__counts.items():
            below = running
            running += Fraction(count, self.__total)
            jumps.append((value, below, running))
        return jumps

    def __eq__(self, other) -> bool:
        if not isinstance(other, DistributionTable):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash(json.dumps(self.to_dict(), sort_keys=True))

    def to_rows(self) -> List[Dict]:
        return [
            {"value": value, "count": count,
             "probability": f"{Fraction(count, self.__total).numerator}/{Fraction(count, self.__total).denominator}"}
            for value, count in self.__counts.items()
        ]

    def to_dict(self) -> Dict:
        return {
            "t": self.__t,
            "n": self.__n,
            "class": self.__class.to_dict(),
            "stat": self.__stat.to_dict(),
            "total_count": self.__total,
            "rows": self.to_rows(),
        }

    def __str__(self) -> str:
        return json.dumps(self.to_dict(), indent=4, sort_keys=True)

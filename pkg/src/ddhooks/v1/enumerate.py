"""
Brute-force oracle: every partition of a class and size, and the exact polynomials and
distributions of hook statistics over them.
"""
from __future__ import annotations

import logging
from collections import Counter
from fractions import Fraction
from typing import Dict, Iterator, List

from ddhooks.v1.data import ClassTag, Partition, PartitionClass, StatisticKind, StatisticTag, StrictPartition
from ddhooks.v1.partitions import (conjugate, count_t_hooks, count_t_hooks_above_diagonal, count_t_shifted_hooks,
                                   double_distinct, is_t_core)
from ddhooks.v1.qseries import Polynomial, from_counts
from ddhooks.v1.resources import IncompatibleStatistic, DomainError

logger = logging.getLogger(__name__)


def _descending(n: int, largest: int, strict: bool) -> Iterator[List[int]]:
    if n == 0:
        yield []
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first - 1 if strict else first, strict):
            yield [first] + rest


def _check_size(n: int):
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"Expected 'n' to be an int, got {type(n).__name__}")
    if n < 0:
        raise DomainError("Partition size must be nonnegative", {"n": n})


def strict_partitions_of(n: int) -> Iterator[StrictPartition]:
    _check_size(n)
    for parts in _descending(n, n, strict=True):
        yield StrictPartition(parts)


def doubled_distinct_of(n: int) -> Iterator[Partition]:
    _check_size(n)
    if n % 2:
        return
    for s in strict_partitions_of(n // 2):
        yield double_distinct(s)


def partitions_of(n: int, c: PartitionClass = None) -> Iterator[Partition]:
    """
    Each member of the class with size n exactly once. Parts descend in reverse lexicographic order;
    doubled distinct partitions follow the order of the strict partitions they double.
    """
    _check_size(n)
    c = c or PartitionClass.all()
    tag = c.tag
    if tag == ClassTag.Strict:
        yield from strict_partitions_of(n)
        return
    if tag in (ClassTag.DoubledDistinct, ClassTag.DDTCore):
        for p in doubled_distinct_of(n):
            if tag == ClassTag.DoubledDistinct or is_t_core(p, c.t):
                yield p
        return
    for parts in _descending(n, n, strict=False):
        p = Partition(parts)
        if tag == ClassTag.All:
            yield p
        elif tag == ClassTag.SelfConjugate:
            if conjugate(p) == p:
                yield p
        elif is_t_core(p, c.t):
            yield p


def statistic_value(p: Partition, stat: StatisticKind) -> int:
    tag = stat.tag
    if tag == StatisticTag.NT:
        return count_t_hooks(p, stat.t)
    if tag == StatisticTag.NHat:
        return count_t_hooks_above_diagonal(p, stat.t)
    if tag == StatisticTag.N1:
        return count_t_hooks(p, 1)
    if len(set(p.parts)) != len(p):
        raise IncompatibleStatistic("Shifted hooks need a strict partition", {"partition": p.to_list()})
    return count_t_shifted_hooks(StrictPartition(p.parts), stat.t)


def brute_distribution(n: int, stat: StatisticKind, c: PartitionClass) -> Dict[int, int]:
    """value -> number of partitions of size n in the class with that statistic value."""
    if stat.tag == StatisticTag.ST and c.tag != ClassTag.Strict:
        raise IncompatibleStatistic("Shifted hooks are defined on strict partitions",
                                    {"class": c.to_dict(), "stat": stat.to_dict()})
    counts = Counter(statistic_value(p, stat) for p in partitions_of(n, c))
    logger.debug("Oracle %r over %r at size %d: %d partitions", stat, c, n, sum(counts.values()))
    return dict(sorted(counts.items()))


def brute_poly(n: int, stat: StatisticKind, c: PartitionClass) -> Polynomial:
    """sum over the class at size n of x^{stat}."""
    return from_counts(brute_distribution(n, stat, c))


def class_count(n: int, c: PartitionClass) -> int:
    return sum(1 for _ in partitions_of(n, c))


def part_containment_frequency(n: int, t: int) -> Fraction:
    """Fraction of the strict partitions of n that contain a part equal to t."""
    _check_size(n)
    if n < 1:
        raise DomainError("Containment frequency needs n >= 1", {"n": n})
    total = hits = 0
    for s in strict_partitions_of(n):
        total += 1
        hits += t in s.parts
    return Fraction(hits, total)

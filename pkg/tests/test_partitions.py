import pytest

from ddhooks.v1.data import Partition, PartitionClass, StrictPartition
from ddhooks.v1.enumerate import partitions_of, strict_partitions_of
from ddhooks.v1.partitions import (classify, conjugate, count_t_hooks, count_t_hooks_above_diagonal,
                                   count_t_shifted_hooks, distinct_part_sizes, double_distinct, durfee_side,
                                   expected_parity_offset, hook_lengths, hook_parity_offset, is_doubled_distinct,
                                   is_t_core, remove_rim_hook, rim_hook_core, shifted_hook_lengths, undouble)
from ddhooks.v1.resources import NotDoubledDistinct


@pytest.mark.parametrize("parts, expected", [
    ([5, 4, 1], [3, 2, 2, 2, 1]),
    ([], []),
    ([3, 2, 1], [3, 2, 1]),
])
def test_conjugate(parts, expected):
    assert conjugate(Partition(parts)) == Partition(expected)


def test_conjugate_is_an_involution():
    for n in range(16):
        for p in partitions_of(n):
            assert conjugate(conjugate(p)) == p


@pytest.mark.parametrize("parts, expected", [
    ([5, 4, 1], [[7, 5, 4, 3, 1], [5, 3, 2, 1], [1]]),
    ([6, 6, 4, 2, 2], [[10, 9, 6, 5, 3, 2], [9, 8, 5, 4, 2, 1], [6, 5, 2, 1], [3, 2], [2, 1]]),
    ([1], [[1]]),
    ([], []),
])
def test_hook_lengths(parts, expected):
    assert hook_lengths(Partition(parts)) == expected


def test_hook_lengths_count_arm_and_leg():
    for n in range(12):
        for p in partitions_of(n):
            cols = conjugate(p)
            for i, row in enumerate(hook_lengths(p), start=1):
                for j, h in enumerate(row, start=1):
                    arm = p.part(i) - j
                    leg = cols.part(j) - i
                    assert h == arm + leg + 1


@pytest.mark.parametrize("parts, t, expected", [
    ([5, 4, 1], 3, 2),
    ([], 3, 0),
    ([6, 6, 4, 2, 2], 3, 2),
])
def test_count_t_hooks(parts, t, expected):
    assert count_t_hooks(Partition(parts), t) == expected


@pytest.mark.parametrize("parts, t, expected", [
    ([6, 6, 4, 2, 2], 3, 1),
    ([], 2, 0),
    ([6, 6, 4, 2, 2], 1, 2),
])
def test_count_t_hooks_above_diagonal(parts, t, expected):
    assert count_t_hooks_above_diagonal(Partition(parts), t) == expected


def test_one_hooks_are_distinct_part_sizes():
    for n in range(16):
        for p in partitions_of(n):
            assert count_t_hooks(p, 1) == distinct_part_sizes(p) == len(set(p.parts))


@pytest.mark.parametrize("parts, expected", [
    ([5, 4, 1], [6, 6, 4, 2, 2]),
    ([], []),
    ([1], [2]),
])
def test_double_distinct(parts, expected):
    assert double_distinct(StrictPartition(parts)) == Partition(expected)


def test_double_distinct_structure():
    for n in range(13):
        for s in strict_partitions_of(n):
            dd = double_distinct(s)
            length = len(s)
            cols = conjugate(dd)
            assert dd.size == 2 * s.size
            assert all(dd.part(i) == s.part(i) + i for i in range(1, length + 1))
            for i in range(1, len(cols) + 1):
                if i <= length:
                    assert cols.part(i) == dd.part(i) - 1
                elif i == length + 1:
                    assert cols.part(i) == length
                else:
                    assert cols.part(i) == dd.part(i - 1)
            assert is_doubled_distinct(dd)
            assert undouble(dd) == s


def test_undouble():
    assert undouble(Partition([6, 6, 4, 2, 2])) == StrictPartition([5, 4, 1])
    assert undouble(Partition([2])) == StrictPartition([1])
    with pytest.raises(NotDoubledDistinct):
        undouble(Partition([3, 2, 1]))


@pytest.mark.parametrize("parts, expected", [
    ([5, 4, 1], [[9, 6, 5, 3, 2], [5, 4, 2, 1], [1]]),
    ([1], [[1]]),
    ([2, 1], [[3, 2], [1]]),
])
def test_shifted_hook_lengths(parts, expected):
    assert shifted_hook_lengths(StrictPartition(parts)) == expected


@pytest.mark.parametrize("t, expected", [(3, 1), (10, 0), (2, 2)])
def test_count_t_shifted_hooks(t, expected):
    assert count_t_shifted_hooks(StrictPartition([5, 4, 1]), t) == expected


def test_shifted_hooks_are_hooks_above_the_diagonal():
    for n in range(13):
        for s in strict_partitions_of(n):
            for t in range(1, 9):
                assert count_t_shifted_hooks(s, t) == count_t_hooks_above_diagonal(double_distinct(s), t)


@pytest.mark.parametrize("parts, expected", [([6, 6, 4, 2, 2], 3), ([], 0), ([5, 4, 1], 2)])
def test_durfee_side(parts, expected):
    assert durfee_side(Partition(parts)) == expected


def test_classify():
    assert not classify(Partition([3, 2, 2, 2, 1]), PartitionClass.self_conjugate())
    assert classify(Partition([6, 6, 4, 2, 2]), PartitionClass.doubled_distinct())
    assert classify(Partition(), PartitionClass.t_core(4))
    assert classify(Partition([3, 1, 1]), PartitionClass.t_core(3))
    assert not classify(Partition([3]), PartitionClass.t_core(3))


def test_hook_parity_relation():
    # a single part 1 doubles to (2): one 1-hook, on the first row above the diagonal
    assert hook_parity_offset(StrictPartition([1]), 1) == -1
    for n in range(13):
        for s in strict_partitions_of(n):
            for t in range(1, 7):
                assert hook_parity_offset(s, t) == expected_parity_offset(s, t)


def test_expected_parity_offset_cases():
    assert expected_parity_offset(StrictPartition([4, 2]), 4) == 0
    assert expected_parity_offset(StrictPartition([4]), 4) == -1
    assert expected_parity_offset(StrictPartition([2]), 4) == 1
    assert expected_parity_offset(StrictPartition([5]), 4) == 0


def test_rim_hooks():
    assert remove_rim_hook(Partition([5, 4, 1]), 1, 3) == Partition([3, 2, 1])
    assert rim_hook_core(Partition([6, 6, 4, 2, 2]), 1) == Partition()
    for n in range(11):
        for p in partitions_of(n):
            for t in range(1, 5):
                core = rim_hook_core(p, t)
                assert is_t_core(core, t)
                assert (p.size - core.size) % t == 0

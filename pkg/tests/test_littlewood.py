from fractions import Fraction

import pytest

from ddhooks.v1.data import FrobeniusSymbol, Partition, QuotientDecomposition, StrictPartition, TwoRowedArray
from ddhooks.v1.enumerate import doubled_distinct_of, partitions_of, strict_partitions_of
from ddhooks.v1.littlewood import (check_dd_properties, core_from_charges, dd_decompose, frobenius, from_frobenius,
                                   littlewood_compose, littlewood_decompose, runner_arrays, runner_charges,
                                   shifted_quotient_count, t_core, verify_shifted_quotient_formula, wright_inverse,
                                   wright_map)
from ddhooks.v1.partitions import count_t_hooks_above_diagonal, double_distinct, is_t_core, rim_hook_core
from ddhooks.v1.resources import CoreNotTCore, MalformedArray, NotDoubledDistinct

# Frobenius symbol (7,5,4,0 | 5,4,2,1)
WORKED = Partition([8, 7, 7, 4, 4, 2])


def test_frobenius():
    assert frobenius(WORKED) == FrobeniusSymbol([7, 5, 4, 0], [5, 4, 2, 1])
    assert frobenius(Partition([5, 4, 1])) == FrobeniusSymbol([4, 2], [2, 0])
    assert frobenius(Partition()) == FrobeniusSymbol()


def test_from_frobenius_inverts_frobenius():
    assert from_frobenius(FrobeniusSymbol([7, 5, 4, 0], [5, 4, 2, 1])) == WORKED
    for n in range(14):
        for p in partitions_of(n):
            assert from_frobenius(frobenius(p)) == p


def test_frobenius_symbol_rows_must_match():
    with pytest.raises(ValueError):
        FrobeniusSymbol([1, 0], [0])


def test_runner_arrays_of_worked_example():
    assert runner_arrays(WORKED, 3) == [TwoRowedArray([0], [1, 0]),
                                        TwoRowedArray([2, 1], [1, 0]),
                                        TwoRowedArray([1], [])]
    assert runner_charges(WORKED, 3) == [-1, 0, 1]


def test_worked_decomposition():
    d = littlewood_decompose(WORKED, 3)
    assert d.core == Partition([3, 1, 1])
    assert d.quotient == (Partition([2]), Partition([3, 3]), Partition([1]))
    assert d.size == WORKED.size == 32
    assert littlewood_compose(d) == WORKED


@pytest.mark.parametrize("array, expected", [
    (TwoRowedArray([0], [1, 0]), [2]),
    (TwoRowedArray([2, 1], [1, 0]), [3, 3]),
    (TwoRowedArray([1], []), [1]),
    (TwoRowedArray(), []),
])
def test_wright_map(array, expected):
    mu = wright_map(array)
    assert mu == Partition(expected)
    assert wright_inverse(mu, array.charge) == array


def test_wright_map_accepts_row_pairs():
    assert wright_map(([2, 1], [1, 0])) == Partition([3, 3])


def test_wright_map_rejects_unordered_rows():
    with pytest.raises(MalformedArray):
        wright_map(([0, 1], []))


def test_core_from_charges():
    assert core_from_charges([-1, 0, 1]) == Partition([3, 1, 1])
    assert core_from_charges([0, 0, 0, 0]) == Partition()
    with pytest.raises(ValueError):
        core_from_charges([1, 0])


@pytest.mark.parametrize("t", [1, 2, 3, 4, 5])
def test_decomposition_roundtrip(t):
    for n in range(13):
        for p in partitions_of(n):
            d = littlewood_decompose(p, t)
            assert littlewood_compose(d) == p
            assert d.size == p.size
            assert is_t_core(d.core, t)
            assert d.core == t_core(p, t) == rim_hook_core(p, t)


def test_compose_rejects_a_core_with_a_t_hook():
    d = QuotientDecomposition(3, Partition([3]), [Partition(), Partition(), Partition()])
    with pytest.raises(CoreNotTCore):
        littlewood_compose(d)


@pytest.mark.parametrize("t", [1, 2, 3, 4, 5, 6])
def test_dd_properties_hold(t):
    for m in range(0, 21, 2):
        for p in doubled_distinct_of(m):
            properties = check_dd_properties(p, t)
            assert set(properties) == {"DD1", "DD2", "DD2'", "DD3", "DD4"}
            assert all(properties.values()), (p, properties)


def test_dd_decompose():
    d = dd_decompose(Partition([6, 6, 4, 2, 2]), 3)
    assert d == littlewood_decompose(Partition([6, 6, 4, 2, 2]), 3)
    with pytest.raises(NotDoubledDistinct):
        dd_decompose(Partition([3, 2, 1]), 3)


def test_shifted_quotient_count():
    assert shifted_quotient_count(StrictPartition([5, 4, 1]), 3) == 1
    assert shifted_quotient_count(StrictPartition([5, 4, 1]), 1) == 2
    assert isinstance(shifted_quotient_count(StrictPartition([2, 1]), 2), Fraction)


@pytest.mark.parametrize("t", [1, 2, 3, 4, 5, 6])
def test_shifted_quotient_formula(t):
    for n in range(11):
        for s in strict_partitions_of(n):
            assert verify_shifted_quotient_formula(s, t)
            assert shifted_quotient_count(s, t) == count_t_hooks_above_diagonal(double_distinct(s), t)

from fractions import Fraction

import mpmath
import pytest

from ddhooks.v1.data import DistributionTable, PartitionClass, StatisticKind, StatisticTag
from ddhooks.v1.stats import (compare_moments, dd_distribution, exact_distribution, exact_mean_variance, exact_moments,
                              kolmogorov_distance_to_normal, mean_heuristic_gap, mgf_normalized, normal_cdf,
                              series_counts, variance_heuristic_gap)
from ddhooks.v1.resources import DegenerateDistribution, DomainError, IncompatibleStatistic


def test_hook_law_over_all_partitions_of_ten(all_of_ten_law):
    d = exact_distribution(3, 10, PartitionClass.all(), StatisticKind.nt(3))
    assert d.mass == all_of_ten_law
    assert d.total_count == 42
    assert d.counts == {0: 2, 1: 18, 2: 21, 3: 1}


def test_hook_law_over_doubled_distinct_partitions_of_twenty(dd, dd_of_twenty_law):
    d = exact_distribution(3, 20, dd, StatisticTag.NT)
    assert d.mass == dd_of_twenty_law
    assert exact_mean_variance(d) == (Fraction(12, 5), Fraction(26, 25))
    assert dd_distribution(3, 10) == d


def test_moments_from_the_jet_match_the_table():
    assert exact_moments(3, 10) == (Fraction(12, 5), Fraction(26, 25))
    mean, variance = exact_moments(3, 10, hat=True)
    shifted = dd_distribution(3, 10, hat=True)
    assert (mean, variance) == (shifted.mean, shifted.variance)


def test_series_and_enumeration_agree_past_the_oracle_limit(dd):
    stat = StatisticKind.nhat(2)
    assert exact_distribution(2, 24, dd, stat, oracle_limit=0) == exact_distribution(2, 24, dd, stat)


def test_series_counts_availability(dd):
    assert series_counts(10, PartitionClass.t_core(3), StatisticKind.nt(3)) is None
    assert series_counts(20, dd, StatisticKind.nt(3)) == {1: 2, 2: 4, 3: 2, 4: 2}


def test_shifted_hooks_of_strict_partitions():
    d = exact_distribution(3, 10, PartitionClass.strict(), StatisticKind.st(3))
    assert d.total_count == 10
    # s_t(lambda) = nhat_t(lambda lambda)
    assert d.counts == dd_distribution(3, 10, hat=True).counts


def test_self_conjugate_n1():
    d = exact_distribution(1, 12, PartitionClass.self_conjugate(), StatisticKind.n1())
    # distinct odd parts: 11+1, 9+3, 7+5
    assert d.total_count == 3


def test_classes_without_series_fall_back_to_enumeration():
    d = exact_distribution(2, 9, PartitionClass.t_core(3), StatisticKind.nt(2))
    assert d.total_count == sum(d.counts.values())
    assert all(v >= 0 for v in d.support)


@pytest.mark.parametrize("c, stat", [
    (PartitionClass.all(), StatisticKind.nhat(3)),
    (PartitionClass.strict(), StatisticKind.nhat(3)),
    (PartitionClass.doubled_distinct(), StatisticKind.st(3)),
    (PartitionClass.all(), StatisticKind.st(3)),
])
def test_incompatible_statistics(c, stat):
    with pytest.raises(IncompatibleStatistic):
        exact_distribution(3, 10, c, stat)


def test_statistic_built_for_another_t(dd):
    with pytest.raises(DomainError):
        exact_distribution(3, 20, dd, StatisticKind.nt(2))


def test_no_members_of_odd_size(dd):
    with pytest.raises(DomainError):
        exact_distribution(3, 11, dd, StatisticKind.nt(3))


def test_class_argument_is_checked():
    with pytest.raises(TypeError):
        exact_distribution(3, 10, "dd", StatisticKind.nt(3))


def test_kolmogorov_distance():
    d = dd_distribution(3, 10)
    distance = kolmogorov_distance_to_normal(d)
    assert 0 < distance < mpmath.mpf(1) / 2
    sd = mpmath.sqrt(mpmath.mpf(26) / 25)
    # the jump at the smallest value bounds the distance from below
    assert distance >= normal_cdf((1 - mpmath.mpf(12) / 5) / sd)


def test_kolmogorov_distance_of_a_point_mass():
    d = exact_distribution(1, 1, PartitionClass.all(), StatisticKind.nt(1))
    assert d.counts == {1: 1}
    with pytest.raises(DegenerateDistribution):
        kolmogorov_distance_to_normal(d)


def test_distance_shrinks_with_size():
    small = kolmogorov_distance_to_normal(dd_distribution(1, 10))
    large = kolmogorov_distance_to_normal(dd_distribution(1, 30))
    assert large < small


@pytest.mark.slow
def test_three_hooks_approach_the_normal_law():
    # doubled distinct partitions of 400 and 1600
    small, large = dd_distribution(3, 200), dd_distribution(3, 800)
    assert kolmogorov_distance_to_normal(large) < kolmogorov_distance_to_normal(small)
    target = mpmath.mpf(1) / 8
    for r in (Fraction(1, 2), Fraction(-1, 2)):
        coarse = abs(mpmath.log(mgf_normalized(3, 200, r, distribution=small)) - target)
        fine = abs(mpmath.log(mgf_normalized(3, 800, r, distribution=large)) - target)
        assert fine < coarse


class TestMomentGeneratingFunction:
    def test_value_at_zero(self):
        assert abs(mgf_normalized(3, 10, 0, centering="exact") - 1) < mpmath.mpf(10) ** -40
        assert abs(mgf_normalized(3, 10, 0) - 1) < mpmath.mpf(10) ** -40

    def test_exact_centering_has_unit_variance(self):
        r = mpmath.mpf(10) ** -3
        plus = mgf_normalized(3, 10, r, centering="exact")
        minus = mgf_normalized(3, 10, -r, centering="exact")
        assert abs((plus + minus - 2) / r ** 2 - 1) < mpmath.mpf(10) ** -5

    def test_precomputed_distribution(self):
        d = dd_distribution(2, 8)
        assert mgf_normalized(2, 8, Fraction(1, 2), distribution=d) == mgf_normalized(2, 8, Fraction(1, 2))

    def test_distribution_of_another_size(self):
        with pytest.raises(DomainError):
            mgf_normalized(3, 5, 1, distribution=dd_distribution(3, 10))

    def test_unknown_centering(self):
        with pytest.raises(DomainError):
            mgf_normalized(3, 10, 1, centering="median")

    def test_tends_to_the_normal_value(self):
        r = Fraction(1, 2)
        target = mpmath.exp(mpmath.mpf(1) / 8)
        coarse = abs(mgf_normalized(1, 10, r, centering="exact") - target)
        fine = abs(mgf_normalized(1, 40, r, centering="exact") - target)
        assert fine < coarse


class TestHeuristics:
    @pytest.mark.parametrize("t", [1, 2, 3, 4])
    def test_formula_gaps_vanish(self, t):
        assert abs(mean_heuristic_gap(t, 100, exact=False)) < mpmath.mpf(10) ** -20
        assert abs(variance_heuristic_gap(t, 100, exact=False)) < mpmath.mpf(10) ** -20

    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_exact_gaps_are_bounded(self, t):
        assert abs(mean_heuristic_gap(t, 60)) < 1
        assert abs(variance_heuristic_gap(t, 60)) < 2

    def test_exact_gap_value(self):
        plain, _ = exact_moments(3, 10)
        shifted, _ = exact_moments(3, 10, hat=True)
        expected = shifted - plain / 2 - Fraction(1, 4)
        with mpmath.workdps(50):
            value = mpmath.mpf(expected.numerator) / expected.denominator
            assert abs(mean_heuristic_gap(3, 10) - value) < mpmath.mpf(10) ** -45


class TestCompareMoments:
    def test_rows(self):
        rows = compare_moments(3, [10, 5, 10])
        assert [row["n"] for row in rows] == [5, 10]
        row = rows[1]
        assert row["exact_mean"] == "12/5"
        assert row["exact_variance"] == "26/25"
        assert row["exact_m1"] == "24"
        assert row["exact_m2"] == "68"
        assert abs(float(row["formula_mean"]) - 2.4) < 0.5
        assert row["asymptotic_m1"] is not None

    def test_shifted_rows_leave_the_raw_moment_formulas_empty(self):
        (row,) = compare_moments(2, [6], hat=True)
        assert row["hat"] is True
        assert row["asymptotic_m1"] is None and row["asymptotic_m2"] is None

    @pytest.mark.slow
    def test_mean_and_variance_converge(self, mean_tolerance, variance_tolerance):
        n = 250
        for t in (1, 2, 3):
            (row,) = compare_moments(t, [n])
            exact_mean = Fraction(row["exact_mean"])
            exact_variance = Fraction(row["exact_variance"])
            assert abs(float(exact_mean) - float(row["formula_mean"])) <= mean_tolerance / n ** 0.5
            assert abs(float(exact_variance) - float(row["formula_variance"])) <= variance_tolerance / n ** 0.5

    @pytest.mark.slow
    @pytest.mark.parametrize("hat", [False, True])
    def test_hook_length_three_moments_converge(self, hat, mean_tolerance, variance_tolerance):
        rows = compare_moments(3, [250, 500, 1000], hat=hat)
        assert [row["n"] for row in rows] == [250, 500, 1000]
        for row in rows:
            n = row["n"]
            mean_gap = abs(float(Fraction(row["exact_mean"])) - float(row["formula_mean"]))
            variance_gap = abs(float(Fraction(row["exact_variance"])) - float(row["formula_variance"]))
            assert mean_gap <= mean_tolerance / n ** 0.5
            assert variance_gap <= variance_tolerance / n ** 0.5

    def test_needs_sizes(self):
        with pytest.raises(DomainError):
            compare_moments(3, [])
        with pytest.raises(DomainError):
            compare_moments(3, [0])


def test_distribution_table_validation(dd):
    with pytest.raises(ValueError):
        DistributionTable(3, 20, dd, StatisticKind.nt(3), {1: -1})
    with pytest.raises(ValueError):
        DistributionTable(3, 20, dd, StatisticKind.nt(3), {})
    d = DistributionTable(3, 20, dd, StatisticKind.nt(3), {2: 4, 1: 2, 5: 0})
    assert d.support == [1, 2]
    assert d.cdf_jumps() == [(1, Fraction(0), Fraction(1, 3)), (2, Fraction(1, 3), Fraction(1))]
    assert d.to_rows()[0] == {"value": 1, "count": 2, "probability": "1/3"}

from fractions import Fraction

import pytest

from ddhooks.v1.data import PartitionClass, StatisticKind
from ddhooks.v1.enumerate import brute_poly, class_count
from ddhooks.v1.qseries import (SpecializedRing, coefficient_sum, coefficients, degree, extract_poly,
                                first_moment_closed_form, gen_DD_n1hat, gen_DD_n1hat_sum, gen_F1, gen_F_t,
                                gen_Fhat_t, gen_han, gen_SC_n1, gen_SC_n1hat, gen_SC_n1hat_sum, gen_tcore_DD,
                                generate, half_sum_bracket, heine_sides, moment_series, pochhammer_inf, polynomial,
                                q_binomial_sides, radical_bracket, strict_series)
from ddhooks.v1.resources import DomainError, ParityError

DD = PartitionClass.doubled_distinct()
SC = PartitionClass.self_conjugate()


def polys(s, upto):
    return [extract_poly(s, m) for m in range(upto + 1)]


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_constant_term_and_odd_sizes(t):
    f = gen_F_t(t, 15)
    fhat = gen_Fhat_t(t, 15)
    assert extract_poly(f, 0) == 1
    assert extract_poly(fhat, 0) == 1
    for m in range(1, 16, 2):
        assert extract_poly(f, m) == polynomial()
        assert extract_poly(fhat, m) == polynomial()


def test_three_hooks_of_doubled_distinct_partitions_of_twenty():
    p = extract_poly(gen_F_t(3, 20), 20)
    assert p == polynomial([0, 2, 4, 2, 2])
    assert degree(p) == 4
    assert coefficient_sum(p) == 10


def test_shifted_three_hooks_of_strict_partitions_of_ten():
    expected = brute_poly(10, StatisticKind.st(3), PartitionClass.strict())
    assert extract_poly(gen_Fhat_t(3, 20), 20) == expected
    assert extract_poly(gen_Fhat_t(3, 20), 20) == brute_poly(20, StatisticKind.nhat(3), DD)


@pytest.mark.parametrize("t", [1, 2, 3, 4, 5, 6])
def test_oracle_agreement(t):
    order = 16
    f, fhat, han = gen_F_t(t, order), gen_Fhat_t(t, order), gen_han(t, 10)
    for m in range(order + 1):
        assert extract_poly(f, m) == brute_poly(m, StatisticKind.nt(t), DD)
        assert extract_poly(fhat, m) == brute_poly(m, StatisticKind.nhat(t), DD)
    for m in range(11):
        assert extract_poly(han, m) == brute_poly(m, StatisticKind.nt(t), PartitionClass.all())


@pytest.mark.slow
@pytest.mark.parametrize("t", [1, 2, 3, 4, 5, 6])
def test_oracle_agreement_to_thirty_six(t):
    f, fhat = gen_F_t(t, 36), gen_Fhat_t(t, 36)
    for m in range(0, 37, 2):
        assert extract_poly(f, m) == brute_poly(m, StatisticKind.nt(t), DD)
        assert extract_poly(fhat, m) == brute_poly(m, StatisticKind.nhat(t), DD)


@pytest.mark.parametrize("t", [1, 2, 3, 4, 5])
def test_degree_bound_and_positivity(t):
    f = gen_F_t(t, 24)
    for m in range(0, 25, 2):
        p = extract_poly(f, m)
        assert degree(p) <= m // t
        assert all(v >= 0 for v in coefficients(p))


@pytest.mark.parametrize("t", [1, 2, 3, 4, 5, 6])
def test_collapse_at_x_equal_one(t):
    one = SpecializedRing(1)
    collapse = pochhammer_inf(-1, 2, 2, 80, one)
    expected = [collapse.extract(m) for m in range(81)]
    assert [gen_F_t(t, 80, one).extract(m) for m in range(81)] == expected
    assert [gen_Fhat_t(t, 80, one).extract(m) for m in range(81)] == expected
    for n in range(21):
        assert collapse.extract(2 * n) == class_count(n, PartitionClass.strict())


def test_single_part_sums():
    order = 40
    assert polys(gen_F1(order), order) == polys(gen_F_t(1, order), order)
    assert extract_poly(gen_F1(4), 2) == polynomial([0, 1])


def test_shifted_one_hooks():
    assert extract_poly(gen_DD_n1hat(4), 2) == polynomial([0, 1])
    assert polys(gen_DD_n1hat_sum(20), 20) == polys(gen_DD_n1hat(20), 20)
    for m in range(17):
        assert extract_poly(gen_DD_n1hat(16), m) == brute_poly(m, StatisticKind.nhat(1), DD)


def test_self_conjugate_series():
    hat, hat_sum, plain = gen_SC_n1hat(16), gen_SC_n1hat_sum(16), gen_SC_n1(16)
    assert extract_poly(hat, 0) == 1
    # (1) is the only self-conjugate partition of 1, with no 1-hook above the diagonal
    assert extract_poly(hat, 1) == 1
    for m in range(17):
        assert extract_poly(hat, m) == brute_poly(m, StatisticKind.nhat(1), SC)
        assert extract_poly(hat_sum, m) == extract_poly(hat, m)
        assert extract_poly(plain, m) == brute_poly(m, StatisticKind.n1(), SC)


@pytest.mark.parametrize("t", [1, 2, 3, 4, 5])
def test_doubled_distinct_cores(t):
    s = gen_tcore_DD(t, 20)
    assert extract_poly(s, 0) == 1
    for m in range(21):
        assert extract_poly(s, m) == class_count(m, PartitionClass.dd_t_core(t))


def test_han_series():
    p = extract_poly(gen_han(3, 10), 10)
    assert p == polynomial([2, 18, 21, 1])
    assert coefficient_sum(p) == 42
    assert [Fraction(v, 42) for v in coefficients(p)] == [Fraction(1, 21), Fraction(3, 7), Fraction(1, 2), Fraction(1, 42)]


@pytest.mark.parametrize("t", [1, 2, 3])
def test_sum_side_bracket(t):
    assert polys(half_sum_bracket(t, 14), 14) == polys(radical_bracket(t, 14), 14)


@pytest.mark.parametrize("t", [2, 4])
def test_radical_and_sum_forms_agree(t):
    assert polys(gen_Fhat_t(t, 16, radical=True), 16) == polys(gen_Fhat_t(t, 16), 16)


@pytest.mark.parametrize("a, z", [(2, Fraction(1, 3)), (-1, Fraction(1, 2)), (0, Fraction(1, 5))])
def test_q_binomial_theorem(a, z):
    product, total = q_binomial_sides(a, z, 25)
    assert product == total


@pytest.mark.parametrize("a, b, c", [(2, Fraction(1, 2), Fraction(1, 3)),
                                     (Fraction(1, 2), Fraction(2, 3), Fraction(1, 5))])
def test_heine_transformation(a, b, c):
    left, right = heine_sides(a, b, c, 20)
    assert left == right


@pytest.mark.parametrize("t", [1, 3, 5])
def test_first_moment_closed_form(t):
    assert moment_series(t, 1, 15) == first_moment_closed_form(t, 15)


def test_moment_series_values():
    s = moment_series(3, 1, 10)
    assert s.extract(1) == 0
    assert s.extract(10) == 24
    assert moment_series(3, 1, 10, hat=True).extract(0) == 0


def test_moment_series_errors():
    with pytest.raises(DomainError):
        moment_series(3, 3, 10)
    with pytest.raises(ParityError):
        first_moment_closed_form(2, 10)


def test_generate():
    assert polys(generate("F", 3, 12), 12) == polys(gen_F_t(3, 12), 12)
    assert polys(generate("scn1", 7, 6), 6) == polys(gen_SC_n1(6), 6)
    with pytest.raises(DomainError):
        generate("G", 3, 12)
    with pytest.raises(DomainError):
        gen_F_t(0, 12)


def test_strict_series():
    s = strict_series(10, SpecializedRing(0))
    assert [s.extract(m) for m in range(11)] == [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]

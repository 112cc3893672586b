"""
Exact laws of the hook statistics, their moments, the normalized moment generating function and a
distance to the normal law.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple, Union

import mpmath

from ddhooks.v1.asymptotics import mean_var_asymptotic, moment_asymptotics, precise, to_mpf
from ddhooks.v1.data import ClassTag, DistributionTable, PartitionClass, StatisticKind, StatisticTag
from ddhooks.v1.enumerate import brute_distribution
from ddhooks.v1.qseries import (TruncatedSeries, as_counts, extract_poly, gen_F_t, gen_Fhat_t, gen_han, gen_SC_n1,
                                moment_from_jet, moment_jets)
from ddhooks.v1.resources import (DegenerateDistribution, DomainError, IncompatibleStatistic, OracleMismatch,
                                  Record, format_decimal, format_rational)
from ddhooks.v1.resources.settings import DEFAULT_ORACLE_LIMIT

logger = logging.getLogger(__name__)

CENTERINGS = ("asymptotic", "exact")


def _resolve(t: int, stat: Union[StatisticKind, StatisticTag]) -> StatisticKind:
    if isinstance(stat, StatisticTag):
        return StatisticKind(stat, t)
    if not isinstance(stat, StatisticKind):
        raise TypeError(f"Expected 'stat' to be a StatisticKind, got {type(stat).__name__}")
    if stat.tag != StatisticTag.N1 and stat.t != t:
        raise DomainError("Statistic was built for another t", {"t": t, "stat": stat.to_dict()})
    return stat


def _check_compatible(c: PartitionClass, stat: StatisticKind):
    if stat.tag == StatisticTag.NHat and c.tag != ClassTag.DoubledDistinct:
        raise IncompatibleStatistic("Hooks above the diagonal are counted over doubled distinct partitions",
                                    {"class": c.to_dict(), "stat": stat.to_dict()})
    if stat.tag == StatisticTag.ST and c.tag != ClassTag.Strict:
        raise IncompatibleStatistic("Shifted hooks are defined on strict partitions",
                                    {"class": c.to_dict(), "stat": stat.to_dict()})


def _series_source(c: PartitionClass, stat: StatisticKind) -> Optional[Tuple[Callable[[int], TruncatedSeries], int]]:
    """A generating function carrying the statistic and the factor between sizes, when one exists."""
    t = stat.t
    counts_hooks = stat.tag in (StatisticTag.NT, StatisticTag.N1)
    if c.tag == ClassTag.All and counts_hooks:
        return (lambda order: gen_han(t, order)), 1
    if c.tag == ClassTag.DoubledDistinct and counts_hooks:
        return (lambda order: gen_F_t(t, order)), 1
    if c.tag == ClassTag.DoubledDistinct and stat.tag == StatisticTag.NHat:
        return (lambda order: gen_Fhat_t(t, order)), 1
    # s_t(lambda) is the number of t-hooks of lambda lambda above the diagonal
    if c.tag == ClassTag.Strict and stat.tag == StatisticTag.ST:
        return (lambda order: gen_Fhat_t(t, order)), 2
    if c.tag == ClassTag.SelfConjugate and counts_hooks and t == 1:
        return (lambda order: gen_SC_n1(order)), 1
    return None


def series_counts(n: int, c: PartitionClass, stat: StatisticKind) -> Optional[Dict[int, int]]:
    """value -> count read off the generating function, or None when there is none for the pair."""
    source = _series_source(c, stat)
    if source is None:
        return None
    build, factor = source
    order = factor * n
    counts = {value: int(count) for value, count in as_counts(extract_poly(build(order), order)).items()}
    logger.debug("Series counts %r over %r at size %d: %d support points", stat, c, n, len(counts))
    return counts


def exact_distribution(t: int, n: int, c: PartitionClass, stat: Union[StatisticKind, StatisticTag],
                       oracle_limit: int = DEFAULT_ORACLE_LIMIT) -> DistributionTable:
    """
    The law of a hook statistic over the members of size n of a class.

    The generating function supplies the counts where one exists; enumeration runs otherwise, and
    also alongside the series for every n up to ``oracle_limit``.

    Raises:
        IncompatibleStatistic: NHAT outside doubled distinct partitions, ST outside strict ones.
        OracleMismatch: Series and enumeration disagree.
        DomainError: No member of the class has size n.
    """
    if not isinstance(c, PartitionClass):
        raise TypeError(f"Expected 'c' to be a PartitionClass, got {type(c).__name__}")
    stat = _resolve(t, stat)
    _check_compatible(c, stat)
    counts = series_counts(n, c, stat)
    if counts is None or n <= oracle_limit:
        oracle = brute_distribution(n, stat, c)
        if counts is not None and counts != oracle:
            raise OracleMismatch("Generating function and enumeration disagree",
                                 {"n": n, "class": c.to_dict(), "stat": stat.to_dict(),
                                  "series": counts, "oracle": oracle})
        counts = oracle
    if not counts:
        raise DomainError("The class has no members of this size", {"n": n, "class": c.to_dict()})
    return DistributionTable(stat.t, n, c, stat, counts)


def exact_mean_variance(d: DistributionTable) -> Tuple[Fraction, Fraction]:
    return d.mean, d.variance


def exact_moments(t: int, n: int, hat: bool = False) -> Tuple[Fraction, Fraction]:
    """
    Mean and variance of the (shifted, when ``hat``) t-hook count over the doubled distinct partitions
    of 2n, from the second order jet of the generating function at x = 1.
    """
    jet = moment_jets(t, n, hat)[n]
    total = moment_from_jet(jet, 0)
    if total == 0:
        raise DegenerateDistribution("No doubled distinct partitions of this size", {"n": n})
    mean = moment_from_jet(jet, 1) / total
    return mean, moment_from_jet(jet, 2) / total - mean * mean


def dd_distribution(t: int, n: int, hat: bool = False) -> DistributionTable:
    """The law of N_{t,2n} (or its shifted-hook analogue) over doubled distinct partitions of 2n."""
    stat = StatisticKind.nhat(t) if hat else StatisticKind.nt(t)
    return exact_distribution(t, 2 * n, PartitionClass.doubled_distinct(), stat)


@precise
def normal_cdf(x):
    return mpmath.ncdf(to_mpf(x))


@precise
def mgf_normalized(t: int, n: int, r, hat: bool = False, centering: str = "asymptotic",
                   distribution: Optional[DistributionTable] = None):
    """
    E[exp((N - mu) r / sigma)] for the t-hook count N of a random doubled distinct partition of 2n.

    With ``centering="asymptotic"`` mu and sigma are the closed-form mean and standard deviation;
    ``"exact"`` uses the exact ones. A precomputed ``distribution`` of size 2n can be passed in.

    Raises:
        DegenerateDistribution: sigma is not positive.
    """
    if centering not in CENTERINGS:
        raise DomainError("Unknown centering", {"centering": centering, "known": list(CENTERINGS)})
    d = distribution if distribution is not None else dd_distribution(t, n, hat)
    if d.n != 2 * n:
        raise DomainError("Distribution does not belong to size 2n", {"n": n, "size": d.n})
    if centering == "exact":
        mu, variance = (to_mpf(v) for v in exact_mean_variance(d))
    else:
        mu, variance = mean_var_asymptotic(t, n, hat)
    if variance <= 0:
        raise DegenerateDistribution("Variance is not positive", {"t": t, "n": n, "variance": str(variance)})
    scale = to_mpf(r) / mpmath.sqrt(variance)
    return mpmath.fsum(to_mpf(p) * mpmath.exp((value - mu) * scale) for value, p in d.mass.items())


@precise
def kolmogorov_distance_to_normal(d: DistributionTable):
    """sup |F(v) - Phi((v - mean) / sd)| over the jumps of the standardized law, both sides of each jump."""
    mean, variance = exact_mean_variance(d)
    if variance <= 0:
        raise DegenerateDistribution("Point mass has no standardized law", {"n": d.n, "stat": d.stat.to_dict()})
    mu = to_mpf(mean)
    sd = mpmath.sqrt(to_mpf(variance))
    distance = mpmath.mpf(0)
    for value, below, at in d.cdf_jumps():
        phi = mpmath.ncdf((value - mu) / sd)
        distance = max(distance, abs(to_mpf(below) - phi), abs(to_mpf(at) - phi))
    return distance


def _odd(t: int) -> int:
    return t % 2


@precise
def mean_heuristic_gap(t: int, n: int, exact: bool = True):
    """mu^ - (mu/2 + 1/4 [t odd]); tends to 0."""
    if exact:
        plain, _ = exact_moments(t, n)
        shifted, _ = exact_moments(t, n, hat=True)
        return to_mpf(shifted - plain / 2 - Fraction(_odd(t), 4))
    plain, _ = mean_var_asymptotic(t, n)
    shifted, _ = mean_var_asymptotic(t, n, hat=True)
    return shifted - plain / 2 - mpmath.mpf(_odd(t)) / 4


@precise
def variance_heuristic_gap(t: int, n: int, exact: bool = True):
    """sigma^2^ - (sigma^2/4 + 1/16) for odd t, sigma^2^ - (sigma^2/4 + 1/8) for even t."""
    offset = Fraction(1, 16) if _odd(t) else Fraction(1, 8)
    if exact:
        _, plain = exact_moments(t, n)
        _, shifted = exact_moments(t, n, hat=True)
        return to_mpf(shifted - plain / 4 - offset)
    _, plain = mean_var_asymptotic(t, n)
    _, shifted = mean_var_asymptotic(t, n, hat=True)
    return shifted - plain / 4 - to_mpf(offset)


MOMENT_COLUMNS = ["t", "n", "hat", "exact_mean", "formula_mean", "exact_variance", "formula_variance",
                  "exact_m1", "asymptotic_m1", "exact_m2", "asymptotic_m2"]


@precise
def compare_moments(t: int, n_values: List[int], hat: bool = False) -> List[Record]:
    """
    Exact first and second moments against their asymptotic formulas, one jet expansion for all n.
    The raw moment formulas exist for the plain count only; the shifted rows leave them empty.
    """
    sizes = sorted(set(n_values))
    if not sizes or sizes[0] < 1:
        raise DomainError("Need at least one n >= 1", {"n_values": sizes})
    jets = moment_jets(t, sizes[-1], hat)
    rows = []
    for n in sizes:
        jet = jets[n]
        total = moment_from_jet(jet, 0)
        m1, m2 = moment_from_jet(jet, 1), moment_from_jet(jet, 2)
        mean = m1 / total
        variance = m2 / total - mean * mean
        formula_mean, formula_variance = mean_var_asymptotic(t, n, hat)
        row = {
            "t": t, "n": n, "hat": hat,
            "exact_mean": format_rational(mean), "formula_mean": format_decimal(formula_mean),
            "exact_variance": format_rational(variance), "formula_variance": format_decimal(formula_variance),
            "exact_m1": str(m1), "exact_m2": str(m2),
            "asymptotic_m1": None if hat else format_decimal(moment_asymptotics(t, n, 1)),
            "asymptotic_m2": None if hat else format_decimal(moment_asymptotics(t, n, 2)),
        }
        rows.append(Record(row))
    return rows

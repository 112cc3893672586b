import logging
from fractions import Fraction
from typing import List, Sequence, Union

from ddhooks.v1.data import ClassTag, PartitionClass, StatisticKind, StatisticTag
from ddhooks.v1.resources import Command, DomainError, Record, format_decimal, format_rational
from ddhooks.v1.stats import exact_distribution, kolmogorov_distance_to_normal, mgf_normalized

logger = logging.getLogger(__name__)

COLUMNS = ["t", "size", "class", "stat", "value", "count", "probability"]
SUMMARY_COLUMNS = ["t", "size", "class", "stat", "total_count", "mean", "variance", "kolmogorov", "r", "mgf_plus",
                   "mgf_minus"]


class Dist(Command):
    """
    Exact laws of a hook statistic, one row per support point, or one summary row per size with the
    mean, variance, distance to the normal law and the normalized moment generating function at +-r.
    """
    columns = COLUMNS

    def __init__(self, parent, name: str):
        super().__init__(parent, name)

    def __call__(self, t: int, sizes: Sequence[int], partition_class: PartitionClass,
                 stat: Union[StatisticKind, StatisticTag], halves: bool = False, summary: bool = False,
                 r: Fraction = Fraction(1, 2)) -> List[Record]:
        if halves:
            # the grid values are half sizes
            sizes = [2 * n for n in sizes]
            partition_class, stat = PartitionClass.doubled_distinct(), StatisticKind.nt(t)
        if not sizes:
            raise DomainError("Need at least one size", {"sizes": list(sizes)})
        settings = self._settings
        rows = []
        for size in sizes:
            d = exact_distribution(t, size, partition_class, stat, oracle_limit=settings.oracle_limit)
            if (d.partition_class.tag == ClassTag.DoubledDistinct and d.stat.tag == StatisticTag.NT and t == 3
                    and size == 10):
                logger.warning("Size 10 has %d doubled distinct partitions; the ten-partition 3-hook table is at size 20",
                               d.total_count)
            label = {"t": t, "size": size, "class": partition_class.tag.value, "stat": d.stat.tag.value}
            if summary:
                rows.append(Record(label | self.__summary(d, r, settings.precision)))
            else:
                rows.extend(Record(label | row) for row in d.to_rows())
        return rows

    @staticmethod
    def __summary(d, r: Fraction, precision: int) -> dict:
        row = {"total_count": d.total_count, "mean": format_rational(d.mean), "variance": format_rational(d.variance),
               "kolmogorov": None, "r": format_rational(r), "mgf_plus": None, "mgf_minus": None}
        if d.variance == 0:
            return row
        row["kolmogorov"] = format_decimal(kolmogorov_distance_to_normal(d, precision=precision))
        centered = d.partition_class.tag == ClassTag.DoubledDistinct and d.stat.tag in (StatisticTag.NT,
                                                                                        StatisticTag.NHat)
        if centered and d.n % 2 == 0 and d.n > 0:
            hat = d.stat.tag == StatisticTag.NHat
            for key, sign in (("mgf_plus", 1), ("mgf_minus", -1)):
                row[key] = format_decimal(mgf_normalized(d.t, d.n // 2, sign * r, hat=hat, distribution=d,
                                                         precision=precision))
        return row

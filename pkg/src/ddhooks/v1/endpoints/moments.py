from typing import List, Sequence

from ddhooks.v1.resources import Command, Record
from ddhooks.v1.stats import MOMENT_COLUMNS, compare_moments


class Moments(Command):
    """Exact means, variances and raw moment sums of the hook counts against their asymptotic formulas."""
    columns = MOMENT_COLUMNS

    def __init__(self, parent, name: str):
        super().__init__(parent, name)

    def __call__(self, t: int, sizes: Sequence[int], hat: bool = False) -> List[Record]:
        return compare_moments(t, list(sizes), hat=hat, precision=self._settings.precision)

from fractions import Fraction
from typing import List, Sequence

from ddhooks.v1.asymptotics import compare_dd
from ddhooks.v1.data import COMPARISON_COLUMNS, ComparisonRow
from ddhooks.v1.resources import Command


class Asymp(Command):
    """Log ratios between exact dd_t(2n;x) (or its shifted-hook analogue) and the main term."""
    columns = COMPARISON_COLUMNS

    def __init__(self, parent, name: str):
        super().__init__(parent, name)

    def __call__(self, t: int, sizes: Sequence[int], x: Fraction, hat: bool = False,
                 strict: bool = False) -> List[ComparisonRow]:
        if not isinstance(x, (int, Fraction)):
            raise TypeError(f"Expected 'x' to be a Fraction, got {type(x).__name__}")
        return compare_dd(t, sizes, x, hat=hat, strict=strict, precision=self._settings.precision)

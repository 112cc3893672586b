import logging
import time
from fractions import Fraction
from typing import List, Optional

from ddhooks.v1.qseries import SpecializedRing, export_value, generate
from ddhooks.v1.resources import Command, Record, format_rational

logger = logging.getLogger(__name__)

COLUMNS = ["gen", "t", "x", "m", "coefficient"]


class Series(Command):
    """
    Coefficients of a named generating function up to q^order, as polynomials in x or, when x is
    given, as exact rationals.
    """
    columns = COLUMNS

    def __init__(self, parent, name: str):
        super().__init__(parent, name)

    def __call__(self, gen: str, t: int, order: int, x: Optional[Fraction] = None) -> List[Record]:
        if x is not None and not isinstance(x, (int, Fraction)):
            raise TypeError(f"Expected 'x' to be a Fraction, got {type(x).__name__}")
        ring = SpecializedRing(x) if x is not None else None
        started = time.monotonic()
        s = generate(gen, t, order, ring)
        logger.info("Expanded %s (t=%d) to q^%d in %.1fs", gen, t, order, time.monotonic() - started)
        label = format_rational(x) if x is not None else None
        rows = []
        for m in range(order + 1):
            value = export_value(s.extract(m))
            rows.append(Record({"gen": gen, "t": t, "x": label, "m": m,
                                "coefficient": value.get("poly", value.get("value"))}))
        return rows

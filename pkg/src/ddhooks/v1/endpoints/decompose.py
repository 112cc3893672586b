from typing import List, Sequence

from ddhooks.v1.data import Partition
from ddhooks.v1.littlewood import check_dd_properties, frobenius, littlewood_decompose, runner_arrays
from ddhooks.v1.partitions import is_doubled_distinct
from ddhooks.v1.resources import Command, Record

COLUMNS = ["partition", "t", "frobenius_top", "frobenius_bottom", "runner_arrays", "charges", "core", "quotient",
           "dd_properties"]


class Decompose(Command):
    """
    Frobenius symbol, runner arrays, Wright images and the Littlewood core and quotient of a partition.
    Doubled distinct input also reports each structural property of its decomposition.
    """
    columns = COLUMNS

    def __init__(self, parent, name: str):
        super().__init__(parent, name)

    def __call__(self, parts: Sequence[int], t: int) -> List[Record]:
        p = Partition(parts)
        f = frobenius(p)
        arrays = runner_arrays(p, t)
        d = littlewood_decompose(p, t)
        return [Record({
            "partition": p.to_list(),
            "t": t,
            "frobenius_top": list(f.top),
            "frobenius_bottom": list(f.bottom),
            "runner_arrays": [[list(a.top), list(a.bottom)] for a in arrays],
            "charges": [a.charge for a in arrays],
            "core": d.core.to_list(),
            "quotient": [q.to_list() for q in d.quotient],
            "dd_properties": check_dd_properties(p, t) if is_doubled_distinct(p) else None,
        })]

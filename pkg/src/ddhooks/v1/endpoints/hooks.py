from typing import List, Optional, Sequence

from ddhooks.v1.data import Partition, StrictPartition
from ddhooks.v1.partitions import (count_t_hooks, count_t_hooks_above_diagonal, count_t_shifted_hooks, hook_lengths,
                                   shifted_hook_lengths)
from ddhooks.v1.resources import Command, Record

COLUMNS = ["partition", "size", "hooks", "t", "n_t", "nhat_t", "shifted_hooks", "s_t"]


class Hooks(Command):
    """Hook and shifted hook matrices of one partition, with the t-hook counts when t is given."""
    columns = COLUMNS

    def __init__(self, parent, name: str):
        super().__init__(parent, name)

    def __call__(self, parts: Sequence[int], t: Optional[int] = None) -> List[Record]:
        p = Partition(parts)
        strict = len(set(p.parts)) == len(p)
        row = {
            "partition": p.to_list(),
            "size": p.size,
            "hooks": hook_lengths(p),
            "t": t,
            "shifted_hooks": shifted_hook_lengths(StrictPartition(p.parts)) if strict else None,
        }
        if t is not None:
            row["n_t"] = count_t_hooks(p, t)
            row["nhat_t"] = count_t_hooks_above_diagonal(p, t)
            row["s_t"] = count_t_shifted_hooks(StrictPartition(p.parts), t) if strict else None
        return [Record(row)]

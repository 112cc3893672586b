from typing import List, Sequence

from ddhooks.v1.resources import Command, Record
from ddhooks.v1.verification import REPORT_COLUMNS, verify


class Verify(Command):
    """Runs the oracle and bijection sweeps with the configured number of workers."""
    columns = REPORT_COLUMNS

    def __init__(self, parent, name: str):
        super().__init__(parent, name)

    def __call__(self, sweeps: Sequence[str] = ("all",), max_size: int = 24, max_t: int = 6) -> List[Record]:
        return verify(sweeps, max_size, max_t, workers=self._settings.workers)

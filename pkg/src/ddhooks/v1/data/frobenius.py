from __future__ import annotations

import json
from typing import Dict, Iterable, Tuple


def _strict_row(name: str, row: Iterable[int]) -> Tuple[int, ...]:
    row = tuple(row)
    for entry in row:
        if not isinstance(entry, int) or isinstance(entry, bool):
            raise TypeError(f"Expected '{name}' entries to be ints, got {type(entry).__name__}")
        if entry < 0:
            raise ValueError(f"'{name}' entries must be nonnegative: {list(row)}")
    if any(a <= b for a, b in zip(row, row[1:])):
        raise ValueError(f"'{name}' must be strictly decreasing: {list(row)}")
    return row


class TwoRowedArray:
    """
    Two strictly decreasing rows of nonnegative integers, of possibly different lengths u and v.
    """

    def __init__(self, top: Iterable[int] = (), bottom: Iterable[int] = ()):
        self._top = _strict_row("top", top)
        self._bottom = _strict_row("bottom", bottom)

    @property
    def top(self) -> Tuple[int, ...]:
        return self._top

    @property
    def bottom(self) -> Tuple[int, ...]:
        return self._bottom

    @property
    def charge(self) -> int:
        """u - v, the row length difference."""
        return len(self._top) - len(self._bottom)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwoRowedArray):
            return NotImplemented
        return (self._top, self._bottom) == (other._top, other._bottom)

    def __hash__(self) -> int:
        return hash((self._top, self._bottom))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(top={list(self._top)}, bottom={list(self._bottom)})"

    def to_dict(self) -> Dict:
        return {"top": list(self._top), "bottom": list(self._bottom)}

    def __str__(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


class FrobeniusSymbol(TwoRowedArray):
    """
    A two-rowed array with rows of equal length, the side of the Durfee square.
    """

    def __init__(self, top: Iterable[int] = (), bottom: Iterable[int] = ()):
        super().__init__(top, bottom)
        if len(self._top) != len(self._bottom):
            raise ValueError(f"Frobenius rows differ in length: {list(self._top)} / {list(self._bottom)}")

    @property
    def rank(self) -> int:
        return len(self._top)

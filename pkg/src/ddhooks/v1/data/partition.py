from __future__ import annotations

import json
from typing import Iterable, Iterator, List, Tuple, Union, overload


def _validated_parts(parts: Iterable[int], strict: bool) -> Tuple[int, ...]:
    if isinstance(parts, (str, bytes)):
        raise TypeError("Expected 'parts' to be an iterable of ints, got a string")
    parts = tuple(parts)
    for part in parts:
        if not isinstance(part, int) or isinstance(part, bool):
            raise TypeError(f"Expected parts to be ints, got {type(part).__name__}")
        if part < 1:
            raise ValueError(f"Parts must be positive, got {part}")
    for left, right in zip(parts, parts[1:]):
        if left < right or (strict and left == right):
            order = "strictly decreasing" if strict else "weakly decreasing"
            raise ValueError(f"Parts must be {order}: {list(parts)}")
    return parts


class Partition:
    """
    A weakly decreasing tuple of positive integers. The empty tuple is the partition of 0.
    Instances are immutable and hashable.
    """
    __slots__ = ("_parts", "_size")

    def __init__(self, parts: Iterable[int] = ()):
        self._parts = _validated_parts(parts, strict=False)
        self._size = sum(self._parts)

    @property
    def parts(self) -> Tuple[int, ...]:
        return self._parts

    @property
    def size(self) -> int:
        return self._size

    def part(self, i: int) -> int:
        """1-based part access; 0 beyond the length."""
        return self._parts[i - 1] if 1 <= i <= len(self._parts) else 0

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    @overload
    def __getitem__(self, i: int) -> int: ...

    @overload
    def __getitem__(self, i: slice) -> Tuple[int, ...]: ...

    def __getitem__(self, i: Union[int, slice]):
        return self._parts[i]

    def __bool__(self) -> bool:
        return bool(self._parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __lt__(self, other: Partition) -> bool:
        return self._parts < other._parts

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self._parts)})"

    def to_list(self) -> List[int]:
        return list(self._parts)

    def __str__(self) -> str:
        return json.dumps(self.to_list())

    @classmethod
    def from_json(cls, text: str):
        return cls(json.loads(text))


class StrictPartition(Partition):
    """
    A partition into distinct parts.
    """
    __slots__ = ()

    def __init__(self, parts: Iterable[int] = ()):
        self._parts = _validated_parts(parts, strict=True)
        self._size = sum(self._parts)

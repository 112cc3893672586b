"""
Partition operations: conjugation, ordinary and shifted hook lengths, the strict to doubled
distinct construction and class membership.
"""
from __future__ import annotations

from typing import List, Union

from ddhooks.v1.data import Partition, StrictPartition, PartitionClass, ClassTag
from ddhooks.v1.resources import NotDoubledDistinct

HookMatrix = List[List[int]]


def conjugate(p: Partition) -> Partition:
    """
    Transpose of the Young diagram: conjugate(p)_j = #{i : p_i >= j}.
    """
    if not p:
        return Partition()
    parts = p.parts
    result = []
    i = len(parts)
    for j in range(1, parts[0] + 1):
        while parts[i - 1] < j:
            i -= 1
        result.append(i)
    return Partition(result)


def hook_lengths(p: Partition) -> HookMatrix:
    """
    Hook length of every box, h(i,j) = p_i + p'_j - i - j + 1, as a ragged matrix shaped like the
    Young diagram.
    """
    cols = conjugate(p).parts
    return [[row + cols[j] - i - j - 1 for j in range(row)] for i, row in enumerate(p.parts)]


def count_t_hooks(p: Partition, t: int) -> int:
    _check_t(t)
    return sum(row.count(t) for row in hook_lengths(p))


def count_t_hooks_above_diagonal(p: Partition, t: int) -> int:
    _check_t(t)
    return sum(1 for i, row in enumerate(hook_lengths(p)) for j, h in enumerate(row) if j > i and h == t)


def distinct_part_sizes(p: Partition) -> int:
    return len(set(p.parts))


def double_distinct(s: StrictPartition) -> Partition:
    """
    The doubled distinct partition: the shifted diagram of s with the column s_i glued below row i.
    Row i of the result has s_i + i boxes for i <= len(s); column j has s_j + j - 1 boxes.
    """
    _check_strict(s)
    rows = [part + i for i, part in enumerate(s.parts, start=1)]
    columns = [part + j - 1 for j, part in enumerate(s.parts, start=1)]
    i = len(rows) + 1
    while True:
        below = sum(1 for column in columns if column >= i)
        if not below:
            break
        rows.append(below)
        i += 1
    return Partition(rows)


def is_doubled_distinct(p: Partition) -> bool:
    """
    Checks the conjugate structure: with l the Durfee side, p'_i = p_i - 1 for i <= l, p'_{l+1} = l
    and p'_i = p_{i-1} beyond.
    """
    if p.size % 2:
        return False
    side = durfee_side(p)
    cols = conjugate(p)
    longest = max(len(p), len(cols)) + 1
    for i in range(1, longest + 1):
        if i <= side:
            expected = p.part(i) - 1
        elif i == side + 1:
            expected = side
        else:
            expected = p.part(i - 1)
        if cols.part(i) != expected:
            return False
    return True


def undouble(p: Partition) -> StrictPartition:
    if not is_doubled_distinct(p):
        raise NotDoubledDistinct("Partition is not doubled distinct", {"partition": p.to_list()})
    side = durfee_side(p)
    return StrictPartition([p.part(i) - i for i in range(1, side + 1)])


def shifted_hook_lengths(s: StrictPartition) -> HookMatrix:
    """
    Shifted hook lengths of a strict partition. Box (i,j) of the shifted diagram carries the hook
    length of box (i, j+1) of the doubled distinct partition.
    """
    _check_strict(s)
    hooks = hook_lengths(double_distinct(s))
    return [hooks[i][i + 1:i + 1 + part] for i, part in enumerate(s.parts)]


def count_t_shifted_hooks(s: StrictPartition, t: int) -> int:
    _check_t(t)
    return sum(row.count(t) for row in shifted_hook_lengths(s))


def durfee_side(p: Partition) -> int:
    side = 0
    for i, part in enumerate(p.parts, start=1):
        if part < i:
            break
        side = i
    return side


def hook_parity_offset(s: StrictPartition, t: int) -> int:
    """n_t - 2 * n-hat_t of the doubled distinct partition of s."""
    dd = double_distinct(s)
    return count_t_hooks(dd, t) - 2 * count_t_hooks_above_diagonal(dd, t)


def expected_parity_offset(s: StrictPartition, t: int) -> int:
    """
    +1 when t/2 is a part and t is not, -1 when t is a part and t/2 is not, 0 otherwise.
    """
    _check_t(t)
    has_t = t in s.parts
    has_half = t % 2 == 0 and t // 2 in s.parts
    if has_half and not has_t:
        return 1
    if has_t and not has_half:
        return -1
    return 0


def is_t_core(p: Partition, t: int) -> bool:
    _check_t(t)
    return all(h % t for row in hook_lengths(p) for h in row)


def classify(p: Partition, c: PartitionClass) -> bool:
    tag = c.tag
    if tag == ClassTag.All:
        return True
    if tag == ClassTag.Strict:
        return len(set(p.parts)) == len(p)
    if tag == ClassTag.DoubledDistinct:
        return is_doubled_distinct(p)
    if tag == ClassTag.SelfConjugate:
        return conjugate(p) == p
    if tag == ClassTag.TCore:
        return is_t_core(p, c.t)
    return is_doubled_distinct(p) and is_t_core(p, c.t)


def remove_rim_hook(p: Partition, i: int, j: int) -> Partition:
    """
    Removes the rim hook running from the end of row i to the bottom of column j (1-based).
    """
    parts = list(p.parts)
    if not (1 <= i <= len(parts) and 1 <= j <= parts[i - 1]):
        raise ValueError(f"Box ({i},{j}) is not in {parts}")
    last = conjugate(p).part(j)
    for r in range(i, last):
        parts[r - 1] = parts[r] - 1
    parts[last - 1] = j - 1
    return Partition([part for part in parts if part > 0])


def rim_hook_core(p: Partition, t: int) -> Partition:
    """t-core by repeatedly stripping a rim hook of length t."""
    _check_t(t)
    while True:
        box = next(((i + 1, j + 1) for i, row in enumerate(hook_lengths(p)) for j, h in enumerate(row) if h == t),
                   None)
        if box is None:
            return p
        p = remove_rim_hook(p, *box)


def _check_t(t: int) -> None:
    if not isinstance(t, int) or isinstance(t, bool):
        raise TypeError(f"Expected 't' to be an int, got {type(t).__name__}")
    if t < 1:
        raise ValueError("t must be at least 1")


def _check_strict(s: Union[StrictPartition, Partition]) -> None:
    if not isinstance(s, StrictPartition):
        if not isinstance(s, Partition) or len(set(s.parts)) != len(s):
            raise TypeError(f"Expected a StrictPartition, got {s!r}")

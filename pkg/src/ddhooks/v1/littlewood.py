"""
Frobenius symbols, Wright's map and the Littlewood decomposition of a partition into its t-core
and t-quotient.

A partition p is read as the set S = {p_i - i : i >= 1} of integers. Its Frobenius symbol lists the
nonnegative elements of S (top row) and the negative integers missing from S, written as -1 - b
(bottom row). Splitting S by residue mod t gives t runners; the two-rowed array of runner j holds
the quotients of the top entries with residue j and of the bottom entries with residue t - 1 - j.
The row length difference of runner j is its charge; the charges alone determine the t-core.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from ddhooks.v1.data import Partition, StrictPartition, FrobeniusSymbol, TwoRowedArray, QuotientDecomposition
from ddhooks.v1.partitions import (conjugate, durfee_side, is_doubled_distinct, is_t_core, count_t_hooks,
                                   count_t_hooks_above_diagonal, distinct_part_sizes, double_distinct,
                                   _check_t)
from ddhooks.v1.resources import MalformedArray, CoreNotTCore, NotDoubledDistinct, VerificationFailed

logger = logging.getLogger(__name__)


def frobenius(p: Partition) -> FrobeniusSymbol:
    side = durfee_side(p)
    cols = conjugate(p)
    return FrobeniusSymbol([p.part(i) - i for i in range(1, side + 1)],
                           [cols.part(i) - i for i in range(1, side + 1)])


def from_frobenius(f: FrobeniusSymbol) -> Partition:
    rows = [a + i for i, a in enumerate(f.top, start=1)]
    columns = [b + j for j, b in enumerate(f.bottom, start=1)]
    i = len(rows) + 1
    while True:
        below = sum(1 for column in columns if column >= i)
        if not below:
            break
        rows.append(below)
        i += 1
    return Partition(rows)


def wright_map(a: Union[TwoRowedArray, Tuple[Sequence[int], Sequence[int]]]) -> Partition:
    """
    Sends a two-rowed array with rows a_1 > ... > a_u >= 0 and b_1 > ... > b_v >= 0 to the partition
    mu with mu_k = a_k + k - (u - v) for k <= u, followed by the conjugate of
    (b_1 - v + 1, b_2 - v + 2, ..., b_v).

    Raises:
        MalformedArray: If the rows are not strictly decreasing or the result is not a partition.
    """
    if not isinstance(a, TwoRowedArray):
        try:
            top, bottom = a
            a = TwoRowedArray(top, bottom)
        except (TypeError, ValueError) as e:
            raise MalformedArray(str(e), {"array": [list(x) for x in a]}) from e
    u, v = len(a.top), len(a.bottom)
    head = [entry + k - (u - v) for k, entry in enumerate(a.top, start=1)]
    shifted = [entry - v + k for k, entry in enumerate(a.bottom, start=1)]
    if any(x < 0 for x in head + shifted) or any(x < y for x, y in zip(shifted, shifted[1:])):
        raise MalformedArray("Wright's map produced negative or increasing parts", a.to_dict())
    tail = conjugate(Partition([x for x in shifted if x > 0])).parts
    while head and head[-1] == 0:
        head.pop()
    if tail and len(head) < u:
        raise MalformedArray("Wright's map produced an interior zero part", a.to_dict())
    try:
        return Partition(head + list(tail))
    except ValueError as e:
        raise MalformedArray(str(e), a.to_dict()) from e


def wright_inverse(mu: Partition, charge: int) -> TwoRowedArray:
    """
    The two-rowed array of charge u - v = charge that Wright's map sends to mu.
    """
    length = len(mu) + max(charge, 0) + 1
    elements = [mu.part(i) - i + charge for i in range(1, length + 1)]
    present = set(elements)
    top = [e for e in elements if e >= 0]
    bottom = [-1 - h for h in range(elements[-1] + 1, 0) if h not in present]
    return TwoRowedArray(top, bottom)


def runner_arrays(p: Partition, t: int) -> List[TwoRowedArray]:
    _check_t(t)
    f = frobenius(p)
    tops: List[List[int]] = [[] for _ in range(t)]
    bottoms: List[List[int]] = [[] for _ in range(t)]
    for a in f.top:
        q, r = divmod(a, t)
        tops[r].append(q)
    for b in f.bottom:
        q, r = divmod(b, t)
        bottoms[t - 1 - r].append(q)
    return [TwoRowedArray(tops[j], bottoms[j]) for j in range(t)]


def runner_charges(p: Partition, t: int) -> List[int]:
    return [array.charge for array in runner_arrays(p, t)]


def core_from_charges(charges: Sequence[int]) -> Partition:
    """
    The partition whose runners hold beads exactly at the positions m < charge.
    """
    t = len(charges)
    if sum(charges) != 0:
        raise ValueError(f"Runner charges must sum to zero, got {list(charges)}")
    top = sorted((t * m + j for j, c in enumerate(charges) for m in range(0, c)), reverse=True)
    bottom = sorted((-1 - (t * m + j) for j, c in enumerate(charges) for m in range(c, 0)), reverse=True)
    return from_frobenius(FrobeniusSymbol(top, bottom))


def t_core(p: Partition, t: int) -> Partition:
    return core_from_charges(runner_charges(p, t))


def littlewood_decompose(p: Partition, t: int) -> QuotientDecomposition:
    arrays = runner_arrays(p, t)
    quotient = [wright_map(array) for array in arrays]
    core = core_from_charges([array.charge for array in arrays])
    return QuotientDecomposition(t, core, quotient)


def littlewood_compose(d: QuotientDecomposition) -> Partition:
    t = d.t
    if not is_t_core(d.core, t):
        raise CoreNotTCore("Core has a hook length divisible by t", {"t": t, "core": d.core.to_list()})
    top: List[int] = []
    bottom: List[int] = []
    for j, (mu, charge) in enumerate(zip(d.quotient, runner_charges(d.core, t))):
        array = wright_inverse(mu, charge)
        top.extend(t * q + j for q in array.top)
        bottom.extend(t * q + (t - 1 - j) for q in array.bottom)
    return from_frobenius(FrobeniusSymbol(sorted(top, reverse=True), sorted(bottom, reverse=True)))


def check_dd_properties(p: Partition, t: int) -> Dict[str, bool]:
    """
    Evaluates each structural property of the decomposition of a doubled distinct partition.
    """
    d = littlewood_decompose(p, t)
    nu = d.quotient
    pairs = range(1, (t + 1) // 2)
    paired = sum(nu[i].size for i in pairs)
    middle = nu[t // 2].size if t % 2 == 0 else 0
    return {
        "DD1": is_doubled_distinct(d.core) and is_t_core(d.core, t),
        "DD2": all(nu[i] == conjugate(nu[t - i]) for i in pairs) and is_doubled_distinct(nu[0]),
        "DD2'": t % 2 == 1 or conjugate(nu[t // 2]) == nu[t // 2],
        "DD3": p.size == d.core.size + 2 * t * paired + t * nu[0].size + t * middle,
        "DD4": count_t_hooks(p, t) == sum(distinct_part_sizes(q) for q in nu),
    }


def dd_decompose(p: Partition, t: int) -> QuotientDecomposition:
    if not is_doubled_distinct(p):
        raise NotDoubledDistinct("Partition is not doubled distinct", {"partition": p.to_list()})
    failed = [clause for clause, ok in check_dd_properties(p, t).items() if not ok]
    if failed:
        raise VerificationFailed("Doubled distinct decomposition properties failed",
                                 {"partition": p.to_list(), "t": t, "clauses": failed})
    return littlewood_decompose(p, t)


def shifted_quotient_count(s: StrictPartition, t: int) -> Fraction:
    """
    The count of t-hooks above the diagonal of the doubled distinct partition of s, assembled from
    its t-quotient.
    """
    nu = dd_decompose(double_distinct(s), t).quotient

    def above(q: Partition) -> int:
        return count_t_hooks_above_diagonal(q, 1)

    if t % 2:
        return above(nu[0]) + Fraction(sum(distinct_part_sizes(q) for q in nu[1:]), 2)
    half = t // 2
    paired = sum(distinct_part_sizes(nu[i]) + distinct_part_sizes(nu[t - i]) for i in range(1, half))
    return above(nu[0]) + above(nu[half]) + Fraction(paired, 2)


def verify_shifted_quotient_formula(s: StrictPartition, t: int) -> bool:
    expected = count_t_hooks_above_diagonal(double_distinct(s), t)
    ok = shifted_quotient_count(s, t) == expected
    if not ok:
        logger.warning("shifted quotient formula fails for s=%s t=%d", s.to_list(), t)
    return ok

"""
Exhaustive sweeps that hold every generating function, bijection and identity against direct
computation. Each (sweep, t) cell is independent; cells run in a process pool and the report is
assembled in grid order, so it does not depend on the number of workers.
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Sequence, Tuple

from ddhooks.v1.data import PartitionClass, StatisticKind
from ddhooks.v1.enumerate import brute_poly, class_count, partitions_of, strict_partitions_of
from ddhooks.v1.littlewood import (check_dd_properties, frobenius, from_frobenius, littlewood_compose,
                                   littlewood_decompose, verify_shifted_quotient_formula)
from ddhooks.v1.partitions import (count_t_hooks_above_diagonal, count_t_shifted_hooks, double_distinct,
                                   expected_parity_offset, hook_parity_offset, is_doubled_distinct, is_t_core,
                                   rim_hook_core, undouble)
from ddhooks.v1.qseries import (SpecializedRing, TruncatedSeries, extract_poly, first_moment_closed_form, from_counts,
                                gen_DD_n1hat, gen_DD_n1hat_sum, gen_F1, gen_F_t, gen_Fhat_t, gen_han, gen_SC_n1,
                                gen_SC_n1hat, gen_SC_n1hat_sum, gen_tcore_DD, half_sum_bracket, heine_sides,
                                moment_series, q_binomial_sides, radical_bracket, strict_series, to_strings)
from ddhooks.v1.resources import DomainError, Record, VerificationFailed

logger = logging.getLogger(__name__)

SWEEPS = ("gf", "bijection", "parity", "identities")
REPORT_COLUMNS = ["sweep", "t", "max_size", "checks", "mismatches"]

Cell = Tuple[str, int, int]


class _Tally:
    def __init__(self, sweep: str, t: int):
        self.sweep = sweep
        self.t = t
        self.checks = 0
        self.mismatches: List[Dict[str, Any]] = []

    def expect(self, what: str, ok: bool, **context):
        self.checks += 1
        if not ok:
            self.mismatches.append({"check": what, "t": self.t, **context})

    def equal_series(self, what: str, left: TruncatedSeries, right: TruncatedSeries, order: int):
        for m in range(order + 1):
            a, b = left.extract(m), right.extract(m)
            self.expect(what, a == b, m=m, left=str(a), right=str(b))


def _gf_cell(t: int, max_size: int) -> _Tally:
    tally = _Tally("gf", t)
    dd = PartitionClass.doubled_distinct()
    sc = PartitionClass.self_conjugate()
    checks: List[Tuple[str, TruncatedSeries, Callable[[int], Any]]] = [
        ("gen_F_t", gen_F_t(t, max_size), lambda m: brute_poly(m, StatisticKind.nt(t), dd)),
        ("gen_Fhat_t", gen_Fhat_t(t, max_size), lambda m: brute_poly(m, StatisticKind.nhat(t), dd)),
        ("gen_han", gen_han(t, max_size), lambda m: brute_poly(m, StatisticKind.nt(t), PartitionClass.all())),
        ("gen_tcore_DD", gen_tcore_DD(t, max_size),
         lambda m: from_counts({0: class_count(m, PartitionClass.dd_t_core(t))})),
    ]
    if t == 1:
        checks += [
            ("gen_F1", gen_F1(max_size), lambda m: brute_poly(m, StatisticKind.nt(1), dd)),
            ("gen_DD_n1hat", gen_DD_n1hat(max_size), lambda m: brute_poly(m, StatisticKind.nhat(1), dd)),
            ("gen_SC_n1hat", gen_SC_n1hat(max_size), lambda m: brute_poly(m, StatisticKind.nhat(1), sc)),
            ("gen_SC_n1", gen_SC_n1(max_size), lambda m: brute_poly(m, StatisticKind.n1(), sc)),
        ]
    for name, series, oracle in checks:
        for m in range(max_size + 1):
            got, expected = extract_poly(series, m), oracle(m)
            tally.expect(name, got == expected, m=m, series=to_strings(got), oracle=to_strings(expected))
    return tally


def _bijection_cell(t: int, max_size: int) -> _Tally:
    tally = _Tally("bijection", t)
    for m in range(max_size + 1):
        for p in partitions_of(m):
            if t == 1:
                tally.expect("frobenius_roundtrip", from_frobenius(frobenius(p)) == p, partition=p.to_list())
            d = littlewood_decompose(p, t)
            tally.expect("littlewood_roundtrip", littlewood_compose(d) == p, partition=p.to_list())
            tally.expect("littlewood_size", d.size == p.size, partition=p.to_list())
            tally.expect("core_is_t_core", is_t_core(d.core, t), partition=p.to_list())
            tally.expect("core_by_rim_hooks", d.core == rim_hook_core(p, t), partition=p.to_list())
            if is_doubled_distinct(p):
                failed = [k for k, ok in check_dd_properties(p, t).items() if not ok]
                tally.expect("dd_properties", not failed, partition=p.to_list(), clauses=failed)
                tally.expect("shifted_quotient_formula", verify_shifted_quotient_formula(undouble(p), t),
                             partition=p.to_list())
    return tally


def _parity_cell(t: int, max_size: int) -> _Tally:
    tally = _Tally("parity", t)
    for m in range(max_size // 2 + 1):
        for s in strict_partitions_of(m):
            offset, expected = hook_parity_offset(s, t), expected_parity_offset(s, t)
            tally.expect("hook_parity", offset == expected, strict=s.to_list(), offset=offset, expected=expected)
            shifted = count_t_shifted_hooks(s, t)
            above = count_t_hooks_above_diagonal(double_distinct(s), t)
            tally.expect("shifted_hooks_above_diagonal", shifted == above, strict=s.to_list(),
                         shifted=shifted, above=above)
    return tally


def _identities_cell(t: int, max_size: int) -> _Tally:
    tally = _Tally("identities", t)
    order = max_size
    one = SpecializedRing(1)
    collapse = strict_series(order // 2, one).spread(2, order)
    tally.equal_series("F_t_at_x_1", gen_F_t(t, order, one), collapse, order)
    tally.equal_series("Fhat_t_at_x_1", gen_Fhat_t(t, order, one), collapse, order)
    tally.equal_series("sum_bracket", half_sum_bracket(t, order), radical_bracket(t, order), order)
    if t % 2:
        half = order // 2
        tally.equal_series("first_moment", moment_series(t, 1, half), first_moment_closed_form(t, half), half)
    if t == 1:
        tally.equal_series("F1_sum_side", gen_F1(order), gen_F_t(1, order), order)
        tally.equal_series("DD_n1hat_sum_side", gen_DD_n1hat_sum(order), gen_DD_n1hat(order), order)
        tally.equal_series("SC_n1hat_sum_side", gen_SC_n1hat_sum(order), gen_SC_n1hat(order), order)
        tally.equal_series("q_binomial", *q_binomial_sides(Fraction(1, 3), Fraction(2, 5), order), order)
        tally.equal_series("heine", *heine_sides(Fraction(1, 2), Fraction(2, 3), Fraction(1, 5), order), order)
    return tally


_CELLS: Dict[str, Callable[[int, int], _Tally]] = {
    "gf": _gf_cell,
    "bijection": _bijection_cell,
    "parity": _parity_cell,
    "identities": _identities_cell,
}


def run_cell(cell: Cell) -> Dict[str, Any]:
    """Runs one (sweep, t, max_size) cell; module level so worker processes can unpickle it."""
    sweep, t, max_size = cell
    started = time.monotonic()
    tally = _CELLS[sweep](t, max_size)
    logger.debug("%s t=%d: %d checks, %d mismatches in %.1fs", sweep, t, tally.checks, len(tally.mismatches),
                 time.monotonic() - started)
    return {"sweep": sweep, "t": t, "max_size": max_size, "checks": tally.checks, "mismatches": tally.mismatches}


def sweep_cells(sweeps: Iterable[str], max_size: int, max_t: int) -> List[Cell]:
    names = list(SWEEPS) if "all" in sweeps else list(sweeps)
    unknown = sorted(set(names) - set(SWEEPS))
    if unknown:
        raise DomainError("Unknown sweep", {"sweeps": unknown, "known": list(SWEEPS)})
    if max_size < 0 or max_t < 1:
        raise DomainError("Need max_size >= 0 and max_t >= 1", {"max_size": max_size, "max_t": max_t})
    return [(sweep, t, max_size) for sweep in SWEEPS if sweep in names for t in range(1, max_t + 1)]


def verify(sweeps: Sequence[str] = ("all",), max_size: int = 24, max_t: int = 6, workers: int = 1) -> List[Record]:
    """
    Runs the named sweeps over every t <= max_t and every size <= max_size.

    Returns:
        List[Record]: One summary row per cell, in grid order.

    Raises:
        VerificationFailed: Any check failed; the context lists every mismatch.
    """
    cells = sweep_cells(sweeps, max_size, max_t)
    started = time.monotonic()
    logger.info("Verifying %d cells with %d worker(s)", len(cells), workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_cell, cells))
    else:
        results = [run_cell(cell) for cell in cells]
    logger.info("Verification finished in %.1fs", time.monotonic() - started)

    mismatches = [m | {"sweep": r["sweep"]} for r in results for m in r["mismatches"]]
    if mismatches:
        raise VerificationFailed("Verification sweep found mismatches",
                                 {"count": len(mismatches), "mismatches": mismatches})
    return [Record({key: r[key] if key != "mismatches" else len(r[key]) for key in REPORT_COLUMNS})
            for r in results]

"""
Package: ddhooks
License: MIT

Command line front end. Artifacts go to stdout or --out; logging and error documents go to stderr.
"""
from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .data import ClassTag, PartitionClass, StatisticKind, StatisticTag
from .qseries import GENERATORS
from .resources import (DDHooksError, ErrorHandler, Options, RationalParameter, Record, Settings, columns_of,
                        render_csv, render_json)
from .verification import SWEEPS
from .workbench import Workbench

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

DEFAULT_HALF_SIZES = [1000, 2500, 5000]

# flags that do not change the artifact
_UNRECORDED = {"command", "verbose", "debug", "out", "threads"}
_FLAG_NAMES = {"partition_class": "class"}


def _rational(text: str) -> Fraction:
    return RationalParameter(text).value


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json"], default="csv", help="Artifact format (default: csv).")
    common.add_argument("--out", type=Path, default=None, help="Write the artifact here instead of stdout.")
    common.add_argument("--precision", type=int, default=None, help="mpmath working precision in decimal digits.")
    common.add_argument("--threads", type=int, default=None, help="Worker processes for sweeps.")
    common.add_argument("--verbose", "-v", action="count", default=0, help="Repeat for more logging.")
    common.add_argument("--debug", action="store_true", help="Re-raise errors instead of printing error JSON.")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="ddhooks",
                                     description="Hook statistics of doubled distinct partitions: exact tables, "
                                                 "generating functions and asymptotics.")
    commands = parser.add_subparsers(dest="command", required=True)

    hooks = commands.add_parser("hooks", parents=[common], help="Hook and shifted hook matrices.")
    hooks.add_argument("--partition", type=int, nargs="+", required=True)
    hooks.add_argument("--t", type=int, default=None)

    decompose = commands.add_parser("decompose", parents=[common], help="Frobenius symbol and Littlewood decomposition.")
    decompose.add_argument("--partition", type=int, nargs="+", required=True)
    decompose.add_argument("--t", type=int, required=True)

    series = commands.add_parser("series", parents=[common], help="Expand a generating function.")
    series.add_argument("--gen", choices=sorted(GENERATORS), required=True)
    series.add_argument("--t", type=int, default=1)
    series.add_argument("--order", type=int, required=True, help="Truncation order in q.")
    series.add_argument("--x", type=_rational, default=None, help="Specialize x to this rational (\"p/q\").")

    dist = commands.add_parser("dist", parents=[common], help="Exact distribution tables.")
    dist.add_argument("--t", type=int, required=True)
    dist.add_argument("--size", "--sizes", dest="size", type=int, nargs="+", default=None,
                      help="Partition sizes; half sizes with --halves.")
    dist.add_argument("--class", dest="partition_class", choices=[c.value for c in ClassTag], default="dd")
    dist.add_argument("--class-t", type=int, default=None, help="t of the tcore and ddtcore classes.")
    dist.add_argument("--stat", choices=[s.value for s in StatisticTag], default="nt")
    dist.add_argument("--halves", action="store_true", help="Doubled distinct partitions of 2n for each given n.")
    dist.add_argument("--summary", action="store_true", help="One row per size with moments and normality data.")
    dist.add_argument("--r", type=_rational, default=Fraction(1, 2), help="MGF argument for --summary.")

    moments = commands.add_parser("moments", parents=[common], help="Exact moments against the asymptotic formulas.")
    moments.add_argument("--t", type=int, required=True)
    moments.add_argument("--n", type=int, nargs="+", required=True, help="Half sizes.")
    moments.add_argument("--hat", action="store_true", help="Count t-hooks above the diagonal.")

    asymp = commands.add_parser("asymp", parents=[common], help="Exact counts against the main term.")
    asymp.add_argument("--t", type=int, required=True)
    asymp.add_argument("--n", type=int, nargs="+", required=True, help="Half sizes.")
    asymp.add_argument("--x", type=_rational, required=True)
    asymp.add_argument("--hat", action="store_true", help="Count t-hooks above the diagonal.")
    asymp.add_argument("--strict", action="store_true", help="Refuse x outside the formula's hypotheses.")

    verify = commands.add_parser("verify", parents=[common], help="Oracle and bijection sweeps.")
    verify.add_argument("--sweep", choices=list(SWEEPS) + ["all"], nargs="+", default=["all"])
    verify.add_argument("--max-size", type=int, default=24)
    verify.add_argument("--max-t", type=int, default=6)
    return parser


def configure_logging(verbose: int):
    level = logging.WARNING if verbose <= 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger("ddhooks").setLevel(level)


def invocation(args: argparse.Namespace) -> Options:
    """The normalized flags that determine the artifact, rendered as a reproducing command line."""
    options = Options(args.command)
    for key, value in sorted(vars(args).items()):
        if key in _UNRECORDED:
            continue
        options.add_option(_FLAG_NAMES.get(key, key), value)
    return options


def _settings(args: argparse.Namespace) -> Settings:
    settings = Settings.from_environment()
    if args.precision is not None:
        settings.precision = args.precision
    if args.threads is not None:
        settings.workers = args.threads
    return settings


def _dist(workbench: Workbench, args: argparse.Namespace) -> List[Record]:
    sizes = args.size if args.size is not None else (DEFAULT_HALF_SIZES if args.halves else None)
    if sizes is None:
        raise ValueError("dist needs --size (or --halves)")
    partition_class = PartitionClass.parse(args.partition_class, args.class_t)
    stat = StatisticKind(StatisticTag(args.stat), args.t)
    return workbench.dist(args.t, sizes, partition_class, stat, halves=args.halves, summary=args.summary, r=args.r)


_COMMANDS: Dict[str, Callable[[Workbench, argparse.Namespace], Sequence[Record]]] = {
    "hooks": lambda w, a: w.hooks(a.partition, a.t),
    "decompose": lambda w, a: w.decompose(a.partition, a.t),
    "series": lambda w, a: w.series(a.gen, a.t, a.order, a.x),
    "dist": _dist,
    "moments": lambda w, a: w.moments(a.t, a.n, hat=a.hat),
    "asymp": lambda w, a: w.asymp(a.t, a.n, a.x, hat=a.hat, strict=a.strict),
    "verify": lambda w, a: w.verify(a.sweep, a.max_size, a.max_t),
}


def run(args: argparse.Namespace, workbench: Optional[Workbench] = None) -> Tuple[List[Record], List[str]]:
    """Runs one parsed command and returns its records with the artifact columns."""
    workbench = workbench or Workbench(_settings(args))
    endpoint = getattr(workbench, args.command)
    records = list(_COMMANDS[args.command](workbench, args))
    return records, columns_of(records) or list(endpoint.columns)


def render(records: List[Record], columns: List[str], fmt: str, options: Options) -> str:
    if fmt == "json":
        return render_json(records, {"invocation": str(options)})
    return render_csv(records, columns)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    handler = ErrorHandler(raise_on_error=args.debug)
    options = invocation(args)
    try:
        workbench = Workbench(_settings(args))
        workbench.error_handler = handler
        logger.info("%s (workers=%d)", options, workbench.settings.workers)
        records, columns = run(args, workbench)
    except (DDHooksError, TypeError, ValueError) as e:
        return handler.handler(e)

    text = render(records, columns, args.format, options)
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text, encoding="utf-8")
        logger.info("Wrote %d rows to %s", len(records), args.out)
    return 0

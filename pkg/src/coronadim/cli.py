"""Command-line entry point.

    coronadim dim "corona(path(2), cycle(7))"
    coronadim check "cycle(6)" 0 3
    coronadim crossvalidate --suite all --seed 7 --out report.jsonl
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Optional, Sequence

from .errors import CoronaDimError
from .expr import parse_graph_expr
from .graph import Graph, from_edge_list, make_family
from .metric import all_pairs, representation
from .resolver import SolverBudget, collisions, landmark_set
from .suites import (
    DEFAULT_SEED,
    MISMATCH,
    SUITE_NAMES,
    Instance,
    build_suite,
    edges_label,
    from_descriptor,
    run_instance,
    summarize,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2

CSV_COLUMNS = (
    "id",
    "suite",
    "expression",
    "order",
    "status",
    "value",
    "lower",
    "upper",
    "witness",
    "subsets_checked",
    "oracle",
    "verdict",
)


def _budget(args: argparse.Namespace) -> SolverBudget:
    kwargs = {}
    if args.budget_size is not None:
        kwargs["max_subset_size"] = args.budget_size
    if args.budget_time_ms is not None:
        kwargs["time_limit"] = args.budget_time_ms / 1000
    return SolverBudget(**kwargs)


def _csv_row(rec: dict) -> list:
    solver = rec["solver"]
    oracle = ";".join(
        f"{o['source']}:{o['kind']}:{'' if o['value'] is None else o['value']}"
        for o in rec["oracle"]
        if o["kind"] != "INAPPLICABLE"
    )
    return [
        rec["id"],
        rec["suite"],
        rec["expression"],
        rec["order"],
        solver["status"],
        "" if solver["value"] is None else solver["value"],
        solver["lower"],
        solver["upper"],
        " ".join(map(str, solver["witness"])),
        solver["subsets_checked"],
        oracle,
        rec["verdict"],
    ]


def format_records(records: Sequence[dict], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerows(_csv_row(r) for r in records)
        return buf.getvalue()
    return "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in records)


def _load_graph(args: argparse.Namespace) -> tuple[Optional[Instance], Graph, str]:
    """Instance (when built from an expression), graph and label from CLI args."""
    if args.from_file:
        g = from_edge_list(Path(args.from_file).read_text())
        return None, g, edges_label(g)
    if not args.expr:
        raise CoronaDimError("an expression or --from-file is required")
    parsed = parse_graph_expr(args.expr)
    return from_descriptor("cli/0", "cli", parsed.descriptor), make_family(parsed.descriptor), str(parsed)


def cmd_dim(args: argparse.Namespace) -> int:
    instance, g, label = _load_graph(args)
    if instance is None:
        instance = Instance("cli/0", "cli", label, g)
    record = run_instance(instance, _budget(args), timings=args.timings)
    sys.stdout.write(format_records([record], args.format))
    return EXIT_MISMATCH if record["verdict"] == MISMATCH else EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    _, g, label = _load_graph(args)
    landmarks = landmark_set(args.landmarks, g.n)
    dm = all_pairs(g)
    groups = collisions(dm, landmarks)
    print(f"graph: {label}")
    print(f"landmarks: {list(landmarks)}")
    if not groups:
        print("resolving")
    else:
        print("not resolving")
        for group in groups:
            shared = representation(dm, group[0], landmarks)
            print(f"  collision: vertices {', '.join(map(str, group))} share {shared}")
    for v in g.vertices():
        print(f"  r({v}) = {representation(dm, v, landmarks)}")
    return EXIT_OK


def run_records(
    instances: Sequence[Instance], budget: SolverBudget, jobs: int = 1, timings: bool = False
) -> list[dict]:
    """Run instances, returning records in instance order whatever ``jobs`` is."""
    work = partial(run_instance, budget=budget, timings=timings)
    if jobs <= 1:
        return [work(inst) for inst in instances]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(work, instances, chunksize=4))


def cmd_crossvalidate(args: argparse.Namespace) -> int:
    instances = build_suite(args.suite, args.seed)
    records = run_records(instances, _budget(args), args.jobs, args.timings)
    text = format_records(records, args.format)
    counts = summarize(records)
    summary = " ".join(f"{k}={v}" for k, v in counts.items())
    if args.out:
        Path(args.out).write_text(text)
        print(summary)
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    failed = counts[MISMATCH] + counts["BOUNDS_ONLY"]
    return EXIT_MISMATCH if failed else EXIT_OK


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-size", type=int, default=None, help="largest landmark set to try")
    p.add_argument("--budget-time-ms", type=int, default=None, help="search time limit per graph")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--timings", action="store_true", help="add duration_ms to records")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coronadim", description="Metric dimension of corona product graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="solve one graph and compare with the closed-form rules")
    p.add_argument("expr", nargs="?", help='graph expression, e.g. "wheel(7)"')
    p.add_argument("--from-file", help="read the graph from an edge-list file instead")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("check", help="test whether a landmark set is resolving")
    p.add_argument("expr", nargs="?", help="graph expression (omit with --from-file)")
    p.add_argument("landmarks", nargs="*", type=int)
    p.add_argument("--landmarks", dest="landmark_opt", default=None,
                   help="comma-separated landmark ids (alternative to positionals)")
    p.add_argument("--from-file", help="read the graph from an edge-list file instead")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("crossvalidate", help="run a built-in suite of oracle-vs-solver checks")
    p.add_argument("--suite", choices=(*SUITE_NAMES, "all"), default="all")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", help="write records here instead of stdout")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_crossvalidate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "check":
        if args.from_file and args.expr is not None:
            # with --from-file the first positional is a landmark, not an expression
            args.landmarks = [int(args.expr), *args.landmarks]
            args.expr = None
        if args.landmark_opt:
            args.landmarks = [*args.landmarks, *(int(x) for x in args.landmark_opt.split(","))]
    try:
        return args.func(args)
    except (CoronaDimError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: ``crossmax <command> [options]``.

Exit codes: 0 success, 2 usage, 3 unreadable or malformed input,
4 infeasible crossing configuration, 5 configuration not good,
6 instance too large for the oracle, 7 invalid realization.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from collections.abc import Sequence
from typing import TextIO

from crossmax.crossings import (
    InfeasibleConfigurationError,
    Status,
    good_violations,
    reduce_touches,
    validate,
)
from crossmax.generators import crossing_family
from crossmax.graph import WeightedGraph
from crossmax.io import Instance, ParseError, format_weight, read_instance
from crossmax.mcr import InvalidRealizationError, realization_problems, solve_via_realization
from crossmax.oracle import InstanceTooLargeError, brute_force_maxcut
from crossmax.result import SolveResult
from crossmax.solver import STRATEGIES, solve

__all__ = ["run", "main", "EXIT_CODES"]

EXIT_CODES = {
    "ok": 0,
    "usage": 2,
    "parse": 3,
    "infeasible": 4,
    "not-good": 5,
    "too-large": 6,
    "realization": 7,
}


class _Failure(Exception):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


def _load(path: str) -> Instance:
    try:
        return read_instance(path)
    except OSError as exc:
        raise _Failure("parse", f"cannot read {path}: {exc.strerror}") from None
    except ParseError as exc:
        raise _Failure("parse", f"{path}: {exc}") from None


def _check_good(graph: WeightedGraph, config) -> None:
    problems = good_violations(graph, config)
    if problems:
        raise _Failure("not-good", "configuration is not good: " + "; ".join(problems))


def _members(graph: WeightedGraph, side: Sequence[bool]) -> list[str]:
    names = graph.names or tuple(str(u) for u in range(graph.n))
    return [names[u] for u, s in enumerate(side) if s]


def _solution_report(graph: WeightedGraph, res: SolveResult) -> dict:
    side = res.witness.side
    st = res.stats
    return {
        "value": format_weight(res.value, graph.scale),
        "witness": [int(s) for s in side],
        "S": _members(graph, side),
        "branches": st.branches,
        "base_cases": st.base_cases,
        "splits": st.splits,
        "pruned": st.pruned,
        "depth": st.max_depth,
        "level_ms": [round(1000 * t, 3) for t in st.level_seconds],
    }


def _emit(out: TextIO, report: dict, as_json: bool) -> None:
    if as_json:
        out.write(json.dumps(report, sort_keys=True) + "\n")
        return
    for key, val in report.items():
        if isinstance(val, list):
            val = " ".join(map(str, val)) if val else "-"
        out.write(f"{key}: {val}\n")


def _cmd_validate(args, out: TextIO) -> None:
    inst = _load(args.file)
    _check_good(inst.graph, inst.config)
    res = validate(inst.graph, inst.config)
    report = {"status": res.status.value, "crossings": inst.config.k}
    if res.status is Status.INFEASIBLE:
        _emit(out, report, args.json)
        raise _Failure("infeasible", "planarization is not planar")
    try:
        config, removed = reduce_touches(inst.graph, inst.config)
    except InfeasibleConfigurationError as exc:  # pragma: no cover - a reduction stays planar
        raise _Failure("infeasible", str(exc)) from None
    report["removed"] = list(removed)
    report["remaining"] = config.k
    if inst.realization is not None:
        problems = realization_problems(inst.graph, inst.realization)
        report["realization"] = "valid" if not problems else "; ".join(problems)
    _emit(out, report, args.json)


def _cmd_solve(args, out: TextIO) -> None:
    inst = _load(args.file)
    _check_good(inst.graph, inst.config)
    try:
        config, removed = reduce_touches(inst.graph, inst.config)
    except InfeasibleConfigurationError as exc:
        raise _Failure("infeasible", str(exc)) from None
    t0 = time.perf_counter()
    res = solve(inst.graph, config, strategy=args.strategy, parallel=args.parallel, check=False)
    wall = time.perf_counter() - t0
    report = _solution_report(inst.graph, res)
    report["crossings"] = config.k
    report["removed"] = list(removed)
    if not args.json:
        report["wall_ms"] = round(1000 * wall, 3)
    _emit(out, report, args.json)


def _cmd_oracle(args, out: TextIO) -> None:
    inst = _load(args.file)
    try:
        cut = brute_force_maxcut(inst.graph)
    except InstanceTooLargeError as exc:
        raise _Failure("too-large", str(exc)) from None
    _emit(out, {
        "value": format_weight(cut.value, inst.graph.scale),
        "witness": [int(s) for s in cut.side],
        "S": _members(inst.graph, cut.side),
    }, args.json)  # fmt: skip


def _cmd_mcr_solve(args, out: TextIO) -> None:
    inst = _load(args.file)
    if inst.realization is None:
        raise _Failure("realization", f"{args.file} has no realization block")
    config_h = inst.realization_config
    H = inst.realization.H
    if config_h is not None:
        problems = good_violations(H, config_h)
        if problems:
            raise _Failure("not-good", "realization configuration is not good: " + "; ".join(problems))
    try:
        res = solve_via_realization(
            inst.graph, inst.realization, config_h, strategy=args.strategy, parallel=args.parallel
        )
    except InvalidRealizationError as exc:
        raise _Failure("realization", f"invalid realization: {exc}") from None
    except InfeasibleConfigurationError as exc:
        raise _Failure("infeasible", str(exc)) from None
    report = _solution_report(inst.graph, res)
    report["realization_nodes"] = H.n
    report["split_edges"] = len(inst.realization.split_edges)
    _emit(out, report, args.json)


def _cmd_bench(args, out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["k", "nodes", "branches", "base_cases", "wall_ms"])
    for k in range(args.kmin, args.kmax + 1):
        fam = crossing_family(k, slots=args.kmax, rows=args.size, cols=args.size, seed=args.seed)
        best, res = None, None
        for _ in range(args.repeats):
            t0 = time.perf_counter()
            res = solve(fam.graph, fam.config, strategy=args.strategy, parallel=args.parallel)
            wall = time.perf_counter() - t0
            best = wall if best is None else min(best, wall)
        writer.writerow([k, fam.graph.n, res.stats.branches, res.stats.base_cases, f"{1000 * best:.3f}"])
        out.flush()


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crossmax", description="Exact MAX-CUT of graphs drawn with few crossings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_command(name: str, help_text: str, solving: bool) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="instance file")
        p.add_argument("--json", action="store_true", help="machine-readable report")
        if solving:
            p.add_argument("--parallel", type=int, default=0, metavar="N", help="worker processes")
            p.add_argument("--strategy", choices=sorted(STRATEGIES), default="lowest")
        return p

    instance_command("validate", "check the crossing configuration", False)
    instance_command("solve", "exact maximum cut", True)
    instance_command("oracle", "brute-force maximum cut (small instances)", False)
    instance_command("mcr-solve", "maximum cut through the file's realization", True)

    bench = sub.add_parser("bench", help="scaling table on a grid family, as CSV")
    bench.add_argument("--kmin", type=int, default=0)
    bench.add_argument("--kmax", type=int, default=8)
    bench.add_argument("--size", type=int, default=5, help="grid side length")
    bench.add_argument("--repeats", type=int, default=1)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--parallel", type=int, default=0, metavar="N")
    bench.add_argument("--strategy", choices=sorted(STRATEGIES), default="lowest")
    return parser


_COMMANDS = {
    "validate": _cmd_validate,
    "solve": _cmd_solve,
    "oracle": _cmd_oracle,
    "mcr-solve": _cmd_mcr_solve,
    "bench": _cmd_bench,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    """Run one command; return its exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "bench":
        if not 0 <= args.kmin <= args.kmax or args.repeats < 1:
            err.write("crossmax: need 0 <= kmin <= kmax and repeats >= 1\n")
            return EXIT_CODES["usage"]
        try:
            crossing_family(args.kmax, slots=args.kmax, rows=args.size, cols=args.size)
        except ValueError as exc:
            err.write(f"crossmax: {exc}\n")
            return EXIT_CODES["usage"]
    try:
        _COMMANDS[args.command](args, out)
    except _Failure as exc:
        err.write(f"crossmax: {exc}\n")
        return EXIT_CODES[exc.kind]
    return EXIT_CODES["ok"]


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

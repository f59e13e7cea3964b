"""Command-line front end.

Exit codes: 0 success, 1 usage or unreadable input, 2 invalid instance or
solution, 3 a limit was hit before optimality was proven.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .bounds import MODES, bound_report
from .expansion import expand
from .generator import GenConfig, generate
from .hoffmann import HeuristicConfig, mhh
from .instance import (Instance, InstanceError, Solution, format_instance, metrics,
                       parse_solution, read_instance, solution_from_labels,
                       validate_solution)
from .milp import build_model, write_lp
from .oracle import DEFAULT_CAP, OracleCapError, brute_force
from .solver import SolverConfig, solve

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_LIMIT = 0, 1, 2, 3
TIME_ENV = "TDALBP_TIME_LIMIT"
INSTANCE_SUFFIXES = (".alb", ".tdalb", ".in2", ".IN2")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunReport:
    name: str
    mode: str
    c: int
    m: int
    F: int
    LE: float
    LT: int
    optimal: bool
    nodes: int
    cpu: float

    COLUMNS = ("instance", "mode", "c", "m", "F", "LE", "LT", "optimal", "nodes")

    def fields(self, timing: bool = False) -> list[str]:
        out = [self.name, self.mode, str(self.c), str(self.m), str(self.F), f"{self.LE:.2f}",
               str(self.LT), "1" if self.optimal else "0", str(self.nodes)]
        if timing:
            out.append(f"{self.cpu:.2f}")
        return out


def _table(rows: list[list[str]], pretty: bool) -> str:
    if not pretty:
        return "\n".join("\t".join(r) for r in rows) + "\n"
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    return "\n".join("  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in rows) + "\n"


def _default_time_limit() -> float | None:
    raw = os.environ.get(TIME_ENV)
    if not raw:
        return None
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"{TIME_ENV} must be a number, got {raw!r}") from None


def _load(args) -> Instance:
    path = Path(args.instance)
    if not path.is_file():
        raise UsageError(f"cannot read instance file {path}")
    inst = read_instance(path, args.cycle_time, getattr(args, "format", None))
    if getattr(args, "salbp", False):
        inst = inst.without_divisions()
    return inst


def _solver_config(args) -> SolverConfig:
    limit = args.time_limit if args.time_limit is not None else _default_time_limit()
    try:
        return SolverConfig(lam=args.lam, max_loads=args.max_loads, max_queue=args.max_queue,
                            time_limit=limit, bound_mode=args.bound_mode,
                            min_penalty_postpass=args.min_penalty_postpass)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def run_one(inst: Instance, cfg: SolverConfig) -> tuple[RunReport, Solution]:
    t0 = time.process_time()
    res = solve(inst, cfg)
    cpu = time.process_time() - t0
    le, lt = metrics(inst, res.best)
    mode = "TDALBP" if inst.divisions else "SALBP-1"
    return RunReport(inst.name, mode, inst.cycle_time, res.m, res.best.penalty_total, le, lt,
                     res.optimal, res.nodes_explored, cpu), res.best


# -- subcommands -----------------------------------------------------------


def cmd_solve(args, out) -> int:
    inst = _load(args)
    cfg = _solver_config(args)
    t0 = time.perf_counter()
    if args.heuristic_only:
        best, optimal, nodes = mhh(expand(inst), cfg=HeuristicConfig(cfg.max_loads)), False, 0
    else:
        res = solve(inst, cfg)
        best, optimal, nodes = res.best, res.optimal, res.nodes_explored
    wall = time.perf_counter() - t0
    le, lt = metrics(inst, best)
    row = [str(best.m), str(best.penalty_total), f"{le:.2f}", str(lt),
           "1" if optimal else "0", str(nodes), f"{wall:.2f}"]
    header = ["m", "F", "LE", "LT", "optimal", "nodes", "time"]
    out.write(_table([header, row] if args.pretty else [row], args.pretty))
    out.write(best.format(inst) + "\n")
    if args.heuristic_only:
        return EXIT_OK
    return EXIT_OK if optimal else EXIT_LIMIT


def cmd_bounds(args, out) -> int:
    inst = _load(args)
    rep = bound_report(inst, args.bound_mode)
    header = ["lb1", "lb2", "lb3", "lb_bin", "lb_max", "mode"]
    if args.pretty:
        out.write(_table([header, rep.line().split("\t")], True))
    else:
        out.write(rep.line() + "\n")
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    inst = _load(args)
    try:
        res = brute_force(inst, args.cap)
    except OracleCapError as exc:
        print(f"error: {exc}; the oracle is for small instances only", file=sys.stderr)
        return EXIT_INVALID
    out.write(f"{res.m_opt}\t{res.min_penalty_among_optima}\t{res.count_optima}\n")
    return EXIT_OK


def cmd_generate(args, out) -> int:
    inst = _load(args).without_divisions()
    try:
        cfg = GenConfig(args.method.upper(), args.delta, args.seed, args.penalty)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = format_instance(generate(inst, cfg), "tdalb")
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_export_lp(args, out) -> int:
    inst = _load(args)
    m_prime = args.m_prime or mhh(expand(inst)).m
    text = write_lp(build_model(expand(inst, m_prime)))
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_validate(args, out) -> int:
    inst = _load(args)
    sol_path = Path(args.solution)
    if not sol_path.is_file():
        raise UsageError(f"cannot read solution file {sol_path}")
    sol = solution_from_labels(inst, parse_solution(sol_path.read_text()))
    report = validate_solution(inst, sol)
    if not report.ok:
        out.write(str(report) + "\n")
        return EXIT_INVALID
    le, lt = metrics(inst, sol)
    out.write(f"OK\t{sol.m}\t{sol.penalty_total}\t{le:.2f}\t{lt}\n")
    return EXIT_OK


def _batch_job(job):
    path, c, fmt, views, cfg, gen = job
    inst = read_instance(path, c, fmt)
    rows = []
    base = inst.without_divisions()
    for view in views:
        if view == "salbp":
            target = base
        elif gen is not None:
            target = generate(base, gen)
        else:
            target = inst
        rep, _ = run_one(target, cfg)
        rows.append(rep)
    return rows


def cmd_batch(args, out) -> int:
    folder = Path(args.directory)
    if not folder.is_dir():
        raise UsageError(f"not a directory: {folder}")
    files = sorted(p for p in folder.iterdir() if p.suffix in INSTANCE_SUFFIXES)
    if not files:
        raise UsageError(f"no instance files in {folder}")
    cfg = _solver_config(args)
    gen = None
    if args.method:
        gen = GenConfig(args.method.upper(), args.delta, args.seed, args.penalty)
    views = {"both": ("salbp", "tdalbp"), "salbp": ("salbp",), "tdalbp": ("tdalbp",)}[args.views]
    jobs = [(p, args.cycle_time, None, views, cfg, gen) for p in files]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_batch_job, jobs))
    else:
        results = [_batch_job(j) for j in jobs]
    reports = [r for rows in results for r in rows]
    header = list(RunReport.COLUMNS) + (["cpu"] if args.timing else [])
    body = [r.fields(args.timing) for r in reports]
    text = _table([header] + body, args.pretty)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return EXIT_OK if all(r.optimal for r in reports) else EXIT_LIMIT


# -- parser ----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _instance_args(p, with_view: bool = True):
    p.add_argument("instance", help="instance file (.alb, .tdalb or benchmark .IN2)")
    p.add_argument("--cycle-time", "-c", type=int, default=None,
                   help="cycle time (overrides a CYCLE line in the file)")
    p.add_argument("--format", choices=("alb", "tdalb"), default=None)
    if with_view:
        g = p.add_mutually_exclusive_group()
        g.add_argument("--tdalbp", dest="salbp", action="store_false",
                       help="keep task divisions (default)")
        g.add_argument("--salbp", dest="salbp", action="store_true",
                       help="ignore task divisions")
        p.set_defaults(salbp=False)


def _solver_args(p):
    p.add_argument("--lambda", dest="lam", type=float, default=0.002)
    p.add_argument("--max-loads", type=int, default=10_000)
    p.add_argument("--max-queue", type=int, default=300_000)
    p.add_argument("--time-limit", type=float, default=None,
                   help=f"seconds (default from ${TIME_ENV}, else none)")
    p.add_argument("--bound-mode", choices=MODES, default="safe")
    p.add_argument("--min-penalty-postpass", action="store_true",
                   help="among optimal solutions return one with least penalty")


def _gen_args(p, required: bool):
    p.add_argument("--method", choices=("m", "r", "M", "R"), required=required)
    p.add_argument("--delta", type=float, default=1.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--penalty", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tdalbp", description="SALBP-1 / TDALBP exact solver toolkit")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="aligned tables with headers")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", parents=[common], help="solve one instance exactly")
    _instance_args(p)
    _solver_args(p)
    p.add_argument("--heuristic-only", action="store_true",
                   help="stop after the constructive heuristic")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bounds", parents=[common], help="print lower bounds")
    _instance_args(p)
    p.add_argument("--bound-mode", choices=MODES, default="safe")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("oracle", parents=[common], help="brute-force a small instance")
    _instance_args(p)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum expanded node count")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("generate", parents=[common], help="derive a TDALBP instance")
    _instance_args(p, with_view=False)
    _gen_args(p, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("export-lp", parents=[common], help="write the binary program in LP format")
    _instance_args(p)
    p.add_argument("--m-prime", type=int, default=None,
                   help="station budget (default: heuristic station count)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export_lp)

    p = sub.add_parser("validate", parents=[common], help="check a solution file")
    _instance_args(p)
    p.add_argument("solution")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("batch", parents=[common], help="solve every instance in a directory")
    p.add_argument("directory")
    p.add_argument("--cycle-time", "-c", type=int, default=None)
    p.add_argument("--views", choices=("both", "salbp", "tdalbp"), default="both")
    _gen_args(p, required=False)
    _solver_args(p)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="add a cpu seconds column")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_batch)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InstanceError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

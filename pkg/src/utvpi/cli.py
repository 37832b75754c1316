"""Command-line front end.

Subcommands:

- ``check <file> --mode scst|inc-lamu|m-lamu|closure``: assert a constraint
  file one line at a time, report the verdict stream
- ``implies <phi> <queries> [--mode scst|closure]``: register the queries,
  assert phi, report the step at which each query became implied
- ``gen --n N --m M --seed S --out PATH``: write a random instance
- ``bench --config PATH --modes LIST --reps K [--csv PATH]``: timing table
- ``bench-impls``: compare the compiled and pure-Python kernels

Exit codes: 0 = SAT, 10 = UNSAT-Q (rationally infeasible), 11 = UNSAT-Z
(integer-infeasible), 2 = usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import _kernels
from .bench import format_table, load_config, run_bench, to_csv
from .constraints import ParseError, VarTable, parse_file
from .graph import vertex_label
from .gen import GenConfig, audit, generate
from .runners import CHECK_MODES, EXIT_CODES, IMPLIES_MODES, run_check, run_implies

USAGE_ERROR = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="utvpi",
        description="Incremental satisfiability and implication for UTVPI integer constraints.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="decide satisfiability of a constraint file")
    p_check.add_argument("file")
    p_check.add_argument("--mode", choices=CHECK_MODES, default="scst")
    p_check.add_argument("--quiet", action="store_true",
                         help="suppress the per-constraint outcome stream")

    p_imp = sub.add_parser("implies", help="incremental implication of query constraints")
    p_imp.add_argument("phi", help="constraint file to assert")
    p_imp.add_argument("queries", help="query constraint file, one per line")
    p_imp.add_argument("--mode", choices=IMPLIES_MODES, default="scst")

    p_gen = sub.add_parser("gen", help="generate a random instance")
    p_gen.add_argument("--n", type=int, required=True, help="variable count")
    p_gen.add_argument("--m", type=int, required=True, help="constraint count")
    p_gen.add_argument("--seed", type=int, default=1)
    p_gen.add_argument("--out", required=True, help="output path ('-' for stdout)")

    p_bench = sub.add_parser("bench", help="time check modes over generated instances")
    p_bench.add_argument("--config", required=True,
                         help="JSON list of {class,n,m,seed} instance descriptions")
    p_bench.add_argument("--modes", default="scst,m-lamu",
                         help="comma-separated subset of " + ",".join(CHECK_MODES))
    p_bench.add_argument("--reps", type=int, default=3)
    p_bench.add_argument("--csv", default=None, help="also write rows as CSV")

    p_impl = sub.add_parser("bench-impls",
                            help="compare compiled and pure-Python kernels")
    p_impl.add_argument("--n", type=int, default=100)
    p_impl.add_argument("--m", type=int, default=1000)
    p_impl.add_argument("--seed", type=int, default=1)
    p_impl.add_argument("--reps", type=int, default=3)
    p_impl.add_argument("--modes", default="scst,m-lamu")
    return parser


def _cmd_check(args) -> int:
    table = VarTable()
    t0 = time.perf_counter()
    parsed = parse_file(args.file, table)
    parse_s = time.perf_counter() - t0
    constraints = [c for _, c in parsed]
    report = run_check(constraints, len(table), args.mode)
    if not args.quiet:
        for idx, step in enumerate(report.steps, start=1):
            print(f"constraint {idx}: {step}")
    if report.verdict == "SAT":
        print(f"SAT ({len(constraints)} constraints, "
              f"parse {parse_s * 1000:.2f} ms, solve {report.timings['solve_s'] * 1000:.2f} ms)")
    else:
        where = f" at constraint {report.failed_index}"
        extra = ""
        if report.witness_vertex is not None:
            names = [v.name for v in table.variables()]
            extra = f" (witness {vertex_label(report.witness_vertex, names)})"
        print(f"{report.verdict}{where}{extra}")
    return EXIT_CODES[report.verdict]


def _cmd_implies(args) -> int:
    table = VarTable()  # shared so both files agree on variable identity
    phi = [c for _, c in parse_file(args.phi, table)]
    queries_parsed = parse_file(args.queries, table)
    queries = [c for _, c in queries_parsed]
    report = run_implies(phi, queries, len(table), mode=args.mode)
    for qi, c in enumerate(queries, start=1):
        step = report.implied_at.get(qi)
        text = str(c)
        if step is None:
            print(f"query {qi} ({text}): not implied")
        else:
            print(f"query {qi} ({text}): implied at step {step}")
    if report.verdict != "SAT":
        print(f"{report.verdict} at constraint {report.failed_index}")
    return EXIT_CODES[report.verdict]


def _cmd_gen(args) -> int:
    cfg = GenConfig(args.n, args.m, args.seed)
    try:
        text = generate(cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    audit(cfg, text)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.m} constraints over {args.n} variables to {args.out}")
    return 0


def _cmd_bench(args) -> int:
    instances = load_config(args.config)
    modes = [m.strip() for m in args.modes.split(",") if m.strip()]
    rows = run_bench(instances, modes, args.reps)
    print(format_table(rows))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(to_csv(rows))
        print(f"csv written to {args.csv}")
    return 0


def _cmd_bench_impls(args) -> int:
    from .bench import BenchInstance

    impls = _kernels.available()
    print(f"kernel implementations available: {', '.join(impls)} "
          f"(active: {_kernels.active_name()})")
    if "compiled" not in impls:
        print("compiled extension not built; timing the pure kernels only")
    modes = [m.strip() for m in args.modes.split(",") if m.strip()]
    inst = [BenchInstance("impl-compare", args.n, args.m, args.seed)]
    previous = _kernels.active_name()
    all_rows = []
    try:
        for impl in impls:
            _kernels.use(impl)
            for row in run_bench(inst, modes, args.reps):
                all_rows.append((impl, row))
    finally:
        _kernels.use(previous)
    width = max(len(i) for i, _ in all_rows) if all_rows else 8
    print(f"{'impl'.ljust(width)}  mode      mean_ms    stddev_ms  verdict")
    for impl, row in all_rows:
        print(f"{impl.ljust(width)}  {row.mode.ljust(8)}  {row.mean_ms:9.2f}  "
              f"{row.stddev_ms:9.2f}  {row.verdict}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "implies":
            return _cmd_implies(args)
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "bench":
            return _cmd_bench(args)
        return _cmd_bench_impls(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())

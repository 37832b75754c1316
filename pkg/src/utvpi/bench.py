"""Benchmark harness: timed assertion runs over generated instances.

Times use a monotonic clock; one warm-up iteration per (instance, mode) is
discarded.  Rows can be rendered as a text table or CSV with the columns
``class,n,m,mode,verdict,mean_ms,stddev_ms``; ``parse_csv`` round-trips the
CSV emitter exactly.
"""

from __future__ import annotations

import csv
import io
import json
import statistics
import time
from dataclasses import dataclass

from .constraints import VarTable, parse_lines
from .gen import GenConfig, generate
from .runners import CHECK_MODES, run_check

CSV_COLUMNS = ("class", "n", "m", "mode", "verdict", "mean_ms", "stddev_ms")


@dataclass(frozen=True)
class BenchInstance:
    label: str
    n: int
    m: int
    seed: int


@dataclass(frozen=True)
class BenchRow:
    label: str
    n: int
    m: int
    mode: str
    verdict: str
    mean_ms: float
    stddev_ms: float


def load_config(path) -> list[BenchInstance]:
    """Read a JSON list of ``{"class", "n", "m", "seed"}`` objects."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    out = []
    for entry in raw:
        out.append(
            BenchInstance(
                label=str(entry["class"]),
                n=int(entry["n"]),
                m=int(entry["m"]),
                seed=int(entry.get("seed", 1)),
            )
        )
    return out


def _materialize(inst: BenchInstance):
    text = generate(GenConfig(inst.n, inst.m, inst.seed))
    table = VarTable()
    constraints = [c for _, c in parse_lines(text.splitlines(), table)]
    return constraints, len(table)


def run_bench(instances, modes, reps: int, verdict_sink=None) -> list[BenchRow]:
    """Mean/stddev wall time per (instance, mode) over ``reps`` runs.

    ``reps=0`` yields no rows.  Verdicts are recorded per row and must
    agree across repetitions; ``verdict_sink`` (if given) receives each
    ``(instance, mode, report)`` for cross-mode auditing.
    """
    for mode in modes:
        if mode not in CHECK_MODES:
            raise ValueError(f"unknown mode {mode!r}")
    rows: list[BenchRow] = []
    if reps <= 0:
        return rows
    for inst in instances:
        constraints, n_vars = _materialize(inst)
        for mode in modes:
            run_check(constraints, n_vars, mode)  # warm-up, discarded
            times = []
            verdicts = set()
            report = None
            for _ in range(reps):
                t0 = time.perf_counter()
                report = run_check(constraints, n_vars, mode)
                times.append((time.perf_counter() - t0) * 1000.0)
                verdicts.add(report.verdict)
            if len(verdicts) != 1:
                raise AssertionError(f"nondeterministic verdicts for {inst}: {verdicts}")
            if verdict_sink is not None:
                verdict_sink(inst, mode, report)
            rows.append(
                BenchRow(
                    label=inst.label,
                    n=inst.n,
                    m=inst.m,
                    mode=mode,
                    verdict=verdicts.pop(),
                    mean_ms=statistics.fmean(times),
                    stddev_ms=statistics.stdev(times) if len(times) > 1 else 0.0,
                )
            )
    return rows


def format_table(rows) -> str:
    if not rows:
        return "(no rows)"
    header = list(CSV_COLUMNS)
    cells = [
        [r.label, str(r.n), str(r.m), r.mode, r.verdict,
         f"{r.mean_ms:.2f}", f"{r.stddev_ms:.2f}"]
        for r in rows
    ]
    widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(header))]
    for c in cells:
        lines.append("  ".join(c[i].ljust(widths[i]) for i in range(len(header))))
    return "\n".join(lines)


def to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow([r.label, r.n, r.m, r.mode, r.verdict,
                         repr(r.mean_ms), repr(r.stddev_ms)])
    return buf.getvalue()


def parse_csv(text: str) -> list[BenchRow]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header: {header}")
    return [
        BenchRow(row[0], int(row[1]), int(row[2]), row[3], row[4],
                 float(row[5]), float(row[6]))
        for row in reader
        if row
    ]

"""Fold-style checking runs shared by the CLI and the benchmark harness.

Each mode asserts the constraints one at a time and stops at the first
infeasible step; all modes classify identically on the same input:

- ``scst``      incremental solver with bounds maintenance and watch set
- ``inc-lamu``  incremental edge insertion, tight-component parity scan
                after every assertion
- ``m-lamu``    whole-set batch check re-run on every prefix
- ``closure``   tightened-closure oracle re-run on every prefix
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import _kernels
from .batch import Sat as BatchSat
from .batch import UnsatQ as BatchUnsatQ
from .batch import UnsatZ as BatchUnsatZ
from .batch import batch_check
from .closure import closure_implies, tc, ttc
from .constraints import Contradiction, Tautology, UtvpiConstraint, edges_of, normalize
from .graph import ConstraintGraph, Potential
from .incremental import Infeasible, insert_edge
from .solver import AlreadyImplied, Sat, Solver, UnsatQ, UnsatZ

CHECK_MODES = ("scst", "inc-lamu", "m-lamu", "closure")
IMPLIES_MODES = ("scst", "closure")

SAT = "SAT"
UNSAT_Q = "UNSAT-Q"
UNSAT_Z = "UNSAT-Z"

EXIT_CODES = {SAT: 0, UNSAT_Q: 10, UNSAT_Z: 11}


@dataclass
class RunReport:
    """Outcome stream of one assertion run.

    ``steps`` holds one verdict per constraint, in input order, ending at
    the first infeasible one; ``failed_index`` is its 1-based position (or
    None).  Implication runs fill ``implied_at`` with tag -> step index.
    """

    verdict: str = SAT
    failed_index: int | None = None
    steps: list[str] = field(default_factory=list)
    implied_at: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)
    witness_vertex: int | None = None


def _verdict_of_batch(res) -> str:
    if isinstance(res, BatchSat):
        return SAT
    if isinstance(res, BatchUnsatQ):
        return UNSAT_Q
    return UNSAT_Z


def run_check(constraints, n_vars: int, mode: str) -> RunReport:
    """Assert ``constraints`` (raw, pre-normalization) one at a time."""
    if mode not in CHECK_MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {CHECK_MODES}")
    report = RunReport()
    t0 = time.perf_counter()
    if mode == "scst":
        _fold_solver(constraints, n_vars, report)
    elif mode == "inc-lamu":
        _fold_incremental(constraints, n_vars, report)
    elif mode == "m-lamu":
        _fold_batch(constraints, report)
    else:
        _fold_closure(constraints, report)
    report.timings["solve_s"] = time.perf_counter() - t0
    return report


def _stop(report: RunReport, index: int, verdict: str, witness: int | None = None) -> None:
    report.steps.append(verdict)
    report.verdict = verdict
    report.failed_index = index
    report.witness_vertex = witness


def _fold_solver(constraints, n_vars, report):
    solver = Solver(n_vars)
    for idx, c in enumerate(constraints, start=1):
        outcome = normalize(c)
        if isinstance(outcome, Tautology):
            report.steps.append(SAT)
            continue
        if isinstance(outcome, Contradiction):
            _stop(report, idx, UNSAT_Q)
            return
        res = solver.add_constraint(outcome.constraint)
        if isinstance(res, Sat):
            report.steps.append(SAT)
        elif isinstance(res, UnsatQ):
            _stop(report, idx, UNSAT_Q)
            return
        else:
            _stop(report, idx, UNSAT_Z, witness=res.vertex)
            return


def _fold_incremental(constraints, n_vars, report):
    g = ConstraintGraph(2 * n_vars)
    pot = Potential.zeros(2 * n_vars)
    for idx, c in enumerate(constraints, start=1):
        outcome = normalize(c)
        if isinstance(outcome, Tautology):
            report.steps.append(SAT)
            continue
        if isinstance(outcome, Contradiction):
            _stop(report, idx, UNSAT_Q)
            return
        cn = outcome.constraint
        failed = False
        for e in edges_of(cn):
            res = insert_edge(g, pot, e)
            if isinstance(res, Infeasible):
                failed = True
                break
        if failed:
            _stop(report, idx, UNSAT_Q)
            return
        witness = _kernels.z_witness(g.n, g.out_head, g.out_next, g.eto, g.ewt, pot.raw)
        if witness >= 0:
            _stop(report, idx, UNSAT_Z, witness=witness)
            return
        report.steps.append(SAT)


def _fold_batch(constraints, report):
    prefix = []
    for idx, c in enumerate(constraints, start=1):
        outcome = normalize(c)
        if isinstance(outcome, Tautology):
            report.steps.append(SAT)
            continue
        if isinstance(outcome, Contradiction):
            _stop(report, idx, UNSAT_Q)
            return
        prefix.append(outcome.constraint)
        res = batch_check(prefix)
        verdict = _verdict_of_batch(res)
        if verdict != SAT:
            _stop(report, idx, verdict, res.vertex if verdict == UNSAT_Z else None)
            return
        report.steps.append(SAT)


def _fold_closure(constraints, report):
    prefix = []
    for idx, c in enumerate(constraints, start=1):
        outcome = normalize(c)
        if isinstance(outcome, Tautology):
            report.steps.append(SAT)
            continue
        if isinstance(outcome, Contradiction):
            _stop(report, idx, UNSAT_Q)
            return
        prefix.append(outcome.constraint)
        if ttc(prefix).contradiction:
            verdict = UNSAT_Q if tc(prefix).contradiction else UNSAT_Z
            _stop(report, idx, verdict)
            return
        report.steps.append(SAT)


def run_implies(assertions, queries, n_vars: int, mode: str = "scst") -> RunReport:
    """Register queries up front, then assert; record first-implied steps.

    ``implied_at`` maps the 1-based query index to the 1-based assertion
    step at which it became implied (0 for tautologies implied by the
    empty set); queries absent from the map were never implied.
    """
    if mode not in IMPLIES_MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {IMPLIES_MODES}")
    report = RunReport()
    t0 = time.perf_counter()
    if mode == "scst":
        _implies_solver(assertions, queries, n_vars, report)
    else:
        _implies_closure(assertions, queries, report)
    report.timings["solve_s"] = time.perf_counter() - t0
    return report


def _implies_solver(assertions, queries, n_vars, report):
    solver = Solver(n_vars)
    for qi, q in enumerate(queries, start=1):
        res = solver.register_watch(q, qi)
        if isinstance(res, AlreadyImplied):
            report.implied_at[qi] = 0
    for idx, c in enumerate(assertions, start=1):
        outcome = normalize(c)
        if isinstance(outcome, Tautology):
            report.steps.append(SAT)
            continue
        if isinstance(outcome, Contradiction):
            _stop(report, idx, UNSAT_Q)
            return
        res = solver.add_constraint(outcome.constraint)
        if isinstance(res, Sat):
            report.steps.append(SAT)
            for tag in res.implied:
                report.implied_at[tag] = idx
        elif isinstance(res, UnsatQ):
            _stop(report, idx, UNSAT_Q)
            return
        else:
            _stop(report, idx, UNSAT_Z, witness=res.vertex)
            return


def _implies_closure(assertions, queries, report):
    pending: dict[int, UtvpiConstraint] = {}
    for qi, q in enumerate(queries, start=1):
        outcome = normalize(q)
        if isinstance(outcome, Tautology):
            report.implied_at[qi] = 0
        elif isinstance(outcome, Contradiction):
            continue  # never implied by a satisfiable set
        else:
            pending[qi] = outcome.constraint
    prefix = []
    for idx, c in enumerate(assertions, start=1):
        outcome = normalize(c)
        if isinstance(outcome, Tautology):
            report.steps.append(SAT)
            continue
        if isinstance(outcome, Contradiction):
            _stop(report, idx, UNSAT_Q)
            return
        prefix.append(outcome.constraint)
        closed = ttc(prefix)
        if closed.contradiction:
            verdict = UNSAT_Q if tc(prefix).contradiction else UNSAT_Z
            _stop(report, idx, verdict)
            return
        for qi in list(pending):
            if closure_implies(closed, pending[qi]):
                report.implied_at[qi] = idx
                del pending[qi]
        report.steps.append(SAT)

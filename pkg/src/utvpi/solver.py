"""Incremental UTVPI satisfiability and implication solver.

The solver state couples the difference graph with a valid potential, a
per-vertex bounds table, and a watch set of registered, not-yet-implied
constraints.  Asserting a constraint inserts its edges with incremental
potential repair, refreshes the bounds along paths through one new edge
(its counter-edge contributes no shorter paths), rejects the assertion if
some variable's bounds now contradict, and reports which watched
constraints just became implied.

``bounds[v]`` is the tightest derivable bound on the value of signed
vertex ``v``: for variable ``x``, ``bounds[x-]`` is its best upper bound
and ``-bounds[x+]`` its best lower bound; ``INF`` marks unbounded.
Rejected assertions (either kind) roll the state back so incremental
clients keep a usable, satisfiable state.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

from . import _kernels
from ._kernels import INF
from .constraints import (
    Contradiction,
    SignedVertex,
    Tautology,
    UtvpiConstraint,
    Var,
    edges_of,
    normalize,
)
from .graph import (
    Added,
    ConstraintGraph,
    Potential,
    Tightened,
    as_public,
    dijkstra,
    edge_ids,
    sat_add,
    sat_add3,
)
from .incremental import Infeasible, insert_edge


@dataclass(frozen=True)
class Sat:
    """Assertion committed; carries the tags of newly implied watches."""

    implied: tuple = ()


@dataclass(frozen=True)
class UnsatQ:
    """Rationally infeasible; witness cycle edges. State rolled back."""

    cycle: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class UnsatZ:
    """Integer-infeasible; witness vertex and the clashing bound pair.

    ``bound + counter_bound < 0`` held after the tentative update; the
    state was rolled back.
    """

    vertex: int
    bound: int
    counter_bound: int


AddOutcome = Sat | UnsatQ | UnsatZ


@dataclass(frozen=True)
class AlreadyImplied:
    pass


@dataclass(frozen=True)
class Watching:
    pass


ALREADY_IMPLIED = AlreadyImplied()
WATCHING = Watching()


@dataclass(frozen=True)
class _WatchEntry:
    constraint: UtvpiConstraint | None  # None: unsatisfiable query, never fires
    tag: object
    x: int
    y: int
    d: int


class Solver:
    """Mutable solver state over a fixed-or-growing set of variables.

    Single-writer: one mutation at a time; read-only queries may run
    concurrently between mutations.
    """

    def __init__(self, n_vars: int = 0):
        self.graph = ConstraintGraph(2 * n_vars)
        self.potential = Potential.zeros(2 * n_vars)
        self.bounds = array("q", [INF]) * (2 * n_vars)
        self.watch: list[_WatchEntry] = []
        self.asserted: list[UtvpiConstraint] = []

    @classmethod
    def for_variables(cls, variables) -> "Solver":
        vs = list(variables)
        n = max((v.index for v in vs), default=-1) + 1
        return cls(n)

    @property
    def n_vars(self) -> int:
        return self.graph.n // 2

    def ensure_vars(self, n_vars: int) -> None:
        target = 2 * n_vars
        if target <= self.graph.n:
            return
        self.graph.grow(target)
        self.potential.grow(target)
        while len(self.bounds) < target:
            self.bounds.append(INF)

    def clone(self) -> "Solver":
        other = Solver.__new__(Solver)
        other.graph = self.graph.copy()
        other.potential = self.potential.copy()
        other.bounds = array("q", self.bounds)
        other.watch = list(self.watch)
        other.asserted = list(self.asserted)
        return other

    # -- bounds accessors -------------------------------------------------

    def bound_of(self, vertex) -> object:
        """Tightest bound on a signed vertex's value (``math.inf`` if none)."""
        vid = vertex.vid if isinstance(vertex, SignedVertex) else vertex
        return as_public(self.bounds[vid])

    def upper_bound(self, var) -> object:
        idx = var.index if isinstance(var, Var) else var
        return as_public(self.bounds[2 * idx + 1])

    def lower_bound(self, var) -> object:
        idx = var.index if isinstance(var, Var) else var
        b = self.bounds[2 * idx]
        return -as_public(b)

    def shortest_path(self, src, dst) -> object:
        """On-demand shortest-path weight between signed vertices."""
        svid = src.vid if isinstance(src, SignedVertex) else src
        dvid = dst.vid if isinstance(dst, SignedVertex) else dst
        dist = dijkstra(self.graph, self.potential, svid, "forward")
        return dist[dvid]

    # -- state mutation ---------------------------------------------------

    def _normalized(self, c: UtvpiConstraint) -> UtvpiConstraint:
        outcome = normalize(c)
        if isinstance(outcome, (Tautology, Contradiction)):
            raise ValueError(
                "trivial constraint cannot be asserted; resolve "
                f"{c} at normalization"
            )
        cn = outcome.constraint
        top = cn.x.index if cn.y is None else cn.y.index
        self.ensure_vars(top + 1)
        return cn

    def add_constraint(self, c: UtvpiConstraint) -> AddOutcome:
        """Assert a constraint; reject (with rollback) if infeasible.

        Sat outcomes carry tags of watched constraints the assertion made
        implied; those leave the watch set.
        """
        cn = self._normalized(c)
        edges = edges_of(cn)
        pot_snapshot = array("q", self.potential.raw)
        journal: list[tuple[int, int, object]] = []
        for e in edges:
            u, v, w = edge_ids(e)
            res = insert_edge(self.graph, self.potential, u, v, w)
            if isinstance(res, Infeasible):
                self._rollback(journal, pot_snapshot, None)
                return UnsatQ(res.cycle)
            journal.append((u, v, res.insert))

        u, v, d = edge_ids(edges[0])
        dist_to_u = dijkstra(self.graph, self.potential, u, "backward").raw
        dist_from_v = dijkstra(self.graph, self.potential, v, "forward").raw

        rho = self.bounds
        rho_snapshot = array("q", rho)
        witness = _kernels.bounds_sweep(self.graph.n, dist_to_u, d, dist_from_v, rho)
        if witness >= 0:
            outcome = UnsatZ(witness, rho[witness], rho[witness ^ 1])
            self._rollback(journal, pot_snapshot, rho_snapshot)
            return outcome

        fired = []
        if self.watch:
            kept = []
            for entry in self.watch:
                if entry.constraint is not None and not (
                    sat_add3(dist_to_u[entry.x], d, dist_from_v[entry.y]) > entry.d
                    and sat_add3(dist_to_u[entry.y ^ 1], d, dist_from_v[entry.x ^ 1]) > entry.d
                    and sat_add(rho[entry.x], rho[entry.y ^ 1]) > entry.d
                ):
                    fired.append(entry.tag)
                else:
                    kept.append(entry)
            self.watch = kept
        self.asserted.append(cn)
        return Sat(tuple(fired))

    def _rollback(self, journal, pot_snapshot, rho_snapshot) -> None:
        for u, v, ins in reversed(journal):
            if isinstance(ins, Added):
                self.graph.pop_last_edge()
            elif isinstance(ins, Tightened):
                self.graph.set_weight(u, v, ins.old_weight)
        self.potential.raw[:] = pot_snapshot
        if rho_snapshot is not None:
            self.bounds[:] = rho_snapshot

    # -- implication ------------------------------------------------------

    def register_watch(self, c: UtvpiConstraint, tag) -> AlreadyImplied | Watching:
        """Watch a constraint; it must not already be implied to enter.

        Returns ``AlreadyImplied`` if the current state entails it, else
        ``Watching``; the tag is reported by the first ``add_constraint``
        whose assertion makes it implied.
        """
        outcome = normalize(c)
        if isinstance(outcome, Tautology):
            return ALREADY_IMPLIED
        if isinstance(outcome, Contradiction):
            self.watch.append(_WatchEntry(None, tag, -1, -1, 0))
            return WATCHING
        cn = outcome.constraint
        top = cn.x.index if cn.y is None else cn.y.index
        self.ensure_vars(top + 1)
        if self._implied_now(cn):
            return ALREADY_IMPLIED
        x, y, dp = edge_ids(edges_of(cn)[0])
        self.watch.append(_WatchEntry(cn, tag, x, y, dp))
        return WATCHING

    def check_implied(self, c: UtvpiConstraint) -> bool:
        """Does the asserted set entail ``c``? (state must be satisfiable)"""
        outcome = normalize(c)
        if isinstance(outcome, Tautology):
            return True
        if isinstance(outcome, Contradiction):
            return False
        cn = outcome.constraint
        top = cn.x.index if cn.y is None else cn.y.index
        self.ensure_vars(top + 1)
        return self._implied_now(cn)

    def _implied_now(self, cn: UtvpiConstraint) -> bool:
        # One representative edge suffices: its counter-edge is witnessed by
        # mirrored paths of equal weight.
        x, y, dp = edge_ids(edges_of(cn)[0])
        if sat_add(self.bounds[x], self.bounds[y ^ 1]) <= dp:
            return True
        dist = dijkstra(self.graph, self.potential, x, "forward")
        return dist.raw[y] <= dp

    # -- solutions ----------------------------------------------------------

    def solution(self) -> list[int]:
        """An integer assignment satisfying every asserted constraint.

        Fixes variables one at a time to an endpoint of their derived
        range (0 when unbounded), re-propagating through a cloned state;
        every chosen endpoint is attainable, so each fix keeps the system
        satisfiable.
        """
        worker = self.clone()
        values = []
        for i in range(worker.n_vars):
            up = worker.bounds[2 * i + 1]
            lo = worker.bounds[2 * i]
            if up != INF:
                val = up
            elif lo != INF:
                val = -lo
            else:
                val = 0
            var = Var(f"_v{i}", i)
            for cc in (
                UtvpiConstraint(1, var, 0, None, val),
                UtvpiConstraint(-1, var, 0, None, -val),
            ):
                res = worker.add_constraint(cc)
                if not isinstance(res, Sat):
                    raise RuntimeError(
                        f"solution extraction hit an infeasible fix at variable {i}"
                    )
            values.append(val)
        return values

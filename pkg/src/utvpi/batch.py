"""Whole-set UTVPI satisfiability over the integers.

Builds the difference graph for the full constraint set, decides rational
feasibility by negative-cycle detection, then decides integer feasibility by
the parity of potential differences inside tight strongly connected
components: a vertex whose counterpart sits in the same tight component at
odd potential distance forces a half-integral value.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .constraints import UtvpiConstraint, edges_of
from .graph import ConstraintGraph, Feasible, NegativeCycle, Potential, bellman_ford


@dataclass(frozen=True)
class Sat:
    potential: Potential


@dataclass(frozen=True)
class UnsatQ:
    """Rationally infeasible: witness negative cycle ``(u, v, w)`` edges."""

    cycle: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class UnsatZ:
    """Rationally feasible but integer-infeasible: witness vertex id."""

    vertex: int


SatVerdict = Sat | UnsatQ | UnsatZ


def build_graph(constraints, n_vars: int | None = None) -> ConstraintGraph:
    """Difference graph of normalized constraints (min weight per edge pair)."""
    cs = list(constraints)
    if n_vars is None:
        n_vars = 0
        for c in cs:
            for var in (c.x, c.y):
                if var is not None and var.index + 1 > n_vars:
                    n_vars = var.index + 1
    g = ConstraintGraph(2 * n_vars)
    for c in cs:
        for e in edges_of(c):
            g.insert_or_tighten(e.src.vid, e.dst.vid, e.weight)
    return g


def batch_check(constraints, n_vars: int | None = None) -> SatVerdict:
    """Decide integer satisfiability of a normalized constraint set.

    Verdicts: ``Sat`` with a valid potential, ``UnsatQ`` with a negative
    cycle, or ``UnsatZ`` with the lowest-id witness vertex whose counterpart
    shares a tight component at odd potential distance.
    """
    cs = list(constraints)
    g = build_graph(cs, n_vars)
    res = bellman_ford(g)
    if isinstance(res, NegativeCycle):
        return UnsatQ(res.edges)
    pot = res.potential
    witness = _kernels.z_witness(g.n, g.out_head, g.out_next, g.eto, g.ewt, pot.raw)
    if witness >= 0:
        return UnsatZ(witness)
    return Sat(pot)

"""Incremental difference-edge insertion with potential repair.

Given a graph with a valid potential, inserting one edge either keeps the
potential valid after lowering a (usually small) set of vertices, or closes
a negative cycle.  In the latter case the graph and the potential are
restored to their pre-call state so the caller keeps a usable solver state.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .constraints import DiffEdge
from .graph import Added, ConstraintGraph, Dominated, InsertOutcome, Potential, edge_ids


@dataclass(frozen=True)
class Repaired:
    """Edge incorporated; the potential passed in is valid again."""

    insert: InsertOutcome


@dataclass(frozen=True)
class Infeasible:
    """The edge would close a negative cycle; state was rolled back."""

    cycle: tuple[tuple[int, int, int], ...]

    @property
    def total_weight(self) -> int:
        return sum(w for _, _, w in self.cycle)


def insert_edge(g: ConstraintGraph, pot: Potential, u, v=None, w=None) -> Repaired | Infeasible:
    """Insert edge ``(u, v, w)`` (or a DiffEdge) and repair the potential.

    On ``Repaired`` the graph contains the edge and ``pot`` was updated in
    place; only vertices whose potential strictly decreases are touched.  A
    dominated insertion leaves both untouched.  On ``Infeasible`` neither
    the graph nor the potential changed and the witness cycle runs through
    the rejected edge.
    """
    if isinstance(u, DiffEdge):
        u, v, w = edge_ids(u)
    ins = g.insert_or_tighten(u, v, w)
    if isinstance(ins, Dominated):
        return Repaired(ins)
    chain = _kernels.repair(g.n, g.out_head, g.out_next, g.eto, g.ewt,
                            pot.raw, u, v, w)
    if chain is None:
        return Repaired(ins)
    if isinstance(ins, Added):
        g.pop_last_edge()
    else:
        g.set_weight(u, v, ins.old_weight)
    cycle = [(u, v, w)]
    for a, b in zip(chain, chain[1:]):
        cycle.append((a, b, g.weight(a, b)))
    return Infeasible(tuple(cycle))

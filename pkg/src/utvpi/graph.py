"""Weighted difference-constraint graph, potentials, and path queries.

The graph stores at most one edge per ordered vertex pair, keeping the
minimum weight ever inserted (shortest paths and cycle detection only ever
need the cheapest parallel edge).  Adjacency lives in flat ``array('q')``
linked lists shared with the kernels, both forward and reversed.

Unreachable distances and absent bounds use the sentinel ``INF``; all
arithmetic touching it must go through the saturating helpers here, never
plain ``+``.  Public accessors translate the sentinel to ``math.inf``.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass

from . import _kernels
from ._kernels import INF
from .constraints import DiffEdge, SignedVertex

_MAX_WEIGHT = 1 << 41  # doubled constraint bound cap


def sat_add(a: int, b: int) -> int:
    """Saturating addition: any INF operand makes the sum INF."""
    if a == INF or b == INF:
        return INF
    return a + b


def sat_add3(a: int, b: int, c: int) -> int:
    if a == INF or b == INF or c == INF:
        return INF
    return a + b + c


def half_floor(a: int) -> int:
    """Floor halving toward minus infinity; INF stays INF."""
    if a == INF:
        return INF
    return a // 2


def as_public(value: int):
    """Translate the INF sentinel to ``math.inf`` for API consumers."""
    return math.inf if value == INF else value


@dataclass(frozen=True)
class Added:
    pass


@dataclass(frozen=True)
class Tightened:
    old_weight: int


@dataclass(frozen=True)
class Dominated:
    pass


InsertOutcome = Added | Tightened | Dominated

ADDED = Added()
DOMINATED = Dominated()


class Potential:
    """Vertex labeling with ``pot[u] + w - pot[v] >= 0`` on every edge."""

    __slots__ = ("raw",)

    def __init__(self, raw: array):
        self.raw = raw

    @classmethod
    def zeros(cls, n: int) -> "Potential":
        return cls(array("q", bytes(8 * n)))

    def __len__(self) -> int:
        return len(self.raw)

    def __getitem__(self, vid: int) -> int:
        return self.raw[vid]

    def copy(self) -> "Potential":
        return Potential(array("q", self.raw))

    def grow(self, n: int) -> None:
        while len(self.raw) < n:
            self.raw.append(0)

    def valid_for(self, g: "ConstraintGraph") -> bool:
        pot = self.raw
        return all(pot[u] + w - pot[v] >= 0 for u, v, w in g.edges())


class DistanceMap:
    """Shortest-path distances from/to a source; ``math.inf`` if unreachable."""

    __slots__ = ("raw", "source")

    def __init__(self, raw: array, source: int):
        self.raw = raw
        self.source = source

    def __len__(self) -> int:
        return len(self.raw)

    def __getitem__(self, vid: int):
        return as_public(self.raw[vid])

    def finite(self, vid: int) -> bool:
        return self.raw[vid] != INF


class ConstraintGraph:
    """Directed graph over the signed vertices of ``n_vars`` variables."""

    __slots__ = ("n", "out_head", "out_next", "in_head", "in_next",
                 "efrom", "eto", "ewt", "_pair")

    def __init__(self, n_vertices: int):
        if n_vertices % 2:
            raise ValueError("vertex count must be even (two per variable)")
        self.n = n_vertices
        self.out_head = array("q", [-1]) * n_vertices
        self.in_head = array("q", [-1]) * n_vertices
        self.out_next = array("q")
        self.in_next = array("q")
        self.efrom = array("q")
        self.eto = array("q")
        self.ewt = array("q")
        self._pair: dict[tuple[int, int], int] = {}

    @property
    def num_edges(self) -> int:
        return len(self.ewt)

    def copy(self) -> "ConstraintGraph":
        other = ConstraintGraph.__new__(ConstraintGraph)
        other.n = self.n
        other.out_head = array("q", self.out_head)
        other.in_head = array("q", self.in_head)
        other.out_next = array("q", self.out_next)
        other.in_next = array("q", self.in_next)
        other.efrom = array("q", self.efrom)
        other.eto = array("q", self.eto)
        other.ewt = array("q", self.ewt)
        other._pair = dict(self._pair)
        return other

    def grow(self, n_vertices: int) -> None:
        while self.n < n_vertices:
            self.out_head.append(-1)
            self.in_head.append(-1)
            self.n += 1

    def weight(self, u: int, v: int) -> int | None:
        eid = self._pair.get((u, v))
        return None if eid is None else self.ewt[eid]

    def edges(self):
        """Iterate ``(u, v, w)`` over all stored edges."""
        efrom, eto, ewt = self.efrom, self.eto, self.ewt
        for eid in range(len(ewt)):
            yield efrom[eid], eto[eid], ewt[eid]

    def insert_or_tighten(self, u: int, v: int, w: int) -> InsertOutcome:
        """Insert edge ``(u, v, w)``, keeping the minimum weight per pair."""
        if u == v:
            raise ValueError("self-loops cannot occur in a constraint graph")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError("vertex id out of range")
        if abs(w) > _MAX_WEIGHT:
            raise ValueError(f"edge weight {w} exceeds the supported magnitude")
        eid = self._pair.get((u, v))
        if eid is not None:
            old = self.ewt[eid]
            if old <= w:
                return DOMINATED
            self.ewt[eid] = w
            return Tightened(old)
        eid = len(self.ewt)
        self.efrom.append(u)
        self.eto.append(v)
        self.ewt.append(w)
        self.out_next.append(self.out_head[u])
        self.out_head[u] = eid
        self.in_next.append(self.in_head[v])
        self.in_head[v] = eid
        self._pair[(u, v)] = eid
        return ADDED

    def pop_last_edge(self) -> None:
        """Remove the most recently added edge (rollback support)."""
        eid = len(self.ewt) - 1
        u = self.efrom[eid]
        v = self.eto[eid]
        if self.out_head[u] != eid or self.in_head[v] != eid:
            raise AssertionError("can only pop the newest edge")
        self.out_head[u] = self.out_next[eid]
        self.in_head[v] = self.in_next[eid]
        for arr in (self.efrom, self.eto, self.ewt, self.out_next, self.in_next):
            arr.pop()
        del self._pair[(u, v)]

    def set_weight(self, u: int, v: int, w: int) -> None:
        """Overwrite a stored weight (rollback of a tightening)."""
        self.ewt[self._pair[(u, v)]] = w

    def dump(self, names=None) -> str:
        """Debug text form, one ``u -> v : w`` line per edge."""
        def fmt(vid):
            if names is not None:
                return f"{names[vid >> 1]}{'+' if vid % 2 == 0 else '-'}"
            return str(vid)

        return "\n".join(f"{fmt(u)} -> {fmt(v)} : {w}" for u, v, w in self.edges())


@dataclass(frozen=True)
class Feasible:
    """No negative cycle; carries a valid potential."""

    potential: Potential


@dataclass(frozen=True)
class NegativeCycle:
    """Witness edges ``(u, v, w)`` forming a cycle of negative total weight."""

    edges: tuple[tuple[int, int, int], ...]

    @property
    def total_weight(self) -> int:
        return sum(w for _, _, w in self.edges)


def bellman_ford(g: ConstraintGraph) -> Feasible | NegativeCycle:
    """Negative-cycle detection; on success yields a potential for all of V.

    Conceptually runs from a virtual super-source at distance 0 everywhere,
    so vertices in every component receive a potential.
    """
    dist, cycle = _kernels.bellman_ford(g.n, g.out_head, g.out_next, g.eto, g.ewt)
    if dist is not None:
        return Feasible(Potential(dist))
    return NegativeCycle(_close_cycle(g, cycle))


def _close_cycle(g: ConstraintGraph, verts) -> tuple[tuple[int, int, int], ...]:
    edges = []
    for i, u in enumerate(verts):
        v = verts[(i + 1) % len(verts)]
        edges.append((u, v, g.weight(u, v)))
    return tuple(edges)


def _vid(v) -> int:
    return v.vid if isinstance(v, SignedVertex) else v


def dijkstra(g: ConstraintGraph, pot: Potential, src, direction: str = "forward") -> DistanceMap:
    """Shortest paths in original weights via the reduced-cost graph.

    ``direction='forward'`` maps v to the distance src->v; ``'backward'``
    maps v to the distance v->src (runs on the reversed adjacency).
    Requires ``pot`` valid for ``g``; a negative reduced cost raises.
    """
    src = _vid(src)
    if direction == "forward":
        raw = _kernels.dijkstra(g.n, g.out_head, g.out_next, g.eto, g.ewt,
                                pot.raw, src, False)
    elif direction == "backward":
        raw = _kernels.dijkstra(g.n, g.in_head, g.in_next, g.efrom, g.ewt,
                                pot.raw, src, True)
    else:
        raise ValueError("direction must be 'forward' or 'backward'")
    return DistanceMap(raw, src)


def tight_edges(g: ConstraintGraph, pot: Potential) -> list[tuple[int, int, int]]:
    """Edges with zero reduced cost under ``pot``."""
    p = pot.raw
    return [(u, v, w) for u, v, w in g.edges() if p[u] + w == p[v]]


def scc(n_vertices: int, edges) -> list[int]:
    """Component id per vertex for the subgraph given by ``edges``.

    ``edges`` yields ``(u, v)`` or ``(u, v, w)`` tuples; ids are dense and
    two vertices share one iff they are mutually reachable.
    """
    us = array("q")
    vs = array("q")
    for e in edges:
        us.append(e[0])
        vs.append(e[1])
    return list(_kernels.tarjan_scc(n_vertices, us, vs))


def edge_ids(e: DiffEdge) -> tuple[int, int, int]:
    """Unpack a DiffEdge into kernel-level ``(u, v, w)``."""
    return e.src.vid, e.dst.vid, e.weight


def vertex_label(vid: int, names=None) -> str:
    """Human-readable signed-vertex label, e.g. ``x+`` for variable x."""
    base = names[vid >> 1] if names is not None else f"v{vid >> 1}"
    return f"{base}{'+' if vid % 2 == 0 else '-'}"

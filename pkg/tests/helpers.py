"""Shared test utilities: instance builders, oracles, random corpora."""

from __future__ import annotations

import math
import random

import numpy as np

from utvpi import INF, Solver, UtvpiConstraint, Var, VarTable, normalize
from utvpi.constraints import Normal, Tautology, Contradiction, parse_constraint


def mkvars(n: int) -> list[Var]:
    return [Var(f"x{i}", i) for i in range(n)]


def c1(a: int, x: Var, d: int) -> UtvpiConstraint:
    return UtvpiConstraint(a, x, 0, None, d)


def c2(a: int, x: Var, b: int, y: Var, d: int) -> UtvpiConstraint:
    return UtvpiConstraint(a, x, b, y, d)


def parse_all(lines, table: VarTable | None = None):
    table = table if table is not None else VarTable()
    return [parse_constraint(line, table) for line in lines], table


def worked_instance():
    """The running three-constraint satisfiable example over x, y, z."""
    cs, table = parse_all(["+x -y <= 2", "+x +y <= -1", "-x -z <= -4"])
    return cs, table


def worked_instance_extended():
    """The four-constraint extension that is Q-feasible but Z-infeasible."""
    cs, table = parse_all(
        ["+x -y <= 2", "+x +y <= -1", "-x -z <= -4", "-x +z <= 3"]
    )
    return cs, table


def normalized(constraints):
    """Normalize, dropping tautologies; fails the test on contradictions."""
    out = []
    for c in constraints:
        res = normalize(c)
        if isinstance(res, Normal):
            out.append(res.constraint)
        elif isinstance(res, Contradiction):
            raise AssertionError(f"unexpected contradiction in test data: {c}")
    return out


def solver_from(constraints, n_vars: int | None = None) -> Solver:
    cs = normalized(constraints)
    if n_vars is None:
        n_vars = max(
            (v.index + 1 for c in cs for v in (c.x, c.y) if v is not None),
            default=0,
        )
    s = Solver(n_vars)
    for c in cs:
        s.add_constraint(c)
    return s


def evaluate(c: UtvpiConstraint, values) -> bool:
    """Direct substitution of an assignment into a constraint."""
    total = 0
    if c.a != 0:
        total += c.a * values[c.x.index]
    if c.b != 0:
        total += c.b * values[c.y.index]
    return total <= c.d


# -- random corpora ----------------------------------------------------------


def rand_instance(rng: random.Random, nmax=8, mmax=30, lo=-10, hi=10,
                  single_p=0.3):
    """Mixed one-/two-variable constraints with bounds in [lo, hi]."""
    n = rng.randint(2, nmax)
    m = rng.randint(1, mmax)
    vs = mkvars(n)
    cs = []
    for _ in range(m):
        if rng.random() < single_p:
            cs.append(c1(rng.choice((1, -1)), vs[rng.randrange(n)],
                         rng.randint(lo, hi)))
        else:
            i, j = rng.sample(range(n), 2)
            cs.append(c2(rng.choice((1, -1)), vs[i], rng.choice((1, -1)),
                         vs[j], rng.randint(lo, hi)))
    return n, cs


def pinned_instance(rng: random.Random, odd: bool):
    """A random base plus two fresh variables pinned to a (half-)integral point.

    Fixing x+y = a and x-y = b forces 2x = a+b: an odd sum is rationally
    fine but integer-infeasible, which makes these the reliable source of
    integer-only conflicts in the corpora.
    """
    base_n = rng.randint(2, 6)
    n = base_n + 2
    _, base = rand_instance(rng, nmax=base_n, mmax=24, lo=-3, hi=8)
    vs = mkvars(n)
    x, y = vs[n - 2], vs[n - 1]
    a = rng.randint(-5, 5)
    b = rng.randint(-5, 4)
    if (a + b) % 2 != (1 if odd else 0):
        b += 1
    pins = [
        c2(1, x, 1, y, a),
        c2(-1, x, -1, y, -a),
        c2(1, x, -1, y, b),
        c2(-1, x, 1, y, -b),
    ]
    cs = base + pins
    rng.shuffle(cs)
    return n, cs


def criterion_corpus(seed: int, total: int = 2000):
    """Seeded mixed corpus of (n, constraints) pairs covering all verdicts."""
    rng = random.Random(seed)
    out = []
    specs = [
        (total * 2 // 5, dict(nmax=8, mmax=30, lo=-10, hi=10, single_p=0.3)),
        (total // 5, dict(nmax=8, mmax=30, lo=-1, hi=3, single_p=0.3)),
        (total // 5, dict(nmax=5, mmax=15, lo=-1, hi=1, single_p=0.4)),
    ]
    for count, kw in specs:
        for _ in range(count):
            out.append(rand_instance(rng, **kw))
    while len(out) < total:
        out.append(pinned_instance(rng, odd=rng.random() < 0.6))
    return out


def rand_query(rng: random.Random, n: int, lo=-10, hi=10) -> UtvpiConstraint:
    vs = mkvars(n)
    roll = rng.random()
    if roll < 0.1:
        return UtvpiConstraint(0, None, 0, None, rng.randint(lo, hi))
    if roll < 0.4:
        return c1(rng.choice((1, -1)), vs[rng.randrange(n)], rng.randint(lo, hi))
    i, j = rng.sample(range(n), 2) if n >= 2 else (0, 0)
    if i == j:
        return c1(rng.choice((1, -1)), vs[i], rng.randint(lo, hi))
    return c2(rng.choice((1, -1)), vs[i], rng.choice((1, -1)), vs[j],
              rng.randint(lo, hi))


# -- independent oracles -----------------------------------------------------


def wsp_matrix(g) -> np.ndarray:
    """All-pairs shortest paths by min-plus Floyd-Warshall (independent of
    the potential/Dijkstra machinery)."""
    n = g.n
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0.0)
    for u, v, w in g.edges():
        if w < dist[u, v]:
            dist[u, v] = w
    for k in range(n):
        dist = np.minimum(dist, dist[:, k : k + 1] + dist[k : k + 1, :])
    return dist


def assert_valid_potential(g, pot):
    for u, v, w in g.edges():
        assert pot[u] + w - pot[v] >= 0, f"edge ({u},{v},{w}) violates the potential"


def assert_bounds_match_paths(solver: Solver):
    """Recompute every bound from scratch and compare with the solver's."""
    dist = wsp_matrix(solver.graph)
    for u in range(solver.graph.n):
        sp = dist[u, u ^ 1]
        expected = math.inf if math.isinf(sp) else math.floor(sp / 2)
        got = solver.bound_of(u)
        assert got == expected, f"bound mismatch at vertex {u}: {got} != {expected}"

"""Brute-force transitive and tightened closure of UTVPI constraint sets.

Ground-truth oracle for satisfiability and implication, and the dense
baseline in benchmarks.  Constraints are stored as canonical literal keys
mapped to their minimal bound:

- ``()`` for the degenerate ``0 <= d``
- ``((s, i),)`` for a single literal ``s * x_i``
- ``((s1, i1), (s2, i2))`` for two literals, sorted; equal entries encode
  the derivable form ``s*x + s*x <= d``

Two rules close the set: composing two constraints that share a variable
with opposite signs (bounds add), and tightening a same-literal pair to a
single literal at half the bound, rounded down.  A derived constraint
enters the worklist only when it strictly lowers its key's bound, which
keeps the fixpoint polynomial; unbounded descent through a negative cycle
is cut off by a floor no satisfiable system can cross.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .constraints import Contradiction, Normal, Tautology, UtvpiConstraint, normalize

Literal = tuple[int, int]  # (sign, variable index)
Key = tuple[Literal, ...]


@dataclass
class ClosureSet:
    """Minimal bound per canonical constraint key, plus feasibility flag."""

    bounds: dict[Key, int] = field(default_factory=dict)
    contradiction: bool = False

    def bound(self, key: Key) -> int | None:
        return self.bounds.get(key)

    def single_bound(self, sign: int, index: int) -> int | None:
        """Tightest derived ``sign * x_index <= d``, or None if unbounded."""
        return self.bounds.get(((sign, index),))

    def __contains__(self, key: Key) -> bool:
        return key in self.bounds

    def __len__(self) -> int:
        return len(self.bounds)


def constraint_key(c: UtvpiConstraint) -> Key:
    """Canonical key of a normalized constraint."""
    lits = []
    if c.a != 0:
        lits.append((c.a, c.x.index))
    if c.b != 0:
        lits.append((c.b, c.y.index))
    return _key_of(lits)


def _key_of(lits: list[Literal]) -> Key:
    if len(lits) == 2:
        (s1, i1), (s2, i2) = lits
        if i1 == i2 and s1 != s2:
            return ()  # x - x cancels
    return tuple(sorted(lits))


class _Stop(Exception):
    pass


def _close(constraints, tighten: bool) -> ClosureSet:
    result = ClosureSet()
    bounds = result.bounds
    by_literal: dict[Literal, set[Key]] = {}
    queue: deque[Key] = deque()
    queued: set[Key] = set()

    total = 0
    items: list[tuple[Key, int]] = []
    for c in constraints:
        outcome = normalize(c)
        if isinstance(outcome, Tautology):
            continue
        if isinstance(outcome, Contradiction):
            items.append(((), c.d))
            total += abs(c.d)
            continue
        cn = outcome.constraint
        items.append((constraint_key(cn), cn.d))
        total += abs(cn.d)
    # No satisfiable system derives a bound this low (shortest derivations
    # are simple-path shaped); crossing it proves an infeasible cycle.
    floor_limit = -(2 * total + 4)

    def offer(key: Key, d: int) -> None:
        old = bounds.get(key)
        if old is not None and old <= d:
            return
        if key == () and d < 0:
            bounds[key] = d
            result.contradiction = True
            raise _Stop
        if d < floor_limit:
            bounds[key] = d
            result.contradiction = True
            raise _Stop
        if old is None:
            for lit in set(key):
                by_literal.setdefault(lit, set()).add(key)
        bounds[key] = d
        if key not in queued:
            queued.add(key)
            queue.append(key)

    try:
        for key, d in items:
            offer(key, d)
        while queue:
            key = queue.popleft()
            queued.discard(key)
            d1 = bounds[key]
            if tighten and len(key) == 2 and key[0] == key[1]:
                offer((key[0],), d1 // 2)
            for lit in set(key):
                sign, idx = lit
                partners = by_literal.get((-sign, idx))
                if not partners:
                    continue
                for pkey in list(partners):
                    d2 = bounds[pkey]
                    residual = list(key)
                    residual.remove(lit)
                    rest = list(pkey)
                    rest.remove((-sign, idx))
                    offer(_key_of(residual + rest), d1 + d2)
    except _Stop:
        pass
    return result


def tc(constraints) -> ClosureSet:
    """Transitive closure only; ``contradiction`` iff rationally infeasible."""
    return _close(constraints, tighten=False)


def ttc(constraints) -> ClosureSet:
    """Tightened transitive closure; ``contradiction`` iff integer-infeasible."""
    return _close(constraints, tighten=True)


def tighten_once(s: ClosureSet) -> dict[Key, int]:
    """Apply only the tightening rule to a fixpoint (no further composition).

    Returns the bounds extended with ``(lit,) <= floor(d/2)`` for every
    same-literal pair key; single-literal results cannot re-trigger the
    rule, so one pass is the fixpoint.
    """
    out = dict(s.bounds)
    for key, d in s.bounds.items():
        if len(key) == 2 and key[0] == key[1]:
            single = (key[0],)
            half = d // 2
            if single not in out or out[single] > half:
                out[single] = half
    return out


def closure_implies(s: ClosureSet, c: UtvpiConstraint) -> bool:
    """Entailment test against a satisfiable tightened fixpoint.

    A two-literal constraint is implied by a matching key at a bound no
    larger, or by single-literal bounds on both of its halves summing to no
    more than its bound; single literals need only their own key.
    """
    outcome = normalize(c)
    if isinstance(outcome, Tautology):
        return True
    if isinstance(outcome, Contradiction):
        return False
    cn = outcome.constraint
    key = constraint_key(cn)
    direct = s.bounds.get(key)
    if direct is not None and direct <= cn.d:
        return True
    if len(key) == 2:
        b1 = s.bounds.get((key[0],))
        b2 = s.bounds.get((key[1],))
        if b1 is not None and b2 is not None and b1 + b2 <= cn.d:
            return True
    return False


def classify(constraints) -> str:
    """Oracle verdict class: 'SAT', 'UNSAT-Q', or 'UNSAT-Z'."""
    if tc(constraints).contradiction:
        return "UNSAT-Q"
    if ttc(constraints).contradiction:
        return "UNSAT-Z"
    return "SAT"

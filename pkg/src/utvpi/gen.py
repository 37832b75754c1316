"""Seeded random instance generation.

Instances contain only two-variable constraints, every variable appears in
at least one of them, and no unordered variable pair repeats a coefficient
pattern, leaving ``4 * n*(n-1)/2`` distinct slots.  Bounds are drawn
uniformly from ``[-15, 100]``, which makes roughly one bound in eight
negative.  Output is deterministic per seed, byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .constraints import VarTable, parse_lines

# a * x_i + b * x_j with i < j
PATTERNS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


@dataclass(frozen=True)
class GenConfig:
    n: int
    m: int
    seed: int
    lo: int = -15
    hi: int = 100

    def capacity(self) -> int:
        return 4 * self.n * (self.n - 1) // 2

    def validate(self) -> None:
        if self.n < 2:
            raise ValueError("need at least two variables for two-variable constraints")
        if self.m < 1:
            raise ValueError("need at least one constraint")
        if self.m > self.capacity():
            raise ValueError(
                f"m={self.m} exceeds the {self.capacity()} distinct "
                f"(pair, pattern) slots of n={self.n}"
            )
        if self.m < (self.n + 1) // 2:
            raise ValueError(
                f"m={self.m} constraints cannot cover all n={self.n} variables"
            )
        if self.lo > self.hi:
            raise ValueError("empty bound range")


def generate_tuples(cfg: GenConfig) -> list[tuple[int, int, int, int, int]]:
    """Constraint tuples ``(a, i, b, j, d)`` with ``i < j``; deterministic."""
    cfg.validate()
    rng = random.Random(cfg.seed)
    used: set[tuple[int, int, int]] = set()  # (i, j, pattern index)
    out: list[tuple[int, int, int, int, int]] = []

    def emit(i: int, j: int, pat: int) -> None:
        used.add((i, j, pat))
        a, b = PATTERNS[pat]
        out.append((a, i, b, j, rng.randint(cfg.lo, cfg.hi)))

    # coverage pass: pair up a shuffled variable order
    order = list(range(cfg.n))
    rng.shuffle(order)
    for k in range(0, cfg.n - 1, 2):
        i, j = sorted((order[k], order[k + 1]))
        emit(i, j, rng.randrange(4))
    if cfg.n % 2:
        mate = order[rng.randrange(cfg.n - 1)]
        i, j = sorted((order[-1], mate))
        emit(i, j, rng.randrange(4))

    remaining = cfg.m - len(out)
    if remaining < 0:
        raise ValueError(f"m={cfg.m} below the {len(out)} constraints needed for coverage")
    if cfg.m > cfg.capacity() // 2:
        # dense request: enumerate the free slots and sample without rejection
        free = [
            (i, j, p)
            for i in range(cfg.n)
            for j in range(i + 1, cfg.n)
            for p in range(4)
            if (i, j, p) not in used
        ]
        for i, j, p in rng.sample(free, remaining):
            emit(i, j, p)
    else:
        while remaining > 0:
            i = rng.randrange(cfg.n)
            j = rng.randrange(cfg.n)
            if i == j:
                continue
            if i > j:
                i, j = j, i
            p = rng.randrange(4)
            if (i, j, p) in used:
                continue
            emit(i, j, p)
            remaining -= 1
    return out


def render(tuples) -> str:
    """One constraint per line in the solver's file grammar."""
    lines = []
    for a, i, b, j, d in tuples:
        sa = "+" if a > 0 else "-"
        sb = "+" if b > 0 else "-"
        lines.append(f"{sa}x{i} {sb}x{j} <= {d}")
    return "\n".join(lines) + "\n"


def generate(cfg: GenConfig) -> str:
    return render(generate_tuples(cfg))


def audit(cfg: GenConfig, text: str) -> None:
    """Verify a generated file against its own configuration invariants."""
    table = VarTable()
    parsed = list(parse_lines(text.splitlines(), table))
    if len(parsed) != cfg.m:
        raise AssertionError(f"expected {cfg.m} constraints, found {len(parsed)}")
    seen_pairs = set()
    covered = set()
    for _, c in parsed:
        if c.literal_count != 2:
            raise AssertionError(f"non-two-variable constraint generated: {c}")
        if not (cfg.lo <= c.d <= cfg.hi):
            raise AssertionError(f"bound out of range: {c}")
        i, j = int(c.x.name[1:]), int(c.y.name[1:])  # generated names are x<k>
        covered.update((i, j))
        slot = (min(i, j), max(i, j), (c.a, c.b) if i < j else (c.b, c.a))
        if slot in seen_pairs:
            raise AssertionError(f"duplicate pair/pattern slot: {c}")
        seen_pairs.add(slot)
    if covered != set(range(cfg.n)):
        raise AssertionError(
            f"variable coverage violated: {len(covered)} of {cfg.n} present"
        )

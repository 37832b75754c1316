"""UTVPI constraint representation, parsing, and graph translation.

A UTVPI constraint is ``a*x + b*y <= d`` with coefficients in {-1, 0, +1}
and an integer bound.  Each variable ``x`` owns two graph vertices: one for
``+x`` and one for ``-x``.  A two-variable constraint translates to two
difference edges, a single-variable one to a single edge of doubled weight.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

# Bounds are capped so doubled weights summed over any realistic path fit a
# signed 64-bit integer with safety margin; arithmetic never wraps.
MAX_BOUND = 1 << 40

PLUS = 1
MINUS = -1


class ParseError(ValueError):
    """Raised for text that does not conform to the constraint grammar."""


@dataclass(frozen=True)
class Var:
    """A constraint variable: interned name plus dense index."""

    name: str
    index: int


class VarTable:
    """Interns variable names, assigning contiguous indices in first-seen order."""

    def __init__(self):
        self._by_name: dict[str, Var] = {}
        self._vars: list[Var] = []

    def intern(self, name: str) -> Var:
        var = self._by_name.get(name)
        if var is None:
            var = Var(name, len(self._vars))
            self._by_name[name] = var
            self._vars.append(var)
        return var

    def get(self, name: str) -> Var | None:
        return self._by_name.get(name)

    def variables(self) -> tuple[Var, ...]:
        return tuple(self._vars)

    def __len__(self) -> int:
        return len(self._vars)


@dataclass(frozen=True)
class SignedVertex:
    """The graph vertex standing for +var or -var."""

    var: Var
    sign: int

    def __post_init__(self):
        if self.sign not in (PLUS, MINUS):
            raise ValueError("sign must be +1 or -1")

    def __neg__(self) -> "SignedVertex":
        return SignedVertex(self.var, -self.sign)

    @property
    def vid(self) -> int:
        """Dense vertex id; the counterpart's id is ``vid ^ 1``."""
        return 2 * self.var.index + (self.sign == MINUS)

    def __str__(self) -> str:
        return f"{self.var.name}{'+' if self.sign == PLUS else '-'}"


def plus(var: Var) -> SignedVertex:
    return SignedVertex(var, PLUS)


def minus(var: Var) -> SignedVertex:
    return SignedVertex(var, MINUS)


@dataclass(frozen=True)
class DiffEdge:
    """A weighted difference-graph edge between signed vertices."""

    src: SignedVertex
    dst: SignedVertex
    weight: int

    def __str__(self) -> str:
        return f"{self.src} -> {self.dst} : {self.weight}"


@dataclass(frozen=True)
class UtvpiConstraint:
    """``a*x + b*y <= d``; a zero coefficient leaves its variable slot None.

    Construction admits raw as-parsed forms (including ``x + x <= d``);
    :func:`normalize` produces the canonical form the solver modules expect:
    distinct variables ordered by index, or a single literal in the first
    slot, with same-variable inputs rewritten or resolved.
    """

    a: int
    x: Var | None
    b: int
    y: Var | None
    d: int

    def __post_init__(self):
        if self.a not in (-1, 0, 1) or self.b not in (-1, 0, 1):
            raise ValueError("coefficients must be in {-1, 0, 1}")
        if (self.a == 0) != (self.x is None) or (self.b == 0) != (self.y is None):
            raise ValueError("zero coefficient requires an empty variable slot")
        if self.a == 0 and self.b != 0:
            raise ValueError("a single literal must occupy the first slot")
        if abs(self.d) > MAX_BOUND:
            raise ValueError(f"bound {self.d} exceeds the supported magnitude {MAX_BOUND}")

    @property
    def literal_count(self) -> int:
        return (self.a != 0) + (self.b != 0)

    def __str__(self) -> str:
        parts = []
        if self.a != 0:
            parts.append(f"{'+' if self.a > 0 else '-'}{self.x.name}")
        if self.b != 0:
            parts.append(f"{'+' if self.b > 0 else '-'}{self.y.name}")
        parts.append(f"<= {self.d}")
        return " ".join(parts)


@dataclass(frozen=True)
class Normal:
    """Normalization kept the constraint (possibly rewritten)."""

    constraint: UtvpiConstraint


@dataclass(frozen=True)
class Tautology:
    """The input holds under every assignment."""


@dataclass(frozen=True)
class Contradiction:
    """The input holds under no assignment."""


NormalizeOutcome = Normal | Tautology | Contradiction

TAUTOLOGY = Tautology()
CONTRADICTION = Contradiction()


def normalize(c: UtvpiConstraint) -> NormalizeOutcome:
    """Resolve trivial and same-variable forms and order the literals.

    - ``0 <= d``: tautology when d >= 0, otherwise contradiction
    - ``a*x + a*x <= d``: tightened to the single literal ``a*x <= floor(d/2)``
    - ``x - x <= d``: tautology or contradiction by the sign of d
    - two distinct variables: literals ordered by variable index
    """
    if c.literal_count == 0:
        return TAUTOLOGY if c.d >= 0 else CONTRADICTION
    if c.literal_count == 1:
        return Normal(c)
    if c.x == c.y:
        if c.a == c.b:
            return Normal(UtvpiConstraint(c.a, c.x, 0, None, c.d // 2))
        return TAUTOLOGY if c.d >= 0 else CONTRADICTION
    if c.x.index > c.y.index:
        return Normal(UtvpiConstraint(c.b, c.y, c.a, c.x, c.d))
    return Normal(c)


_TERM_RE = re.compile(r"[+-][A-Za-z_][A-Za-z0-9_]*")
_INT_RE = re.compile(r"[+-]?\d+")
_BAD_COEFF_RE = re.compile(r"[+-]?\d+\s*\*?\s*[A-Za-z_]")


def parse_constraint(line: str, table: VarTable) -> UtvpiConstraint:
    """Parse one constraint line (without trailing comment handling).

    Grammar: up to two signed terms, ``<=``, and an integer bound, e.g.
    ``+x -y <= 2`` or ``-x <= -4`` or ``<= -1``.  Variables are interned in
    ``table``.  Raises :class:`ParseError` on malformed input.
    """
    text = line.split("#", 1)[0]
    if "<=" not in text:
        raise ParseError(f"missing '<=' in constraint: {line.strip()!r}")
    lhs, _, rhs = text.partition("<=")
    rhs = rhs.strip()
    if not _INT_RE.fullmatch(rhs):
        raise ParseError(f"missing or malformed integer bound: {rhs!r}")
    d = int(rhs)
    if abs(d) > MAX_BOUND:
        raise ParseError(f"bound {d} exceeds the supported magnitude {MAX_BOUND}")

    terms: list[tuple[int, str]] = []
    pos = 0
    lhs_stripped = lhs.strip()
    scan = lhs_stripped
    while pos < len(scan):
        if scan[pos].isspace():
            pos += 1
            continue
        m = _TERM_RE.match(scan, pos)
        if m is None:
            bad = scan[pos:].split()[0]
            if _BAD_COEFF_RE.match(scan, pos):
                raise ParseError(
                    f"coefficient outside {{-1, 0, 1}} syntax in term {bad!r}"
                    " (terms are signed variable names, e.g. '+x' or '-y')"
                )
            raise ParseError(
                f"malformed token {bad!r} (terms are signed variable names, e.g. '+x')"
            )
        token = m.group()
        terms.append((PLUS if token[0] == "+" else MINUS, token[1:]))
        pos = m.end()
    if len(terms) > 2:
        raise ParseError(f"more than two terms in constraint: {line.strip()!r}")

    if not terms:
        return UtvpiConstraint(0, None, 0, None, d)
    if len(terms) == 1:
        sign, name = terms[0]
        return UtvpiConstraint(sign, table.intern(name), 0, None, d)
    (sa, na), (sb, nb) = terms
    return UtvpiConstraint(sa, table.intern(na), sb, table.intern(nb), d)


def parse_lines(lines, table: VarTable):
    """Parse an iterable of lines, skipping blanks and comment-only lines.

    Yields ``(line_number, UtvpiConstraint)``; parse failures re-raise with
    the 1-based line number prepended.
    """
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        try:
            yield lineno, parse_constraint(stripped, table)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None


def parse_file(path, table: VarTable):
    """Parse a constraint file; returns a list of ``(line_number, constraint)``."""
    with open(path, "r", encoding="utf-8") as fh:
        return list(parse_lines(fh, table))


def edges_of(c: UtvpiConstraint) -> tuple[DiffEdge, ...]:
    """Translate a normalized constraint to its difference-graph edges.

    Two-variable constraints yield an edge and its counter-edge; a
    single-variable constraint yields one edge of doubled weight.  The first
    returned edge is the canonical representative used by the solver.
    """
    a, x, b, y, d = c.a, c.x, c.b, c.y, c.d
    if c.literal_count == 0:
        raise ValueError("cannot translate a zero-literal constraint to edges")
    if c.literal_count == 1:
        if a == PLUS:  # x <= d
            return (DiffEdge(minus(x), plus(x), 2 * d),)
        return (DiffEdge(plus(x), minus(x), 2 * d),)  # -x <= d
    if x == y:
        raise ValueError("same-variable constraint must be normalized before translation")
    if a == PLUS and b == MINUS:  # x - y <= d
        return (DiffEdge(plus(y), plus(x), d), DiffEdge(minus(x), minus(y), d))
    if a == PLUS and b == PLUS:  # x + y <= d
        return (DiffEdge(minus(y), plus(x), d), DiffEdge(minus(x), plus(y), d))
    if a == MINUS and b == MINUS:  # -x - y <= d
        return (DiffEdge(plus(y), minus(x), d), DiffEdge(plus(x), minus(y), d))
    # -x + y <= d is y - x <= d with the roles swapped
    return (DiffEdge(plus(x), plus(y), d), DiffEdge(minus(y), minus(x), d))

"""Incremental satisfiability and implication for UTVPI integer constraints.

UTVPI ("unit two variables per inequality") constraints have the form
``a*x + b*y <= d`` with ``a, b`` in ``{-1, 0, 1}`` over integer variables.
The package decides satisfiability over both the rationals and the
integers, and implication, by encoding constraints as edges of a
difference graph over signed vertices and maintaining a shortest-path
potential and per-variable bounds incrementally.

Entry points:

- :class:`Solver` — incremental assertion, implication checks, watch set
- :func:`batch_check` — whole-set satisfiability in one pass
- :func:`tc` / :func:`ttc` / :func:`closure_implies` — brute-force closure
  oracle used for verification and as a dense baseline
- :mod:`utvpi.cli` — ``utvpi check | implies | gen | bench | bench-impls``
"""

from .batch import Sat as BatchSat
from .batch import SatVerdict, UnsatQ as BatchUnsatQ, UnsatZ as BatchUnsatZ, batch_check
from .closure import ClosureSet, classify, closure_implies, tc, ttc
from .constraints import (
    CONTRADICTION,
    TAUTOLOGY,
    Contradiction,
    DiffEdge,
    Normal,
    NormalizeOutcome,
    ParseError,
    SignedVertex,
    Tautology,
    UtvpiConstraint,
    Var,
    VarTable,
    edges_of,
    minus,
    normalize,
    parse_constraint,
    parse_file,
    parse_lines,
    plus,
)
from .graph import (
    INF,
    ConstraintGraph,
    DistanceMap,
    Feasible,
    NegativeCycle,
    Potential,
    bellman_ford,
    dijkstra,
    scc,
    tight_edges,
)
from .incremental import Infeasible, Repaired, insert_edge
from .solver import (
    ALREADY_IMPLIED,
    WATCHING,
    AddOutcome,
    AlreadyImplied,
    Sat,
    Solver,
    UnsatQ,
    UnsatZ,
    Watching,
)

__version__ = "0.1.0"

__all__ = [
    "ALREADY_IMPLIED",
    "AddOutcome",
    "AlreadyImplied",
    "BatchSat",
    "BatchUnsatQ",
    "BatchUnsatZ",
    "CONTRADICTION",
    "ClosureSet",
    "ConstraintGraph",
    "Contradiction",
    "DiffEdge",
    "DistanceMap",
    "Feasible",
    "INF",
    "Infeasible",
    "NegativeCycle",
    "Normal",
    "NormalizeOutcome",
    "ParseError",
    "Potential",
    "Repaired",
    "Sat",
    "SatVerdict",
    "SignedVertex",
    "Solver",
    "TAUTOLOGY",
    "Tautology",
    "UnsatQ",
    "UnsatZ",
    "UtvpiConstraint",
    "Var",
    "VarTable",
    "WATCHING",
    "Watching",
    "batch_check",
    "bellman_ford",
    "classify",
    "closure_implies",
    "dijkstra",
    "edges_of",
    "insert_edge",
    "minus",
    "normalize",
    "parse_constraint",
    "parse_file",
    "parse_lines",
    "plus",
    "scc",
    "tc",
    "tight_edges",
    "ttc",
]

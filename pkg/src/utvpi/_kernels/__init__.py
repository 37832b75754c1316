"""Kernel selection.

The graph kernels exist twice: a compiled Cython extension
(``_speedups``) and a pure-Python fallback (``pyref``) with identical
behaviour.  The compiled one is used when it imported successfully, unless
``UTVPI_PURE_PYTHON=1`` is set.  ``use()`` switches at runtime, which the
test suite and the implementation benchmark rely on.
"""

import os

from . import pyref

try:
    from . import _speedups
except ImportError:  # extension not built; fall back silently
    _speedups = None

INF = pyref.INF

_IMPLS = {"pure": pyref}
if _speedups is not None:
    _IMPLS["compiled"] = _speedups

if _speedups is not None and os.environ.get("UTVPI_PURE_PYTHON", "0") not in ("1", "true", "yes"):
    _active = _speedups
else:
    _active = pyref


def available():
    """Names of the usable implementations ('pure' always, 'compiled' if built)."""
    return tuple(sorted(_IMPLS))


def active_name():
    return "compiled" if _active is _speedups and _speedups is not None else "pure"


def use(name):
    """Select the active implementation by name; returns the previous name."""
    global _active
    if name not in _IMPLS:
        raise ValueError(f"unknown kernel implementation {name!r}; have {available()}")
    previous = active_name()
    _active = _IMPLS[name]
    return previous


def bellman_ford(n, out_head, out_next, eto, ewt):
    return _active.bellman_ford(n, out_head, out_next, eto, ewt)


def dijkstra(n, head, nxt, other, ewt, pot, src, backward):
    return _active.dijkstra(n, head, nxt, other, ewt, pot, src, backward)


def repair(n, out_head, out_next, eto, ewt, pot, u, v, w):
    return _active.repair(n, out_head, out_next, eto, ewt, pot, u, v, w)


def bounds_sweep(n, dist_to_u, d, dist_from_v, rho):
    return _active.bounds_sweep(n, dist_to_u, d, dist_from_v, rho)


def tarjan_scc(n, us, vs):
    return _active.tarjan_scc(n, us, vs)


def z_witness(n, out_head, out_next, eto, ewt, pot):
    return _active.z_witness(n, out_head, out_next, eto, ewt, pot)

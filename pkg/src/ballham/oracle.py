"""Ground truth at desk scale: exact Hamiltonicity and graph isomorphism.

The Hamiltonicity search runs on the compiled core when the extension was
built, with the pure-Python twin as fallback; both produce identical
outcomes and node counts.  ``ballham.benchmarks`` compares their speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import _core_py
from .errors import GraphInputError
from .graph import UNREACHABLE, Graph, distances_from, is_hamiltonian_cycle

try:
    from . import _core_cy
except ImportError:
    _core_cy = None

BACKEND = "cython" if _core_cy is not None else "python"
DEFAULT_BUDGET = 10**7

FOUND = "found"
NOT_HAMILTONIAN = "not-hamiltonian"
BUDGET_EXCEEDED = "budget-exceeded"

_STATUS = {
    _core_py.FOUND: FOUND,
    _core_py.NOT_HAMILTONIAN: NOT_HAMILTONIAN,
    _core_py.BUDGET_EXCEEDED: BUDGET_EXCEEDED,
}


@dataclass(frozen=True)
class OracleResult:
    outcome: str
    cycle: tuple[int, ...] | None
    nodes_explored: int
    budget: int
    backend: str

    @property
    def found(self) -> bool:
        return self.outcome == FOUND

    def to_json_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "cycle": list(self.cycle) if self.cycle is not None else None,
            "nodes_explored": self.nodes_explored,
            "budget": self.budget,
            "backend": self.backend,
        }


def hamiltonian_exact(g: Graph, budget: int = DEFAULT_BUDGET,
                      backend: str | None = None) -> OracleResult:
    """Decide Hamiltonicity by exhaustive backtracking within ``budget`` nodes."""
    if budget < 1:
        raise GraphInputError(f"budget must be >= 1, got {budget}")
    core = _select_backend(backend)
    name = "cython" if core is _core_cy else "python"
    adj = [g.neighbors(u) for u in range(g.n)]
    status, cycle, nodes = core.hamilton_search(g.n, adj, budget)
    result = OracleResult(
        outcome=_STATUS[status],
        cycle=tuple(cycle) if cycle is not None else None,
        nodes_explored=nodes,
        budget=budget,
        backend=name,
    )
    if result.found and not is_hamiltonian_cycle(g, result.cycle):
        raise AssertionError("search returned an invalid cycle")
    return result


def _select_backend(backend):
    if backend is None:
        return _core_cy if _core_cy is not None else _core_py
    if backend == "python":
        return _core_py
    if backend == "cython":
        if _core_cy is None:
            raise GraphInputError("compiled core is not available")
        return _core_cy
    raise GraphInputError(f"unknown backend {backend!r}")


# ---------------------------------------------------------------------------
# Isomorphism for small graphs.

ISO_SIZE_LIMIT = 64


def _vertex_invariants(g: Graph):
    invs = []
    for u in range(g.n):
        dist = distances_from(g, u)
        profile = tuple(sorted(-1 if d == UNREACHABLE else d for d in dist))
        nbrs = sorted(g.adj[u])
        triangles = sum(1 for a, b in combinations(nbrs, 2) if b in g.adj[a])
        nbr_degrees = tuple(sorted(g.degree(x) for x in nbrs))
        invs.append((g.degree(u), triangles, nbr_degrees, profile))
    return invs


def isomorphic(g: Graph, h: Graph):
    """Isomorphism test with a witness mapping (g-vertex -> h-vertex).

    Backtracking over invariant-compatible candidates; intended for graphs
    of at most ISO_SIZE_LIMIT vertices.
    """
    if g.n > ISO_SIZE_LIMIT or h.n > ISO_SIZE_LIMIT:
        raise GraphInputError(
            f"isomorphism limited to {ISO_SIZE_LIMIT} vertices")
    if g.n != h.n or g.m != h.m:
        return False, None
    if g.n == 0:
        return True, ()

    inv_g = _vertex_invariants(g)
    inv_h = _vertex_invariants(h)
    if sorted(inv_g) != sorted(inv_h):
        return False, None
    candidates = [
        tuple(v for v in range(h.n) if inv_h[v] == inv_g[u])
        for u in range(g.n)
    ]

    # Map vertices in a connectivity-first order, rarest invariant first.
    order = []
    placed = [False] * g.n
    for _ in range(g.n):
        best = None
        for u in range(g.n):
            if placed[u]:
                continue
            attached = sum(1 for w in g.adj[u] if placed[w])
            key = (-attached, len(candidates[u]), u)
            if best is None or key < best[0]:
                best = (key, u)
        u = best[1]
        placed[u] = True
        order.append(u)

    mapping = [-1] * g.n
    used = [False] * h.n

    def assign(depth):
        if depth == g.n:
            return True
        u = order[depth]
        for x in candidates[u]:
            if used[x]:
                continue
            ok = True
            for w in order[:depth]:
                if (w in g.adj[u]) != (mapping[w] in h.adj[x]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[u] = x
            used[x] = True
            if assign(depth + 1):
                return True
            mapping[u] = -1
            used[x] = False
        return False

    if assign(0):
        return True, tuple(mapping)
    return False, None

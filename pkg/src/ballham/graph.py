"""Immutable simple-graph representation and the basic structural toolbox.

Vertices are dense integer ids ``0..n-1``.  Everything here is a pure
function of its inputs; ``Graph`` instances are safe to share freely.
Unreachable pairs get the dedicated :data:`UNREACHABLE` distance sentinel.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import GraphInputError, PreconditionError

UNREACHABLE = math.inf


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: vertex count plus per-vertex neighbor sets.

    Invariants (enforced by the constructors): adjacency is symmetric,
    loop-free and duplicate-free.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        if n < 0:
            raise GraphInputError(f"vertex count must be >= 0, got {n}")
        nbrs = [set() for _ in range(n)]
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge {e!r} out of range for n={n}")
            if u == v:
                raise GraphInputError(f"loop at vertex {u} not allowed")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    def check_vertex(self, u: int) -> None:
        if not (0 <= u < self.n):
            raise GraphInputError(f"vertex id {u} out of range for n={self.n}")

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(sorted(self.adj[u]))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class BallView:
    """Radius-``r`` ball around ``center``: its member set and induced subgraph.

    ``induced`` is relabeled to ``0..len(members)-1``; ``keys[i]`` is the
    original id of induced vertex ``i`` (keys ascend).
    """

    center: int
    radius: int
    members: frozenset[int]
    induced: Graph
    keys: tuple[int, ...]


# ---------------------------------------------------------------------------
# Small standard builders used throughout tests and family constructions.

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError(f"cycle needs >= 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete_multipartite_graph(sizes) -> Graph:
    bounds = [0]
    for s in sizes:
        bounds.append(bounds[-1] + s)
    n = bounds[-1]
    edges = []
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for u in range(bounds[i], bounds[i + 1]):
                for v in range(bounds[j], bounds[j + 1]):
                    edges.append((u, v))
    return Graph.from_edges(n, edges)


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``vertices``, relabeled to 0..k-1 by ascending id."""
    keys = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(keys)}
    edges = [
        (index[u], index[v])
        for u in keys
        for v in g.adj[u]
        if v in index and u < v
    ]
    return Graph.from_edges(len(keys), edges), keys


def relabel(g: Graph, perm) -> Graph:
    """Image of ``g`` under the permutation ``perm`` (old id -> new id)."""
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


# ---------------------------------------------------------------------------
# Distances, rings, balls.

def distances_from(g: Graph, u: int) -> list:
    """BFS distance list from ``u``; unreachable entries are UNREACHABLE."""
    g.check_vertex(u)
    dist = [UNREACHABLE] * g.n
    dist[u] = 0
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if dist[y] == UNREACHABLE:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(g: Graph, u: int, v: int):
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return 0
    dist = [-1] * g.n
    dist[u] = 0
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                if y == v:
                    return dist[y]
                queue.append(y)
    return UNREACHABLE


def ring(g: Graph, u: int, r: int) -> frozenset[int]:
    """Vertices at distance exactly ``r`` from ``u``."""
    if r < 0:
        raise GraphInputError(f"radius must be >= 0, got {r}")
    dist = distances_from(g, u)
    return frozenset(v for v in range(g.n) if dist[v] == r)


def ball(g: Graph, u: int, r: int) -> BallView:
    """Ball of radius ``r`` around ``u`` (members within distance r, induced)."""
    if r < 1:
        raise GraphInputError(f"ball radius must be >= 1, got {r}")
    dist = distances_from(g, u)
    members = frozenset(v for v in range(g.n) if dist[v] != UNREACHABLE and dist[v] <= r)
    sub, keys = induced_subgraph(g, members)
    return BallView(center=u, radius=r, members=members, induced=sub, keys=keys)


def second_neighborhood_size(g: Graph, u: int) -> int:
    return len(ring(g, u, 2))


def eccentricity(g: Graph, u: int):
    dist = distances_from(g, u)
    if any(d == UNREACHABLE for d in dist):
        return UNREACHABLE
    return max(dist)


def diameter(g: Graph) -> int:
    if g.n == 0:
        raise PreconditionError("diameter undefined for the empty graph")
    worst = 0
    for u in range(g.n):
        ecc = eccentricity(g, u)
        if ecc == UNREACHABLE:
            raise PreconditionError("diameter requires a connected graph")
        worst = max(worst, ecc)
    return worst


# ---------------------------------------------------------------------------
# Connectivity.

def connected_within(g: Graph, subset) -> bool:
    """Is the subgraph induced by ``subset`` connected (True when empty)?"""
    sub = set(subset)
    if not sub:
        return True
    start = next(iter(sub))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y in sub and y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(sub)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return connected_within(g, range(g.n))


def connected_components(g: Graph, subset=None) -> list[frozenset[int]]:
    """Components of the subgraph induced by ``subset`` (whole graph if None)."""
    todo = set(range(g.n) if subset is None else subset)
    comps = []
    while todo:
        start = min(todo)
        comp = {start}
        queue = deque([start])
        todo.discard(start)
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if y in todo:
                    todo.discard(y)
                    comp.add(y)
                    queue.append(y)
        comps.append(frozenset(comp))
    return comps


def cut_vertices_within(g: Graph, subset) -> frozenset[int]:
    """Articulation points of the subgraph induced by ``subset``.

    Iterative Hopcroft-Tarjan lowpoint computation, one DFS per component.
    """
    sub = set(subset)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    parent: dict[int, int] = {}
    cuts: set[int] = set()
    counter = 0
    for root in sorted(sub):
        if root in disc:
            continue
        root_children = 0
        disc[root] = low[root] = counter
        counter += 1
        parent[root] = -1
        stack = [(root, iter(sorted(g.adj[root])))]
        while stack:
            x, it = stack[-1]
            advanced = False
            for y in it:
                if y not in sub:
                    continue
                if y not in disc:
                    parent[y] = x
                    disc[y] = low[y] = counter
                    counter += 1
                    if x == root:
                        root_children += 1
                    stack.append((y, iter(sorted(g.adj[y]))))
                    advanced = True
                    break
                elif y != parent[x]:
                    low[x] = min(low[x], disc[y])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[x])
                    if p != root and low[x] >= disc[p]:
                        cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    return frozenset(cuts)


def cut_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose removal increases the number of components."""
    return cut_vertices_within(g, range(g.n))


def is_biconnected_within(g: Graph, subset) -> bool:
    """2-connectedness of the induced subgraph: connected, >= 3 vertices, no cut vertex."""
    sub = set(subset)
    if len(sub) < 3:
        return False
    return connected_within(g, sub) and not cut_vertices_within(g, sub)


def vertex_connectivity_small(g: Graph, cap: int = 3) -> int:
    """Exact vertex connectivity when it is below ``cap``; returns ``cap`` otherwise.

    Brute force over deletion sets of size < cap; fine at desk scale.
    """
    if not is_connected(g):
        return 0
    if g.n <= 1:
        return 0
    everything = set(range(g.n))
    for size in range(1, min(cap, g.n - 1)):
        for cut in combinations(range(g.n), size):
            rest = everything.difference(cut)
            if rest and not connected_within(g, rest):
                return size
    return cap


# ---------------------------------------------------------------------------
# Structural predicates.

def is_k_regular(g: Graph):
    """The common degree k when one exists, else None."""
    if g.n == 0:
        raise PreconditionError("regularity undefined for the empty graph")
    k = g.degree(0)
    for u in range(1, g.n):
        if g.degree(u) != k:
            return None
    return k


def is_locally_connected(g: Graph) -> tuple[bool, int | None]:
    """Does every neighborhood induce a connected subgraph?  Witness on failure."""
    for u in range(g.n):
        if not connected_within(g, g.adj[u]):
            return False, u
    return True, None


def is_claw_free(g: Graph):
    """No induced star on four vertices; on failure returns its four vertices."""
    for u in range(g.n):
        nbrs = sorted(g.adj[u])
        if len(nbrs) < 3:
            continue
        for a, b, c in combinations(nbrs, 3):
            if b not in g.adj[a] and c not in g.adj[a] and c not in g.adj[b]:
                return False, (u, a, b, c)
    return True, None


def edge_triangle_count(g: Graph, u: int, v: int) -> int:
    return len(g.adj[u] & g.adj[v])


# ---------------------------------------------------------------------------
# Cycles.

def is_cycle(g: Graph, seq) -> bool:
    """Is ``seq`` a valid cycle of ``g`` (distinct vertices, length >= 3, closed)?"""
    seq = tuple(seq)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    if any(not (0 <= v < g.n) for v in seq):
        return False
    return all(seq[(i + 1) % len(seq)] in g.adj[seq[i]] for i in range(len(seq)))


def is_hamiltonian_cycle(g: Graph, seq) -> bool:
    seq = tuple(seq)
    return len(seq) == g.n and is_cycle(g, seq)


def cycle_successor(seq, v):
    i = seq.index(v)
    return seq[(i + 1) % len(seq)]


def cycle_predecessor(seq, v):
    i = seq.index(v)
    return seq[i - 1]

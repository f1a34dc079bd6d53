"""Shared test graphs and naive reference implementations.

The naive helpers here are deliberately independent of the package code
paths they check: permutation scan for Hamiltonicity, delete-and-count for
cut vertices, networkx for serialization cross-checks.
"""

from itertools import permutations

import networkx as nx

from ballham.graph import Graph, connected_components


def petersen() -> Graph:
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
             (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
             (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    return Graph.from_edges(10, edges)


def cube() -> Graph:
    edges = [(0, 1), (1, 2), (2, 3), (3, 0),
             (4, 5), (5, 6), (6, 7), (7, 4),
             (0, 4), (1, 5), (2, 6), (3, 7)]
    return Graph.from_edges(8, edges)


def prism() -> Graph:
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
             (0, 3), (1, 4), (2, 5)]
    return Graph.from_edges(6, edges)


def squared_cycle(n: int) -> Graph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, (i + 2) % n) for i in range(n)]
    return Graph.from_edges(n, edges)


def bowtie() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


def naive_hamiltonian(g: Graph) -> bool:
    """All-permutations Hamiltonicity check (reference oracle, n <= ~9)."""
    if g.n < 3:
        return False
    rest = list(range(1, g.n))
    for perm in permutations(rest):
        cycle = (0,) + perm
        if all(cycle[(i + 1) % g.n] in g.adj[cycle[i]] for i in range(g.n)):
            return True
    return False


def naive_cut_vertices(g: Graph) -> set:
    """Delete-and-count articulation reference."""
    base = len(connected_components(g))
    out = set()
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        if rest and len(connected_components(g, rest)) > base:
            out.add(v)
    return out


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_simple_graph(rng, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)

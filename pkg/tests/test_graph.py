"""Core graph structure: metrics, connectivity, predicates, cycles."""

import random

import pytest

from ballham.errors import GraphInputError, PreconditionError
from ballham.graph import (
    UNREACHABLE,
    Graph,
    ball,
    complete_bipartite_graph,
    complete_graph,
    cut_vertices,
    cycle_graph,
    diameter,
    distance,
    edge_triangle_count,
    is_claw_free,
    is_cycle,
    is_hamiltonian_cycle,
    is_k_regular,
    is_locally_connected,
    ring,
    vertex_connectivity_small,
)

from conftest import cube, naive_cut_vertices, petersen, random_simple_graph


def test_construction_rejects_bad_edges():
    with pytest.raises(GraphInputError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphInputError):
        Graph.from_edges(3, [(1, 1)])


def test_adjacency_is_symmetric_and_deduplicated():
    g = Graph.from_edges(3, [(0, 1), (1, 0), (1, 2)])
    assert g.m == 2
    assert g.neighbors(1) == (0, 2)
    assert g.has_edge(2, 1)


def test_distance_basics():
    k4 = complete_graph(4)
    assert distance(k4, 0, 1) == 1
    assert distance(k4, 2, 2) == 0
    two_parts = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert distance(two_parts, 0, 3) == UNREACHABLE
    with pytest.raises(GraphInputError):
        distance(k4, 0, 9)


def test_petersen_distances():
    g = petersen()
    for u in range(g.n):
        for v in range(g.n):
            if u == v:
                continue
            expected = 1 if g.has_edge(u, v) else 2
            assert distance(g, u, v) == expected


def test_rings():
    k4 = complete_graph(4)
    assert ring(k4, 0, 2) == frozenset()
    g = petersen()
    for u in range(10):
        assert len(ring(g, u, 2)) == 6
    q = cube()
    for u in range(8):
        assert len(ring(q, u, 2)) == 3
    assert ring(q, 0, 0) == frozenset({0})


def test_rings_partition_component():
    rng = random.Random(7)
    for _ in range(25):
        g = random_simple_graph(rng, rng.randint(2, 10), rng.random())
        for u in range(g.n):
            union = set()
            total = 0
            r = 0
            while True:
                shell = ring(g, u, r)
                if r > g.n:
                    break
                union |= shell
                total += len(shell)
                r += 1
            reachable = {v for v in range(g.n)
                         if distance(g, u, v) != UNREACHABLE}
            assert union == reachable
            assert total == len(reachable)


def test_distance_symmetry_and_triangle_inequality():
    rng = random.Random(11)
    for _ in range(20):
        g = random_simple_graph(rng, 9, 0.4)
        verts = range(g.n)
        d = {(u, v): distance(g, u, v) for u in verts for v in verts}
        for u in verts:
            for v in verts:
                assert d[u, v] == d[v, u]
        for _ in range(40):
            u, v, w = (rng.randrange(g.n) for _ in range(3))
            if d[u, w] != UNREACHABLE and d[w, v] != UNREACHABLE:
                assert d[u, v] <= d[u, w] + d[w, v]


def test_ball_views():
    k4 = complete_graph(4)
    b = ball(k4, 0, 1)
    assert b.members == frozenset(range(4))
    assert b.induced.m == 6
    g = petersen()
    b = ball(g, 0, 1)
    assert len(b.members) == 4
    assert b.induced.m == 3  # triangle-free: the ball is a star
    assert b.induced.degree(b.keys.index(0)) == 3


def test_regularity():
    assert is_k_regular(complete_graph(4)) == 3
    near = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert is_k_regular(near) is None
    assert is_k_regular(petersen()) == 3


def test_cut_vertices_small_cases():
    path3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert cut_vertices(path3) == frozenset({1})
    assert cut_vertices(cycle_graph(5)) == frozenset()
    from conftest import bowtie
    assert cut_vertices(bowtie()) == frozenset({2})


def test_cut_vertices_against_naive_oracle():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(2, 12)
        g = random_simple_graph(rng, n, rng.uniform(0.1, 0.7))
        assert set(cut_vertices(g)) == naive_cut_vertices(g)


def test_local_connectivity():
    assert is_locally_connected(complete_graph(4)) == (True, None)
    ok, witness = is_locally_connected(cycle_graph(5))
    assert not ok and witness is not None


def test_claw_free():
    claw = complete_bipartite_graph(1, 3)
    ok, witness = is_claw_free(claw)
    assert not ok
    u, a, b, c = witness
    assert {a, b, c} <= set(claw.adj[u])
    assert is_claw_free(complete_graph(5)) == (True, None)


def test_diameter():
    assert diameter(complete_graph(4)) == 1
    assert diameter(cycle_graph(6)) == 3
    with pytest.raises(PreconditionError):
        diameter(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_cycle_validation():
    k4 = complete_graph(4)
    assert is_hamiltonian_cycle(k4, (0, 1, 2, 3))
    assert not is_hamiltonian_cycle(k4, (0, 1, 2))
    assert not is_hamiltonian_cycle(k4, (0, 1, 2, 2))
    c6 = cycle_graph(6)
    base = (0, 1, 2, 3, 4, 5)
    for shift in range(6):
        rotated = base[shift:] + base[:shift]
        assert is_hamiltonian_cycle(c6, rotated)
        assert is_hamiltonian_cycle(c6, tuple(reversed(rotated)))
    assert not is_cycle(c6, (0, 1, 3))


def test_triangle_count_and_connectivity_probe():
    k5 = complete_graph(5)
    assert edge_triangle_count(k5, 0, 1) == 3
    assert vertex_connectivity_small(cycle_graph(6), cap=3) == 2
    assert vertex_connectivity_small(complete_graph(5), cap=3) == 3
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert vertex_connectivity_small(path, cap=3) == 1

"""Exact search and isomorphism against naive references."""

import random

import pytest

from ballham.errors import GraphInputError
from ballham.graph import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    relabel,
)
from ballham.oracle import (
    BUDGET_EXCEEDED,
    FOUND,
    NOT_HAMILTONIAN,
    hamiltonian_exact,
    isomorphic,
)
from ballham import oracle as oracle_mod
from ballham.graph import is_hamiltonian_cycle

from conftest import cube, naive_hamiltonian, petersen, prism, random_simple_graph


def test_exact_trivia():
    res = hamiltonian_exact(complete_graph(4))
    assert res.outcome == FOUND and len(res.cycle) == 4
    assert hamiltonian_exact(complete_bipartite_graph(2, 3)).outcome == NOT_HAMILTONIAN
    assert hamiltonian_exact(Graph.from_edges(2, [(0, 1)])).outcome == NOT_HAMILTONIAN
    assert hamiltonian_exact(Graph.from_edges(0, [])).outcome == NOT_HAMILTONIAN


def test_petersen_refuted_by_exhaustion():
    res = hamiltonian_exact(petersen())
    assert res.outcome == NOT_HAMILTONIAN
    assert res.nodes_explored < res.budget


def test_exhaustive_agreement_tiny():
    # Every labeled graph on up to 5 vertices.
    for n in range(6):
        pair_count = n * (n - 1) // 2
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for mask in range(1 << pair_count):
            edges = [pairs[i] for i in range(pair_count) if mask >> i & 1]
            g = Graph.from_edges(n, edges)
            assert hamiltonian_exact(g).found == naive_hamiltonian(g)


def test_random_agreement_with_permutation_oracle():
    rng = random.Random(21)
    for _ in range(150):
        n = rng.randint(6, 9)
        g = random_simple_graph(rng, n, rng.uniform(0.2, 0.8))
        assert hamiltonian_exact(g).found == naive_hamiltonian(g)


def test_found_cycles_validate():
    rng = random.Random(22)
    for _ in range(80):
        g = random_simple_graph(rng, rng.randint(3, 10), rng.uniform(0.4, 0.9))
        res = hamiltonian_exact(g)
        if res.found:
            assert is_hamiltonian_cycle(g, res.cycle)


def test_determinism_and_node_counts():
    g = petersen()
    first = hamiltonian_exact(g)
    second = hamiltonian_exact(g)
    assert first == second


def test_budget_exhaustion():
    res = hamiltonian_exact(petersen(), budget=10)
    assert res.outcome == BUDGET_EXCEEDED
    assert res.nodes_explored == 10
    with pytest.raises(GraphInputError):
        hamiltonian_exact(petersen(), budget=0)


def test_backends_agree():
    if oracle_mod._core_cy is None:
        pytest.skip("compiled core not built")
    rng = random.Random(33)
    graphs = [petersen(), cube(), prism(), complete_graph(6),
              complete_bipartite_graph(3, 4)]
    graphs += [random_simple_graph(rng, rng.randint(4, 11), rng.uniform(0.2, 0.9))
               for _ in range(40)]
    for g in graphs:
        for budget in (25, 10**6):
            a = hamiltonian_exact(g, budget=budget, backend="python")
            b = hamiltonian_exact(g, budget=budget, backend="cython")
            assert (a.outcome, a.cycle, a.nodes_explored) == \
                   (b.outcome, b.cycle, b.nodes_explored)


# ---------------------------------------------------------------------------
# Isomorphism.

def test_iso_relabeling():
    rng = random.Random(44)
    for _ in range(30):
        g = random_simple_graph(rng, rng.randint(1, 12), rng.random())
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        ok, mapping = isomorphic(g, h)
        assert ok
        for u, v in g.edges():
            assert h.has_edge(mapping[u], mapping[v])
        assert sorted(mapping) == list(range(g.n))


def test_iso_negative_cases():
    assert isomorphic(cycle_graph(6), prism())[0] is False  # same degrees
    assert isomorphic(complete_graph(4), cycle_graph(4))[0] is False
    assert isomorphic(complete_graph(3), complete_graph(4))[0] is False


def test_iso_equivalence_spot_checks():
    rng = random.Random(55)
    g = random_simple_graph(rng, 9, 0.5)
    perm = list(range(9))
    rng.shuffle(perm)
    h = relabel(g, perm)
    perm2 = list(range(9))
    rng.shuffle(perm2)
    f = relabel(h, perm2)
    assert isomorphic(g, g)[0]          # reflexive
    assert isomorphic(h, g)[0]          # symmetric partner of relabeling
    assert isomorphic(g, f)[0]          # transitive through h


def test_iso_size_limit():
    big = Graph.from_edges(65, [(i, i + 1) for i in range(64)])
    with pytest.raises(GraphInputError):
        isomorphic(big, big)

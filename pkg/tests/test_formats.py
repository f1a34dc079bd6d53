"""Serialization round-trips, cross-checked against networkx's codec."""

import random

import networkx as nx
import pytest

from ballham.errors import ParseError
from ballham.formats import (
    emit_dot,
    emit_edge_json,
    emit_graph6,
    parse_auto,
    parse_edge_json,
    parse_graph6,
)
from ballham.graph import Graph, complete_graph

from conftest import random_simple_graph, to_networkx


def test_k4_is_the_classic_graph6_string():
    assert emit_graph6(complete_graph(4)) == "C~"
    assert parse_graph6("C~").adj == complete_graph(4).adj


def test_graph6_roundtrip_random():
    rng = random.Random(5)
    for _ in range(80):
        g = random_simple_graph(rng, rng.randint(0, 20), rng.random())
        assert parse_graph6(emit_graph6(g)).adj == g.adj


def test_graph6_agrees_with_networkx():
    rng = random.Random(6)
    for _ in range(40):
        g = random_simple_graph(rng, rng.randint(1, 16), rng.random())
        ours = emit_graph6(g)
        theirs = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
        assert ours == theirs
        back = nx.from_graph6_bytes(ours.encode())
        assert set(back.edges()) == {tuple(e) for e in g.edges()}


def test_graph6_header_and_large_size():
    assert parse_graph6(">>graph6<<C~").n == 4
    g = Graph.from_edges(70, [(0, 69)])
    text = emit_graph6(g)
    assert text.startswith("~")
    back = parse_graph6(text)
    assert back.n == 70 and back.edges() == [(0, 69)]


def test_graph6_errors_carry_offsets():
    with pytest.raises(ParseError) as err:
        parse_graph6("C~\x05")
    assert err.value.offset is not None
    with pytest.raises(ParseError):
        parse_graph6("C")  # truncated payload
    with pytest.raises(ParseError):
        parse_graph6("")


def test_edge_json_roundtrip():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    text = emit_edge_json(g)
    assert parse_edge_json(text).adj == g.adj
    rng = random.Random(9)
    for _ in range(20):
        g = random_simple_graph(rng, rng.randint(0, 12), rng.random())
        assert parse_edge_json(emit_edge_json(g)).adj == g.adj


def test_edge_json_errors():
    with pytest.raises(ParseError):
        parse_edge_json("{nope")
    with pytest.raises(ParseError):
        parse_edge_json('{"n": 2}')
    with pytest.raises(ParseError):
        parse_edge_json('{"n": 2, "edges": [[0, "x"]]}')


def test_dot_output():
    text = emit_dot(complete_graph(4))
    assert text.count(" -- ") == 6
    assert text.startswith("graph G {")


def test_parse_auto():
    g = complete_graph(4)
    assert parse_auto(emit_graph6(g)).adj == g.adj
    assert parse_auto(emit_edge_json(g)).adj == g.adj

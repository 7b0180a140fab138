import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cleangraph.clean import cl2
from cleangraph.formats import decode_graph6, export_dot, export_graph6
from cleangraph.graphs import Graph, complete_graph, empty_graph
from cleangraph.rings import make_zn



def test_graph6_examples():
    assert export_graph6(complete_graph(3)) == b"Bw"
    assert export_graph6(complete_graph(1)) == b"@"
    assert export_graph6(empty_graph(2)) == b"A?"
    assert export_graph6(empty_graph(0)) == b"?"


@pytest.mark.parametrize("n", [0, 1, 2, 5, 62, 63, 64, 100, 258])
def test_graph6_matches_networkx(n):
    h = nx.gnp_random_graph(n, 0.3, seed=n)
    g = Graph.from_edges(range(n), h.edges)
    want = nx.to_graph6_bytes(h, header=False).strip()
    assert export_graph6(g) == want
    assert decode_graph6(want) == g


def test_graph6_four_byte_order():
    data = export_graph6(empty_graph(63))
    assert data[:4] == bytes([126, 63, 63, 63 + 63])


def test_decode_accepts_header():
    assert decode_graph6(">>graph6<<Bw\n") == complete_graph(3)
    with pytest.raises(ValueError):
        decode_graph6("Bww")


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 40), st.floats(0, 1), st.integers(0, 2**32))
def test_graph6_round_trip(n, p, seed):
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    g = Graph.from_edges(range(n), edges)
    assert decode_graph6(export_graph6(g)) == g


def test_dot_examples():
    assert export_dot(empty_graph(0)) == "graph G {\n}\n"
    k2 = export_dot(complete_graph(2))
    assert k2 == 'graph G {\n  "0";\n  "1";\n  "0" -- "1";\n}\n'
    assert export_dot(cl2(make_zn(3))) == 'graph G {\n  "(1,1)";\n  "(1,2)";\n}\n'


def test_dot_is_deterministic_and_parsable():
    g = cl2(make_zn(12))
    text = export_dot(g)
    assert text == export_dot(cl2(make_zn(12)))
    lines = [ln for ln in text.splitlines() if "--" in ln]
    assert len(lines) == g.size
    assert '"(4,1)"' in text

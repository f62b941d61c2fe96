import networkx as nx
import pytest
from hypothesis import given

from contracta import catalog
from contracta.errors import MalformedEdgeList, MalformedGraph6
from contracta.formats import emit_dot, emit_edgelist, emit_graph6, parse_edgelist, parse_graph6
from contracta.iso import are_isomorphic

from conftest import graphs, to_nx

G = catalog.graph


def test_k1_encodes_as_at_sign():
    assert emit_graph6(G("K1")) == "@"


def test_round_trip_exhaustive(atlas):
    for g in atlas:
        assert parse_graph6(emit_graph6(g)) == g


def test_matches_networkx_encoder(atlas):
    for g in atlas:
        expected = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert emit_graph6(g) == expected


@given(graphs(max_n=20))
def test_networkx_decodes_our_output(g):
    back = nx.from_graph6_bytes(emit_graph6(g).encode())
    assert nx.is_isomorphic(back, to_nx(g)) and sorted(back.edges()) == sorted(to_nx(g).edges())


def test_bull_round_trip_and_five_vertex_lines():
    assert are_isomorphic(parse_graph6(emit_graph6(G("bull"))), G("bull"))
    assert parse_graph6("D?{").n == 5
    assert emit_graph6(parse_graph6("D?{")) == "D?{"


def test_header_is_skipped():
    assert parse_graph6(">>graph6<<" + emit_graph6(G("C5"))) == G("C5")


def test_large_orders_use_long_prefix():
    for n in (62, 63, 64):
        g = G(f"C{n}")
        text = emit_graph6(g)
        assert text.startswith("~") == (n >= 63)
        assert parse_graph6(text) == g


@pytest.mark.parametrize(
    "text,offset",
    [("", 0), ("D?", 2), ("D?{{", 3), ("D? {", 2), ("~?", 2), (">>graph6<<D?", 12)],
)
def test_malformed_graph6_offsets(text, offset):
    with pytest.raises(MalformedGraph6) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_dot_output():
    dot = emit_dot(G("claw"))
    assert dot.startswith("graph {")
    assert dot.count("--") == 3
    assert "a -- b;" in emit_dot(G("K2"), ["a", "b"])
    assert '"x y"' in emit_dot(G("K2"), ["x y", "z"])


def test_edgelist_examples():
    assert parse_edgelist("2 1\n0 1") == G("K2")
    with pytest.raises(MalformedEdgeList) as info:
        parse_edgelist("2 1\n0 2")
    assert info.value.line == 2


@pytest.mark.parametrize(
    "text,line",
    [("", 1), ("3\n", 1), ("3 1\n", 1), ("3 1\n0 0", 2), ("3 2\n0 1\n1 0", 3), ("3 1\n# c\n\n0 x", 4)],
)
def test_edgelist_errors(text, line):
    with pytest.raises(MalformedEdgeList) as info:
        parse_edgelist(text)
    assert info.value.line == line


@given(graphs(max_n=10))
def test_edgelist_round_trip(g):
    assert parse_edgelist(emit_edgelist(g)) == g

import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from contracta.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(index), [(index[a], index[b]) for a, b in h.edges()])


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def graphs_with_edge(draw, min_n=2, max_n=8):
    g = draw(graphs(min_n, max_n).filter(lambda g: g.num_edges > 0))
    e = draw(st.sampled_from(g.edges()))
    return g, e


@pytest.fixture(scope="session")
def atlas():
    """Every graph on 0..7 vertices, from networkx's graph atlas."""
    return [from_nx(h) for h in nx.graph_atlas_g()]


# one line per acceptance criterion, printed after the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)

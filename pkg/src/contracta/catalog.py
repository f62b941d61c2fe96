"""Named graphs and standard parametric families.

Each named entry stores its node names and TikZ-style draw chains exactly as
drawn: ``"(a)--(b)--(c) (d)--(e)"`` is the path ``a-b-c`` plus the edge
``d-e``. Nodes are numbered in the order listed. Every entry also records the
degree sequence and edge count read off the drawing; :func:`validate` checks
both plus the identities between groups.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import BadOrder, UnknownId
from .graph import Graph, degree_sequence
from .iso import CanonicalForm, are_isomorphic, canonical_form


@dataclass(frozen=True)
class NamedGraph:
    id: str
    graph: Graph
    source: str
    nodes: tuple[str, ...] = ()
    chains: str = ""


_TOKEN = re.compile(r"\(\s*(\w+)\s*\)|(--)")


def parse_chains(nodes: str, chains: str) -> Graph:
    """Edges of a TikZ draw command: consecutive nodes joined by ``--`` are adjacent."""
    names = nodes.split()
    pos = {name: i for i, name in enumerate(names)}
    edges = []
    prev: Optional[str] = None
    linked = False
    for m in _TOKEN.finditer(chains):
        node, dash = m.groups()
        if dash:
            linked = True
            continue
        if linked and prev is not None and prev != node:
            edges.append((pos[prev], pos[node]))
        prev, linked = node, False
    return Graph.from_edges(len(names), edges)


# id, group, node order, draw chains, (degree sequence, edge count) recorded from the drawing
_ENTRIES: list[tuple[str, str, str, str, tuple[tuple[int, ...], int]]] = [
    # claw-split graphs
    ("CS1", "claw-split", "e a b c d", "(c) -- (a) -- (b)-- (c) -- (d) -- (a) --(e)", ((1, 2, 2, 3, 4), 6)),
    ("CS2", "claw-split", "e d a b c", "(a) -- (c) -- (b)-- (a) -- (d) (e) --(a)", ((1, 1, 2, 2, 4), 5)),
    ("CS3", "claw-split", "d e a b c", "(c) -- (a) -- (b) (d) -- (a) --(e)", ((1, 1, 1, 1, 4), 4)),
    ("CS4", "claw-split", "a b c d e", "(c) -- (b)-- (a) -- (d) (e) --(a)", ((1, 1, 1, 2, 3), 4)),
    ("CS5", "claw-split", "a b c d e", "(a) -- (b) --(d) --(a) (c) -- (b) (d)--(e)", ((1, 1, 2, 3, 3), 5)),
    ("CS6", "claw-split", "a b c d e", "(a) -- (b) --(d) --(a) (d) -- (c) -- (b) (d) -- (e) -- (b)", ((2, 2, 2, 4, 4), 7)),
    # critically claw-exist graphs
    ("CE1", "critical claw-exist", "b c1 c2 c3", "(c1) -- (b) (c2) -- (b) (c3) -- (b)", ((1, 1, 1, 3), 3)),
    ("CE2", "critical claw-exist", "b1 b2 c1 c2 c3",
     "(c1) -- (b1) (c2) -- (b1) (c3) -- (b1) (c1) -- (b2) (c2) -- (b2) (c3) -- (b2)", ((2, 2, 2, 3, 3), 6)),
    ("CE3", "critical claw-exist", "b1 b2 b3 c1 c2 c3",
     "(c1) -- (b1) (c2) -- (b1) (c3) -- (b1) (c1) -- (b2) (c2) -- (b2) (c3) -- (b2) "
     "(c1) -- (b3) (c2) -- (b3) (c3) -- (b3)", ((3, 3, 3, 3, 3, 3), 9)),
    ("CE4", "critical claw-exist", "b c1 c2 c3 d", "(c1) -- (b) (c2) -- (b) (c3) -- (b) (c2)--(d)--(c3)", ((1, 2, 2, 2, 3), 5)),
    ("CE5", "critical claw-exist", "b c1 c2 c3 d1 d2",
     "(c1) -- (b) (c2) -- (b) (c3) -- (b) (c2)--(d1)--(c3) (c1)--(d2)--(c2)", ((2, 2, 2, 2, 3, 3), 7)),
    ("CE6", "critical claw-exist", "b1 b2 c1 c2 c3 d",
     "(c1) -- (b1) (c2) -- (b1) (c3) -- (b1) (c1) -- (b2) (c2) -- (b2) (c3) -- (b2) (c2)--(d)--(c3)",
     ((2, 2, 3, 3, 3, 3), 8)),
    # forbidden subgraphs of line graphs
    ("L1", "line-forbidden", "a b c d", "(b)--(a)--(c) (a)--(d)", ((1, 1, 1, 3), 3)),
    ("L2", "line-forbidden", "a b c d e", "(e)--(a)--(d) (e)--(b)--(d) (e)--(c)--(d) (c)--(b)", ((2, 3, 3, 3, 3), 7)),
    ("L3", "line-forbidden", "a f b c d e", "(e)--(f)--(a)--(d) (e)--(b)--(d) (e)--(c)--(d) (c)--(b)",
     ((2, 2, 3, 3, 3, 3), 8)),
    ("L4", "line-forbidden", "a f b c d e", "(e)--(f) (a)--(d) (e)--(b)--(d) (e)--(c)--(d) (c)--(b)",
     ((1, 1, 3, 3, 3, 3), 7)),
    ("L5", "line-forbidden", "a b c d e f", "(a)--(b)--(c)--(d)--(b) (d)--(e)--(f)--(c)--(e) (d)--(f)",
     ((1, 3, 3, 3, 4, 4), 9)),
    ("L6", "line-forbidden", "a b c d e f", "(a)--(b)--(c)--(d)--(a)--(c) (d)--(b) (d)--(e)--(f)--(c)--(e) (d)--(f)",
     ((3, 3, 3, 3, 5, 5), 11)),
    ("L7", "line-forbidden", "a b c d e f", "(a)--(b)--(c)--(d)--(a)--(c) (d)--(e)--(f) (d)--(f)--(c)",
     ((2, 2, 3, 3, 4, 4), 9)),
    ("L8", "line-forbidden", "a b c d e", "(a)--(b)--(c)--(a)--(d)--(b) (d)--(c)--(e)--(a)--(e)--(b)",
     ((3, 3, 4, 4, 4), 9)),
    ("L9", "line-forbidden", "a b c d e f", "(b)--(c)--(d)--(e)--(f)--(b)--(a)--(c) (d)--(a)--(e) (a)--(f)",
     ((3, 3, 3, 3, 3, 5), 10)),
    # critically non-line graphs beyond the forbidden ones
    ("L10", "critical non-line", "b1 b2 c1 c2 c3",
     "(c1) -- (b1) (c2) -- (b1) (c3) -- (b1) (c1) -- (b2) (c2) -- (b2) (c3) -- (b2)", ((2, 2, 2, 3, 3), 6)),
    ("L11", "critical non-line", "b1 b2 b3 c1 c2 c3",
     "(c1) -- (b1) (c2) -- (b1) (c3) -- (b1) (c1) -- (b2) (c2) -- (b2) (c3) -- (b2) "
     "(c1) -- (b3) (c2) -- (b3) (c3) -- (b3)", ((3, 3, 3, 3, 3, 3), 9)),
    ("L12", "critical non-line", "b c1 c2 c3 d", "(c1) -- (b) (c2) -- (b) (c3) -- (b) (c2)--(d)--(c3)", ((1, 2, 2, 2, 3), 5)),
    ("L13", "critical non-line", "b c1 c2 c3 d1 d2",
     "(c1) -- (b) (c2) -- (b) (c3) -- (b) (c2)--(d1)--(c3) (c1)--(d2)--(c2)", ((2, 2, 2, 2, 3, 3), 7)),
    # minimal line-split graphs
    ("L14", "minimal line-split", "a b c d e", "(b)--(a) -- (c) --(b) -- (d) (e) --(c)", ((1, 1, 2, 3, 3), 5)),
    ("L15", "minimal line-split", "a b c d e f", "(d)--(a) -- (c) --(b) -- (d) -- (f) -- (e) --(c) (f)--(a)--(e)",
     ((2, 3, 3, 3, 3, 4), 9)),
    ("L16", "minimal line-split", "a b c d e f", "(a) -- (c) --(b) --(a) (d) -- (f) -- (e) --(d) (a)--(d) (b)--(e) (c)--(f)",
     ((3, 3, 3, 3, 3, 3), 9)),
    ("L17", "minimal line-split", "a b c d e f g", "(a)--(b)--(c)--(d)--(a)--(c) (b)--(d)--(e) -- (f) --(c) (f)--(g)--(e)",
     ((2, 3, 3, 3, 3, 4, 4), 11)),
    ("L18", "minimal line-split", "a b c d e f g",
     "(a)--(b)--(c)--(d)--(a)--(g)--(c) (d)--(g)--(b) (d)--(e)--(f)--(c)--(e) (d)--(f)",
     ((3, 3, 3, 3, 4, 5, 5), 13)),
    ("L19", "minimal line-split", "a b c d e f g",
     "(b)--(a)--(d)--(g)--(b)--(d) (a)--(g) (c)--(e)--(f)--(a)--(c)--(f) (f)--(a)--(e)--(d)",
     ((3, 3, 3, 3, 4, 4, 6), 13)),
    ("L20", "minimal line-split", "a b c d e f",
     "(d)--(a) -- (b) --(c) -- (d) (a)-- (f) -- (b) (c) --(f) --(d)--(a) (d)--(e) --(a) (f)--(e)",
     ((3, 3, 3, 4, 4, 5), 11)),
    ("L21", "minimal line-split", "a b c d e f",
     "(d)--(a) -- (b) --(c) -- (d) (a)-- (e) -- (b) (c) --(e) --(d) (d)--(f) --(a) (c)--(f)--(b)",
     ((4, 4, 4, 4, 4, 4), 12)),
    # line-split graphs that are not minimal
    ("L22", "line-split", "a b1 b2 c d e f",
     "(d)--(a) -- (c) --(b1) --(b2)-- (d) -- (f) -- (e) --(c) (f)--(a)--(e)", ((2, 2, 3, 3, 3, 3, 4), 10)),
    ("L23", "line-split", "a b c g d e f",
     "(a) -- (c) --(b) --(a) (d) -- (f) -- (e) --(d) (a)--(g)--(d) (b)--(e) (c)--(f)", ((2, 3, 3, 3, 3, 3, 3), 10)),
    ("L24", "line-split", "a b1 b2 c d e f",
     "(d)--(a) -- (c) --(b1) (b2)-- (d) -- (f) -- (e) --(c) (f)--(a)--(e)", ((1, 1, 3, 3, 3, 3, 4), 9)),
    ("L25", "line-split", "a b c d e f g",
     "(a) -- (c) --(b) --(a) (d) -- (f) -- (e) --(d) (a)--(d) (b)--(e) (f)--(g)", ((1, 2, 3, 3, 3, 3, 3), 9)),
    ("L26", "line-split", "a b c d e f g",
     "(a)--(b)--(c)--(d)--(a)--(c) (b)--(d)--(e) -- (f) --(c)--(e)--(f)--(g)", ((1, 3, 3, 3, 3, 4, 5), 11)),
    ("L27", "line-split", "a b c d e f g",
     "(a)--(b)--(c)--(d)--(a) (a)--(e)--(b) (c)--(e)--(d) (f)--(g) (c)--(g)--(d)", ((1, 3, 3, 3, 4, 4, 4), 11)),
    ("L28", "line-split", "a b c d e f g",
     "(a)--(b)--(c)--(d)--(a) (a)--(e)--(b) (c)--(e)--(d) (f)--(g) (c)--(g)--(d) (g)--(e)",
     ((1, 3, 3, 4, 4, 4, 5), 12)),
    ("L29", "line-split", "a b1 b2 c d e f",
     "(d)--(a) -- (c) --(b1)--(b2)--(c) (b1)--(d)--(f) -- (e) --(c) (f)--(a)--(e)", ((2, 3, 3, 3, 3, 4, 4), 11)),
    ("L30", "line-split", "a b1 b2 c d e f",
     "(d)--(a) -- (c) --(b1) (e)--(b2)--(f) (b1)--(d)--(f) -- (e) --(c) (f)--(a)--(e)",
     ((2, 2, 3, 3, 4, 4, 4), 11)),
    ("L31", "line-split", "e d b c a f g",
     "(c)--(a)--(b)--(c)--(e)--(d)--(b) (e)--(g)--(f)--(d) (b)--(e) (c)--(d) (e)--(f)",
     ((2, 2, 3, 4, 4, 4, 5), 12)),
    ("L32", "line-split", "a b c d e f g",
     "(b)--(a)--(e)--(c)--(a)--(d)--(b)--(c) (b)--(f)--(c) (d)--(g)--(e)--(d)", ((2, 2, 4, 4, 4, 4, 4), 12)),
    ("L33", "line-split", "a b c d e f g",
     "(a)--(b)--(c)--(d)--(e)--(a)--(c)--(e)--(b)--(d)--(a) (b)--(g) --(f) --(e) (g)--(a) --(f)",
     ((3, 3, 4, 4, 5, 5, 6), 15)),
    ("L34", "line-split", "a b c d e f g",
     "(b)--(a)--(c) (d)--(a)--(e) (d)--(b) --(c) --(e) --(a) (d)--(f) --(b) (c)--(f) (g) --(b) "
     "(c)--(g)--(e) (f)--(g)", ((3, 3, 4, 4, 4, 5, 5), 14)),
]

# graphs listed in more than one group must coincide
IDENTITIES: list[tuple[str, str]] = [
    ("CS5", "bull"),
    ("CE1", "claw"),
    ("L1", "claw"),
    ("CE2", "L10"),
    ("CE3", "L11"),
    ("CE4", "L12"),
    ("CE5", "L13"),
    ("CE3", "K3,3"),
]


def path(n: int) -> Graph:
    if n < 1:
        raise BadOrder(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadOrder(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """The star with ``n`` leaves; the center is vertex 0."""
    if n < 1:
        raise BadOrder(f"star needs n >= 1 leaves, got {n}")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise BadOrder(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise BadOrder(f"complete bipartite graph needs both sides >= 1, got {a},{b}")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _bull() -> Graph:
    # triangle 0-1-2 with pendants 3 on 1 and 4 on 2
    return Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)])


@lru_cache(maxsize=None)
def _table() -> dict[str, NamedGraph]:
    table: dict[str, NamedGraph] = {
        "claw": NamedGraph("claw", star(3), "star S3"),
        "bull": NamedGraph("bull", _bull(), "triangle with two pendants"),
    }
    for ident, src, nodes, chains, _ in _ENTRIES:
        table[ident] = NamedGraph(ident, parse_chains(nodes, chains), src, tuple(nodes.split()), chains)
    return table


_PARAM = re.compile(r"^(?:(P|C|K|S)(\d+)|K(\d+),(\d+))$")


def get(ident: str) -> NamedGraph:
    """Look up a named graph, or build a parametric one (``P5``, ``C6``, ``K4``, ``S3``, ``K3,3``)."""
    table = _table()
    if ident in table:
        return table[ident]
    m = _PARAM.match(ident)
    if m:
        kind, num, a, b = m.groups()
        if kind is None:
            g = complete_bipartite(int(a), int(b))
        else:
            g = {"P": path, "C": cycle, "K": complete, "S": star}[kind](int(num))
        return NamedGraph(ident, g, "parametric")
    raise UnknownId(ident)


def ids() -> list[str]:
    return list(_table())


def by_prefix(prefix: str = "") -> list[NamedGraph]:
    """Named graphs whose id starts with ``prefix`` (``L`` covers L1..L34), in catalog order."""
    return [ng for ident, ng in _table().items() if ident.startswith(prefix)]


def l_range(lo: int, hi: int) -> list[NamedGraph]:
    return [get(f"L{i}") for i in range(lo, hi + 1)]


def recorded(ident: str) -> tuple[tuple[int, ...], int]:
    for entry in _ENTRIES:
        if entry[0] == ident:
            return entry[4]
    raise UnknownId(ident)


@lru_cache(maxsize=None)
def _reverse() -> dict[CanonicalForm, str]:
    out: dict[CanonicalForm, str] = {}
    for ident, ng in _table().items():
        out.setdefault(canonical_form(ng.graph), ident)
    return out


def name_of(g: Graph) -> Optional[str]:
    """The first catalog id isomorphic to ``g``, if any."""
    return _reverse().get(canonical_form(g))


def validate() -> list[str]:
    """Transcription checks; returns a list of problems (empty when all hold)."""
    problems = []
    for ident, _src, _nodes, _chains, (degs, m) in _ENTRIES:
        g = get(ident).graph
        if tuple(degree_sequence(g)) != degs or g.num_edges != m:
            problems.append(f"{ident}: drawing gives degrees {degree_sequence(g)} and {g.num_edges} edges")
        if any(row == 0 for row in g.adj):
            problems.append(f"{ident}: isolated vertex")
    for a, b in IDENTITIES:
        if not are_isomorphic(get(a).graph, get(b).graph):
            problems.append(f"{a} is not isomorphic to {b}")
    return problems


def graph(ident: str) -> Graph:
    return get(ident).graph


def family(idents) -> "GraphFamily":
    """A :class:`GraphFamily` of catalog graphs, named by id."""
    from .families import GraphFamily

    idents = list(idents)
    return GraphFamily([get(i).graph for i in idents], idents)


BEINEKE_IDS = tuple(f"L{i}" for i in range(1, 10))

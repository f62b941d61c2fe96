"""Line-graph recognition by two independent routes.

``is_line_krausz`` searches for a partition of the edges into cliques with
every vertex in at most two of them. ``is_line_beineke`` looks for one of the
nine forbidden induced subgraphs. The two must always agree.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

from . import catalog
from .families import GraphFamily, witness_exist
from .graph import Edge, Graph, VertexSet, is_clique, members


@lru_cache(maxsize=1)
def beineke_family() -> GraphFamily:
    return catalog.family(catalog.BEINEKE_IDS)


def is_line_beineke(g: Graph) -> tuple[bool, Optional[tuple[str, VertexSet]]]:
    """``(True, None)`` for a line graph, else ``(False, (forbidden id, vertex set))``."""
    hit = witness_exist(g, beineke_family())
    if hit is None:
        return True, None
    idx, mask = hit
    return False, (beineke_family().name(idx), mask)


def _edge_bit(n: int, u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return 1 << (u * n + v)


def _clique_edges(n: int, clique: VertexSet) -> int:
    verts = members(clique)
    out = 0
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            out |= _edge_bit(n, u, v)
    return out


def is_line_krausz(g: Graph) -> tuple[bool, Optional[list[VertexSet]]]:
    """Search for a clique partition of the edges using each vertex at most twice.

    Branches on the lowest uncovered edge and tries every clique of uncovered
    edges through it, largest first. Maximal cliques alone are not enough: the
    diamond needs one triangle plus two single edges.
    """
    n = g.n
    uncovered_adj = list(g.adj)
    uses = [0] * n
    chosen: list[VertexSet] = []

    def lowest_edge() -> Optional[Edge]:
        for u in range(n):
            row = uncovered_adj[u] >> (u + 1)
            if row:
                return u, u + 1 + ((row & -row).bit_length() - 1)
        return None

    def extensions(clique: VertexSet, pool: VertexSet):
        # cliques of uncovered edges containing `clique`, extended from `pool`
        yield clique
        for x in members(pool):
            if uses[x] >= 2:
                continue
            later = pool & ~((1 << (x + 1)) - 1) & uncovered_adj[x]
            yield from extensions(clique | (1 << x), later)

    def feasible() -> bool:
        for v in range(n):
            if uncovered_adj[v] and uses[v] >= 2:
                return False
        return True

    def solve() -> bool:
        e = lowest_edge()
        if e is None:
            return True
        u, v = e
        if uses[u] >= 2 or uses[v] >= 2:
            return False
        pool = uncovered_adj[u] & uncovered_adj[v]
        options = sorted(extensions((1 << u) | (1 << v), pool), key=lambda c: -c.bit_count())
        for clique in options:
            for x in members(clique):
                uncovered_adj[x] &= ~clique
                uses[x] += 1
            chosen.append(clique)
            if feasible() and solve():
                return True
            chosen.pop()
            for x in members(clique):
                uses[x] -= 1
                uncovered_adj[x] |= g.adj[x] & clique
        return False

    if solve():
        return True, sorted(chosen)
    return False, None


def validate_krausz(g: Graph, partition: list[VertexSet]) -> list[str]:
    """Problems with a claimed partition; empty when it is valid."""
    problems = []
    n = g.n
    seen = 0
    count = [0] * n
    for c in partition:
        if c.bit_count() < 2:
            problems.append(f"{members(c)} has fewer than two vertices")
        if not is_clique(g, c):
            problems.append(f"{members(c)} is not a clique")
            continue
        edges = _clique_edges(n, c)
        if edges & seen:
            problems.append(f"{members(c)} reuses an edge")
        seen |= edges
        for x in members(c):
            count[x] += 1
    expected = 0
    for u, v in g.iter_edges():
        expected |= _edge_bit(n, u, v)
    if seen != expected:
        problems.append("partition does not cover every edge")
    for x, k in enumerate(count):
        if k > 2:
            problems.append(f"vertex {x} lies in {k} cliques")
    return problems


def line_graph(root: Graph) -> Graph:
    """Vertices are the edges of ``root``; two are adjacent when the edges share an end."""
    edges = root.edges()
    adj = []
    for a in edges:
        adj.append([j for j, b in enumerate(edges) if b != a and (set(a) & set(b))])
    return Graph.from_edges(len(edges), [(i, j) for i, row in enumerate(adj) for j in row if i < j])

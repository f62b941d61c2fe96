"""Critically H-exist graphs: every single-edge contraction destroys all copies
of the family, yet the graph itself contains one.

Besides the direct test this module carries the structural facts used to
prune the search: for any witness set ``S`` of a critical graph, the outside
vertices form an independent set and none of them is a corner dominated by a
vertex of ``S``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import NamedTuple, Optional

from .errors import BadWitness, LimitExceeded, NonEdge
from .families import GraphFamily, elm, is_exist, witness_exist
from .graph import (
    Edge,
    Graph,
    VertexSet,
    add_vertex,
    contract,
    contraction_image,
    induced,
    is_independent,
    members,
)
from .iso import all_induced, are_isomorphic, enumerate_upto

MAX_CRITICAL_ORDER = 9


def f_map(g: Graph, s: VertexSet, e: Edge) -> VertexSet:
    """Image of ``s`` in ``contract(g, e)``; the merged vertex stands in for either endpoint."""
    u, v = e
    if not g.has_edge(u, v):
        raise NonEdge(f"({u}, {v}) is not an edge")
    g._check_set(s)
    return contraction_image(g.n, e, s)


def _check_witness(g: Graph, s: VertexSet, h: Graph) -> None:
    if not are_isomorphic(induced(g, s), h):
        raise BadWitness(f"vertex set {members(s)} does not induce the given graph")


def is_critical_for(g: Graph, s: VertexSet, e: Edge, h: Graph) -> bool:
    """Whether contracting ``e`` destroys the copy of ``h`` induced by ``s`` (checked directly)."""
    _check_witness(g, s, h)
    image = f_map(g, s, e)
    return not are_isomorphic(induced(contract(g, e), image), h)


def is_critical_for_characterized(g: Graph, s: VertexSet, e: Edge, h: Graph) -> bool:
    """Same answer as :func:`is_critical_for`, from the closed-form conditions only.

    The edge is critical exactly when both ends lie in ``s``, or when one end
    ``x`` lies outside and is not a corner dominated by the inside end within
    ``g[s + x]``.
    """
    _check_witness(g, s, h)
    u, v = e
    if not g.has_edge(u, v):
        raise NonEdge(f"({u}, {v}) is not an edge")
    in_u, in_v = bool(s >> u & 1), bool(s >> v & 1)
    if in_u and in_v:
        return True
    if not in_u and not in_v:
        return False
    outside, inside = (u, v) if in_v else (v, u)
    local = s | (1 << outside)
    closed_out = (g.adj[outside] | (1 << outside)) & local
    closed_in = (g.adj[inside] | (1 << inside)) & local
    return closed_out & ~closed_in != 0


class WitnessConditions(NamedTuple):
    member: int
    witness: VertexSet
    independent_ok: bool
    corner_ok: bool


def _corner_free_outside(g: Graph, s: VertexSet) -> bool:
    outside = g.vertices & ~s
    for x in members(outside):
        local = s | (1 << x)
        closed_x = (g.adj[x] | (1 << x)) & local
        for y in members(g.adj[x] & s):
            if closed_x & ~((g.adj[y] | (1 << y)) & local) == 0:
                return False
    return True


def witness_conditions(g: Graph, fam: GraphFamily) -> list[WitnessConditions]:
    """For every induced copy of a minimal member: is the rest independent, and corner-free?

    Both flags must hold on every entry for a critically ``fam``-exist graph.
    """
    base = elm(fam)
    out = []
    for i, h in enumerate(base.members):
        for s in all_induced(g, h):
            out.append(WitnessConditions(i, s, is_independent(g, g.vertices & ~s), _corner_free_outside(g, s)))
    return out


def outside_violations(g: Graph, s: VertexSet) -> list[tuple[int, str]]:
    """Outside vertices whose neighborhood rules out criticality for witness ``s``.

    A vertex outside ``s`` is flagged when it is adjacent to exactly one vertex,
    to exactly two adjacent vertices, to exactly three vertices inducing a path
    or triangle, or to some vertex of degree ``n - 1``.
    """
    g._check_set(s)
    full_degree = g.n - 1
    out = []
    for x in members(g.vertices & ~s):
        nb = g.adj[x]
        size = nb.bit_count()
        inner_edges = sum((g.adj[y] & nb).bit_count() for y in members(nb)) // 2
        if size == 1:
            out.append((x, "exactly one vertex"))
        elif size == 2 and inner_edges == 1:
            out.append((x, "two adjacent vertices"))
        elif size == 3 and inner_edges >= 2:
            out.append((x, "three vertices inducing P3 or C3"))
        elif any(g.adj[y].bit_count() == full_degree for y in members(nb)):
            out.append((x, "adjacent to a vertex of full degree"))
    return out


@dataclass(frozen=True)
class CriticalReport:
    verdict: bool
    exist: bool
    witness: Optional[tuple[int, VertexSet]] = None
    failing_edge: Optional[Edge] = None
    # (member index, vertex set in the contracted graph) that survives failing_edge
    surviving: Optional[tuple[int, VertexSet]] = None
    reason: str = field(default="")


def is_critically_exist(g: Graph, fam: GraphFamily) -> CriticalReport:
    """Whether ``g`` contains a member of ``fam`` while every contraction is ``fam``-free.

    A failing report names the lexicographically first edge whose contraction
    still contains a member. Edgeless graphs never qualify.
    """
    witness = witness_exist(g, fam)
    if witness is None:
        return CriticalReport(False, False, reason="free")
    if g.num_edges == 0:
        return CriticalReport(False, True, witness, reason="edgeless")
    for e in g.iter_edges():
        survivor = witness_exist(contract(g, e), fam)
        if survivor is not None:
            return CriticalReport(False, True, witness, e, survivor, reason="contraction keeps a member")
    return CriticalReport(True, True, witness, reason="critical")


def _allowed_neighborhoods(h: Graph) -> list[VertexSet]:
    # an outside vertex must see some of S and must not be a corner dominated
    # by any of its neighbors inside S
    allowed = []
    for nb in range(1, 1 << h.n):
        if any(nb & ~(1 << y) & ~h.adj[y] == 0 for y in members(nb)):
            continue
        allowed.append(nb)
    return allowed


def _brute_critical(fam: GraphFamily, max_n: int) -> GraphFamily:
    found = [g for g in enumerate_upto(max_n, no_isolated=True) if is_critically_exist(g, fam).verdict]
    return GraphFamily(found)


def enumerate_critical(fam: GraphFamily, max_n: int, prune: bool = True) -> GraphFamily:
    """All critically ``fam``-exist graphs without isolated vertices on at most ``max_n`` vertices.

    The pruned search grows each minimal member by an independent set of new
    vertices whose neighborhoods lie inside the member and avoid dominated
    corners, then tests each candidate directly. ``prune=False`` filters every
    graph from the exhaustive generator instead.
    """
    if max_n > MAX_CRITICAL_ORDER:
        raise LimitExceeded(f"critical enumeration limited to n <= {MAX_CRITICAL_ORDER}")
    if not prune:
        if max_n > 8:
            raise LimitExceeded("unpruned critical enumeration limited to n <= 8")
        return _brute_critical(fam, max_n)
    found: list[Graph] = []
    for h in elm(fam).members:
        if h.n > max_n:
            continue
        allowed = _allowed_neighborhoods(h)
        for extra in range(0, max_n - h.n + 1):
            for combo in combinations_with_replacement(allowed, extra):
                g = h
                for nb in combo:
                    g = add_vertex(g, nb)
                if any(row == 0 for row in g.adj):
                    continue
                if outside_violations(g, h.vertices):
                    continue
                if is_critically_exist(g, fam).verdict:
                    found.append(g)
    return GraphFamily(found)


def contraction_keeps(g: Graph, fam: GraphFamily) -> list[Edge]:
    """Edges whose contraction leaves ``g`` ``fam``-exist."""
    return [e for e in g.iter_edges() if is_exist(contract(g, e), fam)]

"""Vertex splitting, the inverse of edge contraction, and the free-split sets.

Splitting ``v`` with sides ``U`` and ``W`` (``U | W == N(v)``) removes ``v``
and adds an adjacent pair ``u``, ``w`` with ``N(u) = U + w`` and
``N(w) = W + u``. Contracting ``uw`` gives the original graph back, so the
splittings of a family are exactly the graphs having a contraction in it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .errors import LimitExceeded, MalformedSpec, OutOfRange
from .families import GraphFamily, elm, is_free
from .graph import Graph, VertexSet, members
from .iso import automorphism_orbits

MAX_SPLIT_DEGREE = 16


@dataclass(frozen=True)
class SplitSpec:
    base: Graph
    v: int
    U: VertexSet
    W: VertexSet

    def __post_init__(self):
        if not 0 <= self.v < self.base.n:
            raise OutOfRange(f"vertex {self.v} outside 0..{self.base.n - 1}")
        if self.U | self.W != self.base.adj[self.v]:
            raise MalformedSpec(
                f"U | W must equal N({self.v}) = {members(self.base.adj[self.v])}"
            )

    @property
    def trivial(self) -> bool:
        """One side takes the whole neighborhood; such splits always contain the base."""
        nv = self.base.adj[self.v]
        return self.U == nv or self.W == nv


def _drop_vertex(mask: int, v: int) -> int:
    return (mask & ((1 << v) - 1)) | ((mask >> (v + 1)) << v)


def apply_split(spec: SplitSpec) -> Graph:
    """Build the split graph; ``u`` gets index ``n - 1`` and ``w`` gets index ``n``."""
    h, v = spec.base, spec.v
    n = h.n
    u_idx, w_idx = n - 1, n
    U = _drop_vertex(spec.U, v)
    W = _drop_vertex(spec.W, v)
    rows = []
    for x in range(n):
        if x == v:
            continue
        row = _drop_vertex(h.adj[x] & ~(1 << v), v)
        xi = x if x < v else x - 1
        if U >> xi & 1:
            row |= 1 << u_idx
        if W >> xi & 1:
            row |= 1 << w_idx
        rows.append(row)
    rows.append(U | (1 << w_idx))
    rows.append(W | (1 << u_idx))
    return Graph(n + 1, rows, check=False)


def split_edge(spec: SplitSpec) -> tuple[int, int]:
    """The new edge ``uw`` in the graph built by :func:`apply_split`."""
    return spec.base.n - 1, spec.base.n


def iter_specs(h: Graph, v: int, disjoint: bool = False) -> Iterator[SplitSpec]:
    """Every split of ``v``.

    By default each neighbor goes to ``U`` only, ``W`` only, or both
    (``3^deg`` covers). ``disjoint=True`` restricts to true bipartitions.
    """
    nbrs = members(h.adj[v])
    if len(nbrs) > MAX_SPLIT_DEGREE:
        raise LimitExceeded(f"degree {len(nbrs)} exceeds split limit {MAX_SPLIT_DEGREE}")
    choices = (0, 1) if disjoint else (0, 1, 2)
    for assign in product(choices, repeat=len(nbrs)):
        U = W = 0
        for x, side in zip(nbrs, assign):
            if side != 1:
                U |= 1 << x
            if side != 0:
                W |= 1 << x
        yield SplitSpec(h, v, U, W)


def splittings_of_vertex(h: Graph, v: int, disjoint: bool = False, skip_trivial: bool = False) -> GraphFamily:
    specs = iter_specs(h, v, disjoint)
    if skip_trivial:
        specs = (s for s in specs if not s.trivial)
    return GraphFamily(apply_split(s) for s in specs)


def splittings(h: Graph, orbit_reduce: bool = True, disjoint: bool = False, skip_trivial: bool = False) -> GraphFamily:
    """All graphs with a contraction isomorphic to ``h``, up to isomorphism.

    With ``orbit_reduce`` only one vertex per automorphism orbit is split;
    similar vertices have identical splitting sets.
    """
    if orbit_reduce:
        verts = automorphism_orbits(h).representatives()
    else:
        verts = range(h.n)
    out: list[Graph] = []
    for v in verts:
        out.extend(splittings_of_vertex(h, v, disjoint, skip_trivial).members)
    return GraphFamily(out)


def splittings_family(fam: GraphFamily, skip_trivial: bool = False) -> GraphFamily:
    out: list[Graph] = []
    for h in fam.members:
        out.extend(splittings(h, skip_trivial=skip_trivial).members)
    return GraphFamily(out)


@lru_cache(maxsize=64)
def free_split_set(fam: GraphFamily, prune: bool = True) -> GraphFamily:
    """Graphs that contract onto a member of ``fam`` while being ``fam``-free.

    ``prune`` skips splits in which one side is the whole neighborhood; those
    contain the base graph and can never be free.
    """
    base = elm(fam)
    candidates = splittings_family(base, skip_trivial=prune)
    return candidates.filter(lambda g: is_free(g, fam))

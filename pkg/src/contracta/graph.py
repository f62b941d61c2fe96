"""Immutable simple graphs on at most 64 vertices, stored as neighbor bitsets.

Vertices are ``0..n-1``. A vertex set is a plain ``int`` bitmask (bit ``i`` set
means vertex ``i`` is a member); :func:`vset` and :func:`members` convert
between masks and vertex lists.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import NonEdge, OutOfRange

MAX_ORDER = 64

VertexSet = int
Edge = tuple[int, int]


def vset(vertices: Iterable[int]) -> VertexSet:
    """Build a vertex-set bitmask from an iterable of vertex ids."""
    mask = 0
    for v in vertices:
        if v < 0:
            raise OutOfRange(f"negative vertex {v}")
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Vertex ids contained in ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """Immutable simple undirected graph.

    ``adj[v]`` is the neighbor bitmask of ``v``. Construction checks that the
    rows are symmetric, loop-free and confined to ``0..n-1``.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int], *, check: bool = True):
        if check:
            if not 0 <= n <= MAX_ORDER:
                raise OutOfRange(f"order {n} outside 0..{MAX_ORDER}")
            if len(adj) != n:
                raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
            full = (1 << n) - 1
            for u, row in enumerate(adj):
                if row & ~full:
                    raise OutOfRange(f"row {u} references a vertex >= {n}")
                if row >> u & 1:
                    raise ValueError(f"self-loop at vertex {u}")
                for v in members(row):
                    if not adj[v] >> u & 1:
                        raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_hash", hash((n, self.adj)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        """Build a graph from an edge list; repeated edges collapse."""
        if not 0 <= n <= MAX_ORDER:
            raise OutOfRange(f"order {n} outside 0..{MAX_ORDER}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, check=False)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [0] * n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def edges(self) -> list[Edge]:
        """All edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def iter_edges(self) -> Iterator[Edge]:
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            while row:
                low = row & -row
                yield u, low.bit_length() - 1
                row ^= low

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise OutOfRange(f"vertex {v} outside 0..{self.n - 1}")

    def _check_set(self, s: VertexSet) -> None:
        if s < 0 or s >> self.n:
            raise OutOfRange(f"vertex set {s:#x} has bits outside 0..{self.n - 1}")


def _squeeze(mask: int, a: int, b: int) -> int:
    """Drop bit positions ``a < b`` from ``mask`` and close the gaps."""
    low = mask & ((1 << a) - 1)
    mid = (mask >> (a + 1)) & ((1 << (b - a - 1)) - 1)
    high = mask >> (b + 1)
    return low | (mid << a) | (high << (b - 1))


def contraction_image(n: int, e: Edge, s: VertexSet) -> VertexSet:
    """Where the vertex set ``s`` of an ``n``-vertex graph lands after contracting ``e``.

    Survivors keep their relative order and the merged vertex is ``n - 2``; if
    ``s`` meets either endpoint, the merged vertex replaces it.
    """
    a, b = sorted(e)
    ends = (1 << a) | (1 << b)
    out = _squeeze(s & ~ends, a, b)
    if s & ends:
        out |= 1 << (n - 2)
    return out


def contract(g: Graph, e: Edge) -> Graph:
    """Contract the edge ``e``.

    The merged vertex is adjacent to the union of the two endpoint
    neighborhoods and takes the last index; every other vertex keeps its
    relative position.
    """
    u, v = e
    g._check_vertex(u)
    g._check_vertex(v)
    if not g.adj[u] >> v & 1:
        raise NonEdge(f"({u}, {v}) is not an edge")
    a, b = (u, v) if u < v else (v, u)
    ends = (1 << a) | (1 << b)
    n = g.n
    merged_bit = 1 << (n - 2)
    rows = []
    for x in range(n):
        if x == a or x == b:
            continue
        row = g.adj[x]
        new = _squeeze(row & ~ends, a, b)
        if row & ends:
            new |= merged_bit
        rows.append(new)
    rows.append(_squeeze((g.adj[a] | g.adj[b]) & ~ends, a, b))
    return Graph(n - 1, rows, check=False)


def induced(g: Graph, s: VertexSet) -> Graph:
    """Subgraph induced by ``s``, vertices renumbered in ascending order."""
    g._check_set(s)
    verts = members(s)
    pos = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        for w in members(g.adj[v] & s):
            row |= 1 << pos[w]
        rows.append(row)
    return Graph(len(verts), rows, check=False)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertices")
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        for w in members(g.adj[v]):
            row |= 1 << perm[w]
        rows[perm[v]] = row
    return Graph(g.n, rows, check=False)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = [row << g.n for row in h.adj]
    return Graph(g.n + h.n, list(g.adj) + shifted)


def add_vertex(g: Graph, neighbors: VertexSet) -> Graph:
    """Append a new vertex ``g.n`` adjacent to ``neighbors``."""
    g._check_set(neighbors)
    bit = 1 << g.n
    rows = [row | bit if neighbors >> v & 1 else row for v, row in enumerate(g.adj)]
    rows.append(neighbors)
    return Graph(g.n + 1, rows, check=False)


def neighborhood(g: Graph, v: int) -> VertexSet:
    g._check_vertex(v)
    return g.adj[v]


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    g._check_vertex(v)
    return g.adj[v] | (1 << v)


def set_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    """Vertices outside ``s`` adjacent to some vertex of ``s``."""
    g._check_set(s)
    out = 0
    for v in members(s):
        out |= g.adj[v]
    return out & ~s


def closed_set_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    return set_neighborhood(g, s) | s


def is_corner_dominated(g: Graph, u: int, v: int) -> bool:
    """True when ``N[u]`` is contained in ``N[v]``."""
    if u == v:
        raise ValueError("a vertex is not compared with itself")
    nu = closed_neighborhood(g, u)
    nv = closed_neighborhood(g, v)
    return nu & ~nv == 0


def is_independent(g: Graph, s: VertexSet) -> bool:
    g._check_set(s)
    return all(g.adj[v] & s == 0 for v in members(s))


def _max_independent(adj: Sequence[int], cand: int) -> int:
    best = 0
    # vertices with no neighbor left among the candidates always join
    while cand:
        free = 0
        for v in members(cand):
            if adj[v] & cand == 0:
                free |= 1 << v
        if not free:
            break
        best += free.bit_count()
        cand &= ~free
    if not cand:
        return best
    v = max(members(cand), key=lambda x: (adj[x] & cand).bit_count())
    take = 1 + _max_independent(adj, cand & ~adj[v] & ~(1 << v))
    skip = _max_independent(adj, cand & ~(1 << v))
    return best + max(take, skip)


def independence_number(g: Graph) -> int:
    return _max_independent(g.adj, g.vertices)


def max_degree(g: Graph) -> int:
    return max((row.bit_count() for row in g.adj), default=0)


def degree_sequence(g: Graph) -> list[int]:
    """Vertex degrees sorted ascending."""
    return sorted(row.bit_count() for row in g.adj)


def has_isolated(g: Graph) -> bool:
    return any(row == 0 for row in g.adj)


def complement(g: Graph) -> Graph:
    full = g.vertices
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)], check=False)


def is_clique(g: Graph, s: VertexSet) -> bool:
    g._check_set(s)
    return all(s & ~(g.adj[v] | (1 << v)) == 0 for v in members(s))


def subsets_of_size(n: int, k: int) -> Iterator[VertexSet]:
    for combo in combinations(range(n), k):
        yield vset(combo)

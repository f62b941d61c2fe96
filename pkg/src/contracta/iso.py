"""Isomorphism, canonical forms, automorphism orbits, induced-subgraph search and
exhaustive generation of small graphs.

The canonical form of a graph is the lexicographically smallest upper-triangle
adjacency string over the leaves of an individualization/refinement search
tree. Automorphisms discovered while searching prune the tree and are returned
as generators of the automorphism group.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .graph import Graph, VertexSet, add_vertex, degree_sequence, members, relabel, vset

Perm = tuple[int, ...]


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Order plus the canonical upper-triangle adjacency bits (row-major, as an int)."""

    n: int
    code: int

    @property
    def bitstring(self) -> str:
        width = self.n * (self.n - 1) // 2
        return format(self.code, f"0{width}b") if width else ""


@dataclass(frozen=True)
class OrbitPartition:
    classes: tuple[tuple[int, ...], ...]
    generators: tuple[Perm, ...]

    def orbit_of(self, v: int) -> tuple[int, ...]:
        for cls in self.classes:
            if v in cls:
                return cls
        raise KeyError(v)

    def similar(self, u: int, v: int) -> bool:
        return v in self.orbit_of(u)

    def representatives(self) -> list[int]:
        return [cls[0] for cls in self.classes]


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    # equitable refinement; fragments replace their cell in place so singleton
    # positions never move
    while True:
        masks = [vset(c) for c in cells]
        new: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                new.append(cell)
                continue
            changed = True
            for key in keys:
                new.append([v for v in cell if sig[v] == key])
        cells = new
        if not changed:
            return cells


def _initial_cells(g: Graph) -> list[list[int]]:
    adj = g.adj
    deg = [row.bit_count() for row in adj]
    key = {v: (deg[v], tuple(sorted(deg[w] for w in members(adj[v])))) for v in range(g.n)}
    return [[v for v in range(g.n) if key[v] == k] for k in sorted(set(key.values()))]


def _code(adj: Sequence[int], perm: Sequence[int]) -> int:
    n = len(perm)
    code = 0
    for i in range(n):
        row = adj[perm[i]]
        for j in range(i + 1, n):
            code = (code << 1) | (row >> perm[j] & 1)
    return code


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


class _CanonSearch:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.first_code: Optional[int] = None
        self.best_code: Optional[int] = None
        self.best_perm: Optional[Perm] = None
        self.leaves: dict[int, Perm] = {}
        self.generators: list[Perm] = []

    def run(self, g: Graph) -> None:
        cells = _refine(self.adj, _initial_cells(g))
        self._search(cells, (), True)

    def _leaf(self, perm: Perm, first: bool) -> bool:
        code = _code(self.adj, perm)
        if self.first_code is None:
            self.first_code = self.best_code = code
            self.best_perm = perm
            self.leaves[code] = perm
            return False
        seen = self.leaves.get(code)
        if seen is not None:
            gamma = [0] * self.n
            for a, b in zip(seen, perm):
                gamma[a] = b
            gamma_t = tuple(gamma)
            if gamma_t != tuple(range(self.n)) and gamma_t not in self.generators:
                self.generators.append(gamma_t)
            # a leaf equivalent to the first one proves this whole branch is an
            # automorphic image of the first path's branch
            return code == self.first_code
        self.leaves[code] = perm
        if code < self.best_code:
            self.best_code = code
            self.best_perm = perm
        return False

    def _orbit_roots(self, prefix: tuple[int, ...]) -> _UnionFind:
        uf = _UnionFind(self.n)
        for gen in self.generators:
            if all(gen[v] == v for v in prefix):
                for v in range(self.n):
                    uf.union(v, gen[v])
        return uf

    def _search(self, cells: list[list[int]], prefix: tuple[int, ...], first: bool) -> bool:
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            return self._leaf(tuple(c[0] for c in cells), first)
        target = cells[idx]
        explored: list[int] = []
        for w in target:
            if explored:
                uf = self._orbit_roots(prefix)
                root = uf.find(w)
                if any(uf.find(x) == root for x in explored):
                    continue
            child = cells[:idx] + [[w], [x for x in target if x != w]] + cells[idx + 1:]
            child = _refine(self.adj, child)
            child_first = first and not explored
            abandon = self._search(child, prefix + (w,), child_first)
            explored.append(w)
            if abandon and not first:
                return True
        return False


@dataclass(frozen=True)
class _Canon:
    form: CanonicalForm
    perm: Perm  # perm[i] = vertex placed at canonical position i
    generators: tuple[Perm, ...]


@lru_cache(maxsize=250_000)
def _canon(g: Graph) -> _Canon:
    if g.n == 0:
        return _Canon(CanonicalForm(0, 0), (), ())
    search = _CanonSearch(g)
    search.run(g)
    return _Canon(CanonicalForm(g.n, search.best_code), search.best_perm, tuple(search.generators))


def canonical_form(g: Graph) -> CanonicalForm:
    """Isomorphism-invariant form: equal forms iff the graphs are isomorphic."""
    return _canon(g).form


def canonical_labeling(g: Graph) -> Perm:
    """``perm[i]`` is the vertex that sits at canonical position ``i``."""
    return _canon(g).perm


def canonical_graph(g: Graph) -> Graph:
    """``g`` relabeled into its canonical ordering."""
    perm = _canon(g).perm
    lab = [0] * g.n
    for i, v in enumerate(perm):
        lab[v] = i
    return relabel(g, lab)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if degree_sequence(g) != degree_sequence(h):
        return False
    return canonical_form(g) == canonical_form(h)


def isomorphism(g: Graph, h: Graph) -> Optional[dict[int, int]]:
    """A vertex map from ``g`` onto ``h`` preserving adjacency, or None."""
    if not are_isomorphic(g, h):
        return None
    return dict(zip(canonical_labeling(g), canonical_labeling(h)))


def automorphism_generators(g: Graph) -> tuple[Perm, ...]:
    return _canon(g).generators


def _orbits_from(n: int, gens: Sequence[Perm]) -> tuple[tuple[int, ...], ...]:
    uf = _UnionFind(n)
    for gen in gens:
        for v in range(n):
            uf.union(v, gen[v])
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(uf.find(v), []).append(v)
    return tuple(sorted(tuple(grp) for grp in groups.values()))


def automorphism_orbits(g: Graph) -> OrbitPartition:
    gens = automorphism_generators(g)
    return OrbitPartition(_orbits_from(g.n, gens), gens)


def apply_perm(perm: Perm, s: VertexSet) -> VertexSet:
    out = 0
    for v in members(s):
        out |= 1 << perm[v]
    return out


# -- induced subgraph search -------------------------------------------------

def _pattern_order(h: Graph) -> list[int]:
    # connected-first order keeps candidate sets narrow early
    deg = [row.bit_count() for row in h.adj]
    remaining = set(range(h.n))
    order: list[int] = []
    placed = 0
    while remaining:
        v = max(remaining, key=lambda x: ((h.adj[x] & placed).bit_count(), deg[x], -x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def _embeddings(g: Graph, h: Graph) -> Iterator[dict[int, int]]:
    if h.n > g.n:
        return
    order = _pattern_order(h)
    pos = {v: i for i, v in enumerate(order)}
    k = h.n
    hdeg = [h.adj[v].bit_count() for v in order]
    gdeg = [row.bit_count() for row in g.adj]
    by_min_degree = []
    for d in hdeg:
        m = 0
        for x in range(g.n):
            if gdeg[x] >= d:
                m |= 1 << x
        by_min_degree.append(m)
    prev_nbrs = []
    prev_non = []
    for i, v in enumerate(order):
        nb = [pos[w] for w in members(h.adj[v]) if pos[w] < i]
        prev_nbrs.append(nb)
        prev_non.append([j for j in range(i) if j not in nb])
    image = [0] * k
    adj = g.adj

    def extend(i: int, used: int) -> Iterator[None]:
        if i == k:
            yield None
            return
        cand = by_min_degree[i] & ~used
        for j in prev_nbrs[i]:
            cand &= adj[image[j]]
        for j in prev_non[i]:
            cand &= ~adj[image[j]]
        while cand:
            low = cand & -cand
            cand ^= low
            image[i] = low.bit_length() - 1
            yield from extend(i + 1, used | low)

    for _ in extend(0, 0):
        yield {order[i]: image[i] for i in range(k)}


def find_induced(g: Graph, h: Graph) -> Optional[dict[int, int]]:
    """An induced embedding of ``h`` into ``g`` (``h``-vertex to ``g``-vertex), or None."""
    if h.n > g.n or h.num_edges > g.num_edges:
        return None
    return next(_embeddings(g, h), None)


def all_induced(g: Graph, h: Graph) -> list[VertexSet]:
    """Every vertex set of ``g`` inducing a copy of ``h``, sorted."""
    found = {vset(emb.values()) for emb in _embeddings(g, h)}
    return sorted(found)


# -- exhaustive generation ---------------------------------------------------

@lru_cache(maxsize=None)
def _generate(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, []),)
    out: list[tuple[int, int, Graph]] = []
    for parent in _generate(n - 1):
        gens = automorphism_generators(parent)
        seen: set[int] = set()
        for s in range(1 << (n - 1)):
            if s in seen:
                continue
            stack = [s]
            seen.add(s)
            while stack:
                cur = stack.pop()
                for gen in gens:
                    img = apply_perm(gen, cur)
                    if img not in seen:
                        seen.add(img)
                        stack.append(img)
            child = add_vertex(parent, s)
            info = _canon(child)
            last = info.perm[-1]
            if last != n - 1:
                orbits = _orbits_from(n, info.generators)
                if not any(n - 1 in cls and last in cls for cls in orbits):
                    continue
            canon = canonical_graph(child)
            out.append((canon.num_edges, info.form.code, canon))
    out.sort(key=lambda t: (t[0], t[1]))
    return tuple(g for _, _, g in out)


def enumerate_graphs(n: int, no_isolated: bool = False) -> Iterator[Graph]:
    """One canonical representative of every isomorphism class on ``n`` vertices.

    Order is deterministic: by edge count, then canonical code.
    """
    if n < 0:
        raise ValueError("order must be non-negative")
    for g in _generate(n):
        if no_isolated and any(row == 0 for row in g.adj):
            continue
        yield g


def enumerate_upto(max_n: int, no_isolated: bool = False, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_graphs(n, no_isolated)


def brute_force_classes(n: int) -> list[Graph]:
    """Labeled brute force over all ``2^(n choose 2)`` graphs, deduplicated by canonical form."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    found: dict[CanonicalForm, Graph] = {}
    for bits in range(1 << len(pairs)):
        g = Graph.from_edges(n, (p for k, p in enumerate(pairs) if bits >> k & 1))
        found.setdefault(canonical_form(g), g)
    return list(found.values())

"""Finite families of forbidden graphs, kept up to isomorphism."""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .graph import Graph, VertexSet, max_degree, vset
from .iso import CanonicalForm, canonical_form, find_induced


class GraphFamily:
    """A finite set of pairwise non-isomorphic graphs.

    Members are sorted by ``(order, canonical code)``; isomorphic duplicates are
    dropped silently, keeping the first name seen. ``names`` carries an optional
    label per member for reporting.
    """

    __slots__ = ("members", "names", "forms", "_index")

    def __init__(self, graphs: Iterable[Graph] = (), names: Optional[Iterable[Optional[str]]] = None):
        graphs = list(graphs)
        labels = list(names) if names is not None else [None] * len(graphs)
        if len(labels) != len(graphs):
            raise ValueError("names must match graphs one to one")
        by_form: dict[CanonicalForm, tuple[Graph, Optional[str]]] = {}
        for g, name in zip(graphs, labels):
            form = canonical_form(g)
            if form not in by_form:
                by_form[form] = (g, name)
            elif by_form[form][1] is None and name is not None:
                by_form[form] = (by_form[form][0], name)
        forms = sorted(by_form, key=lambda f: (f.n, f.code))
        self.forms: tuple[CanonicalForm, ...] = tuple(forms)
        self.members: tuple[Graph, ...] = tuple(by_form[f][0] for f in forms)
        self.names: tuple[Optional[str], ...] = tuple(by_form[f][1] for f in forms)
        self._index = {f: i for i, f in enumerate(forms)}

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.members)

    def __contains__(self, g: Graph) -> bool:
        return canonical_form(g) in self._index

    def index_of(self, g: Graph) -> Optional[int]:
        return self._index.get(canonical_form(g))

    def name(self, i: int) -> str:
        return self.names[i] or f"#{i}"

    def __eq__(self, other) -> bool:
        if not isinstance(other, GraphFamily):
            return NotImplemented
        return self.forms == other.forms

    def __hash__(self) -> int:
        return hash(self.forms)

    def __repr__(self) -> str:
        return f"GraphFamily({[self.name(i) for i in range(len(self))]})"

    def issubset(self, other: GraphFamily) -> bool:
        return set(self.forms) <= set(other.forms)

    def filter(self, keep) -> GraphFamily:
        pairs = [(g, n) for g, n in zip(self.members, self.names) if keep(g)]
        return GraphFamily([g for g, _ in pairs], [n for _, n in pairs])

    def union(self, other: GraphFamily) -> GraphFamily:
        return GraphFamily(self.members + other.members, self.names + other.names)


def _may_embed(g: Graph, h: Graph) -> bool:
    return h.n <= g.n and h.num_edges <= g.num_edges and max_degree(h) <= max_degree(g)


def witness_exist(g: Graph, fam: GraphFamily) -> Optional[tuple[int, VertexSet]]:
    """First member (by family order) that ``g`` contains as an induced subgraph.

    Returns ``(member index, vertex set of g inducing it)`` or None when ``g``
    is free of the family.
    """
    for i, h in enumerate(fam.members):
        if not _may_embed(g, h):
            continue
        emb = find_induced(g, h)
        if emb is not None:
            return i, vset(emb.values())
    return None


def is_free(g: Graph, fam: GraphFamily) -> bool:
    return witness_exist(g, fam) is None


def is_exist(g: Graph, fam: GraphFamily) -> bool:
    return witness_exist(g, fam) is not None


def elm(fam: GraphFamily) -> GraphFamily:
    """The minimal members: those containing no other member as an induced subgraph."""
    keep = []
    for i, h in enumerate(fam.members):
        dominated = any(
            j != i and _may_embed(h, other) and find_induced(h, other) is not None
            for j, other in enumerate(fam.members)
        )
        keep.append(not dominated)
    return GraphFamily(
        [g for g, k in zip(fam.members, keep) if k],
        [n for n, k in zip(fam.names, keep) if k],
    )

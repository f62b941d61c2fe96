"""Stability of freeness under contraction.

For a family ``H``, a graph that avoids every free-split graph of ``H`` and is
not itself critically ``H``-exist is ``H``-free exactly when all of its
single-edge contractions are. :func:`certify` decides whether that statement
applies to a graph and reports both sides of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import catalog
from .critical import is_critically_exist
from .errors import NotFree
from .families import GraphFamily, elm, is_free, witness_exist
from .graph import Edge, Graph, VertexSet, contract
from .splitting import free_split_set


def is_strongly_free(g: Graph, fam: GraphFamily) -> bool:
    """``g`` is ``fam``-free and so is every single-edge contraction of it."""
    if not is_free(g, fam):
        return False
    return all(is_free(contract(g, e), fam) for e in g.iter_edges())


def strongly_free_via_free_split(g: Graph, fam: GraphFamily) -> bool:
    """For a ``fam``-free graph, strong freeness read off as avoiding the free-split set."""
    if not is_free(g, fam):
        raise NotFree("graph contains a member of the family")
    return is_free(g, free_split_set(elm(fam)))


@dataclass(frozen=True)
class CertifyVerdict:
    applicable: bool
    reason: str  # "fs-witness", "critical" or "stable"
    g_is_free: bool
    all_contractions_free: bool
    counterexample_edge: Optional[Edge] = None
    witness_name: Optional[str] = None
    witness_set: Optional[VertexSet] = None
    critical_match: Optional[str] = None

    def summary(self) -> str:
        if self.reason == "fs-witness":
            return f"not applicable: FS-witness {self.witness_name}"
        if self.reason == "critical":
            return f"not applicable: critical {self.critical_match or 'graph'}"
        return (
            f"applicable: free={str(self.g_is_free).lower()} "
            f"contractions-free={str(self.all_contractions_free).lower()}"
        )


def certify(g: Graph, fam: GraphFamily) -> CertifyVerdict:
    """Check whether the stability statement covers ``g`` and evaluate both sides."""
    g_free = is_free(g, fam)
    contracted = [(e, is_free(contract(g, e), fam)) for e in g.iter_edges()]
    all_free = all(free for _, free in contracted)
    # first edge whose contraction changes the answer
    flip = next((e for e, free in contracted if free != g_free), None)
    fs = free_split_set(elm(fam))
    hit = witness_exist(g, fs)
    if hit is not None:
        idx, mask = hit
        h = fs.members[idx]
        name = catalog.name_of(h) or fs.name(idx)
        return CertifyVerdict(False, "fs-witness", g_free, all_free, flip, name, mask)
    if is_critically_exist(g, fam).verdict:
        return CertifyVerdict(False, "critical", g_free, all_free, flip, critical_match=catalog.name_of(g))
    return CertifyVerdict(True, "stable", g_free, all_free, flip)

"""Executable reproduction of the splitting, claw, line-graph and criticality results.

Each check yields one ``PASS``/``FAIL`` line. Sweeps run over every graph up to
``max_n`` vertices (7 by default; 8 is allowed but slow).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from . import catalog
from .certify import is_strongly_free, strongly_free_via_free_split
from .critical import (
    enumerate_critical,
    is_critical_for,
    is_critical_for_characterized,
    is_critically_exist,
    outside_violations,
    witness_conditions,
)
from .errors import LimitExceeded
from .families import GraphFamily, elm, is_exist, is_free
from .graph import Graph, contract
from .iso import all_induced, are_isomorphic, automorphism_orbits, canonical_form, enumerate_graphs, enumerate_upto
from .linegraph import is_line_beineke, is_line_krausz
from .splitting import apply_split, free_split_set, iter_specs, split_edge, splittings, splittings_of_vertex

SECTIONS = ("splitting", "claw", "line", "critical")
MAX_SWEEP = 8

LINE_SPLIT_LISTS = {
    1: [14],
    2: [15, 16],
    3: [22, 23],
    4: [24, 25],
    5: [17, 26, 27, 28],
    6: [18, 19, 33],
    7: [29, 30, 31, 32],
    8: [20, 21],
    9: [34],
}
CRITICAL_NON_LINE = ["L1", "L2"] + [f"L{i}" for i in range(4, 14)]


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        head = f"{'PASS' if self.ok else 'FAIL'} {self.name}"
        return f"{head}: {self.detail}" if self.detail else head


def workers() -> int:
    """Worker processes for the sweeps, from ``CONTRACTA_THREADS`` (default 1)."""
    try:
        return max(1, int(os.environ.get("CONTRACTA_THREADS", "1")))
    except ValueError:
        return 1


def _count_failures(pred: Callable[[Graph], bool], graphs: Iterable[Graph]) -> int:
    graphs = list(graphs)
    n = workers()
    if n == 1 or len(graphs) < 200:
        return sum(1 for g in graphs if not pred(g))
    with ProcessPoolExecutor(n) as pool:
        return sum(1 for ok in pool.map(pred, graphs, chunksize=64) if not ok)


def _names(fam: GraphFamily, pool: Sequence[str]) -> list[str]:
    lookup = {canonical_form(catalog.graph(i)): i for i in pool}
    return [lookup.get(f, "?") for f in fam.forms]


def _same(label: str, got: GraphFamily, want: GraphFamily, pool: Sequence[str]) -> Check:
    if got == want:
        return Check(label, True)
    return Check(label, False, f"got {_names(got, pool)}")


def _check_sweep(max_n: int) -> None:
    if max_n > MAX_SWEEP:
        raise LimitExceeded(f"sweeps are limited to n <= {MAX_SWEEP}")


# splitting


def _split_inverse(h: Graph) -> bool:
    for v in range(h.n):
        for spec in iter_specs(h, v):
            if not are_isomorphic(contract(apply_split(spec), split_edge(spec)), h):
                return False
    return True


def _similar_same(h: Graph) -> bool:
    for orbit in automorphism_orbits(h).classes:
        first = splittings_of_vertex(h, orbit[0])
        if any(splittings_of_vertex(h, v) != first for v in orbit[1:]):
            return False
    return True


def _trivial_not_free(h: Graph) -> bool:
    fam = GraphFamily([h])
    for v in range(h.n):
        for spec in iter_specs(h, v):
            low_degree = h.adj[v].bit_count() <= 1
            if (spec.trivial or low_degree) and is_free(apply_split(spec), fam):
                return False
    return True


def _split_complete(h: Graph) -> bool:
    brute = [g for g in enumerate_graphs(h.n + 1) if any(are_isomorphic(contract(g, e), h) for e in g.iter_edges())]
    return splittings(h) == GraphFamily(brute)


def verify_splitting_section(max_n: int = 7) -> list[Check]:
    _check_sweep(max_n)
    out = []
    bad = [k for k in range(3, 9) if free_split_set(GraphFamily([catalog.cycle(k)])) != GraphFamily([catalog.cycle(k + 1)])]
    out.append(Check("cycle free-split is the next cycle C3..C8", not bad, f"fails at {bad}" if bad else ""))
    bad = [k for k in range(2, 9) if len(free_split_set(GraphFamily([catalog.path(k)]))) != 0]
    out.append(Check("paths have no free-split graphs P2..P8", not bad, f"fails at {bad}" if bad else ""))
    small = list(enumerate_upto(min(max_n, 5)))
    for label, pred in (
        ("splitting inverts contraction n<=5", _split_inverse),
        ("similar vertices give equal splittings n<=5", _similar_same),
        ("whole-neighborhood and degree-one splits are never free n<=5", _trivial_not_free),
        ("splitting completeness against brute force n<=5", _split_complete),
    ):
        failures = _count_failures(pred, small)
        out.append(Check(label, failures == 0, f"{failures} graphs fail" if failures else ""))
    return out


# claw


@lru_cache(maxsize=None)
def _claw_family() -> GraphFamily:
    return catalog.family(["claw"])


@lru_cache(maxsize=None)
def _ce_family() -> GraphFamily:
    return catalog.family([f"CE{i}" for i in range(1, 7)])


def _stability_holds(g: Graph, fam: GraphFamily, fs: GraphFamily, excluded: GraphFamily) -> bool:
    if is_exist(g, fs) or g in excluded:
        return True
    return is_free(g, fam) == all(is_free(contract(g, e), fam) for e in g.iter_edges())


def _claw_stability(g: Graph) -> bool:
    return _stability_holds(g, _claw_family(), _bull_family(), _ce_family())


@lru_cache(maxsize=None)
def _bull_family() -> GraphFamily:
    return catalog.family(["bull"])


def _claw_strong(g: Graph) -> bool:
    fam = _claw_family()
    if not is_free(g, fam):
        return True
    return strongly_free_via_free_split(g, fam) == is_strongly_free(g, fam)


def verify_claw_section(max_n: int = 7) -> list[Check]:
    _check_sweep(max_n)
    claw = _claw_family()
    cs_ids = [f"CS{i}" for i in range(1, 7)]
    ce_ids = [f"CE{i}" for i in range(1, 7)]
    out = [
        _same("claw-split graphs are CS1..CS6", splittings(catalog.graph("claw")), catalog.family(cs_ids), cs_ids),
        _same("bull is the only claw-free-split graph", free_split_set(claw), catalog.family(["bull"]), ["bull"]),
        _same(f"critically claw-exist graphs n<={max_n} (pruned search)", enumerate_critical(claw, max_n), _ce_family(), ce_ids),
        _same(f"critically claw-exist graphs n<={max_n} (exhaustive filter)", enumerate_critical(claw, max_n, prune=False), _ce_family(), ce_ids),
    ]
    graphs = list(enumerate_upto(max_n, no_isolated=True))
    failures = _count_failures(_claw_stability, graphs)
    out.append(Check(f"claw-freeness is contraction-stable off bull and CE n<={max_n}", failures == 0, f"{failures} counterexamples" if failures else ""))
    failures = _count_failures(_claw_strong, graphs)
    out.append(Check(f"strongly claw-free iff bull-free n<={max_n}", failures == 0, f"{failures} counterexamples" if failures else ""))
    return out


# line graphs


@lru_cache(maxsize=None)
def _line_families() -> tuple[GraphFamily, GraphFamily, GraphFamily]:
    fs = catalog.family([f"L{i}" for i in range(14, 22)])
    return catalog.family(catalog.BEINEKE_IDS), fs, catalog.family(CRITICAL_NON_LINE)


def _line_stability(g: Graph) -> bool:
    return _stability_holds(g, *_line_families())


def _recognizers_agree(g: Graph) -> bool:
    return is_line_beineke(g)[0] == is_line_krausz(g)[0]


def verify_line_section(max_n: int = 7) -> list[Check]:
    _check_sweep(max_n)
    beineke = catalog.family(catalog.BEINEKE_IDS)
    upper = [f"L{i}" for i in range(14, 35)]
    out = []
    rejected = [i for i in catalog.BEINEKE_IDS if is_line_krausz(catalog.graph(i))[0] or is_line_beineke(catalog.graph(i))[0]]
    accepted = [i for i in upper if not (is_line_krausz(catalog.graph(i))[0] and is_line_beineke(catalog.graph(i))[0])]
    out.append(Check("L1..L9 non-line by both recognizers", not rejected, f"accepted {rejected}" if rejected else ""))
    out.append(Check("L14..L34 line by both recognizers", not accepted, f"rejected {accepted}" if accepted else ""))
    failures = _count_failures(_recognizers_agree, enumerate_upto(max_n))
    out.append(Check(f"Krausz and Beineke recognizers agree n<={max_n}", failures == 0, f"{failures} disagreements" if failures else ""))

    want = [f"L{i}" for i in range(14, 22)]
    out.append(_same("minimal line-split graphs are L14..L21", elm(catalog.family(upper)), catalog.family(want), upper))

    all_l = [f"L{i}" for i in range(1, 35)]
    critical = [i for i in all_l if is_critically_exist(catalog.graph(i), beineke).verdict]
    out.append(Check("critically non-line catalog graphs are L1, L2, L4..L13", critical == CRITICAL_NON_LINE, f"got {critical}" if critical != CRITICAL_NON_LINE else ""))
    l3 = catalog.graph("L3")
    to_l2 = [e for e in l3.iter_edges() if are_isomorphic(contract(l3, e), catalog.graph("L2"))]
    out.append(Check("L3 contracts to L2", bool(to_l2), f"edge {to_l2[0]}" if to_l2 else "no such edge"))

    bad = []
    for i, want_ids in LINE_SPLIT_LISTS.items():
        fs = free_split_set(catalog.family([f"L{i}"]))
        line_members = fs.filter(lambda g: is_free(g, beineke))
        if line_members != catalog.family([f"L{j}" for j in want_ids]):
            bad.append(f"L{i}")
    out.append(Check("line members of each L1..L9 free-split set", not bad, f"fails for {bad}" if bad else ""))

    found = enumerate_critical(beineke, max_n, prune=False)
    expected = catalog.family(CRITICAL_NON_LINE).filter(lambda g: g.n <= max_n)
    out.append(_same(f"critically non-line graphs n<={max_n} (exhaustive filter)", found, expected, all_l))

    failures = _count_failures(_line_stability, enumerate_upto(max_n, no_isolated=True))
    out.append(Check(f"line-ness is contraction-stable off L14..L21 and the critical set n<={max_n}", failures == 0, f"{failures} counterexamples" if failures else ""))
    return out


# criticality


@lru_cache(maxsize=None)
def _small_patterns() -> list[Graph]:
    return [catalog.graph("claw"), catalog.graph("C3"), catalog.graph("P3")]


def _edge_characterization(g: Graph) -> bool:
    for h in _small_patterns():
        for s in all_induced(g, h):
            for e in g.iter_edges():
                if is_critical_for(g, s, e, h) != is_critical_for_characterized(g, s, e, h):
                    return False
    return True


@lru_cache(maxsize=None)
def _families() -> list[GraphFamily]:
    return [_claw_family(), catalog.family(["C3"]), catalog.family(catalog.BEINEKE_IDS)]


def _necessary_conditions(g: Graph) -> bool:
    for fam in _families():
        if not is_critically_exist(g, fam).verdict:
            continue
        if not all(c.independent_ok and c.corner_ok for c in witness_conditions(g, fam)):
            return False
        if any(outside_violations(g, c.witness) for c in witness_conditions(g, fam)):
            return False
    return True


def _cycle_contraction(g: Graph) -> bool:
    for k in range(4, g.n + 1):
        ck = GraphFamily([catalog.cycle(k)])
        if is_exist(g, ck):
            smaller = GraphFamily([catalog.cycle(k - 1)])
            if not any(is_exist(contract(g, e), smaller) for e in g.iter_edges()):
                return False
    return True


def verify_critical_section(max_n: int = 7) -> list[Check]:
    _check_sweep(max_n)
    out = []
    failures = _count_failures(_edge_characterization, enumerate_upto(min(max_n, 6)))
    out.append(Check("critical-edge characterization matches contraction n<=6", failures == 0, f"{failures} graphs disagree" if failures else ""))
    failures = _count_failures(_necessary_conditions, enumerate_upto(max_n, no_isolated=True))
    out.append(Check(f"critical graphs satisfy the outside-vertex conditions n<={max_n}", failures == 0, f"{failures} graphs fail" if failures else ""))
    c3 = catalog.family(["C3"])
    got = enumerate_critical(c3, min(max_n, 6), prune=False)
    out.append(_same("the only critically triangle-exist graph is C3 n<=6", got, c3, ["C3"]))
    failures = _count_failures(_cycle_contraction, enumerate_upto(max_n))
    out.append(Check(f"every C_k-exist graph contracts to a C_(k-1)-exist graph n<={max_n}", failures == 0, f"{failures} graphs fail" if failures else ""))
    return out


RUNNERS = {
    "splitting": verify_splitting_section,
    "claw": verify_claw_section,
    "line": verify_line_section,
    "critical": verify_critical_section,
}


def run(sections: Sequence[str] = SECTIONS, max_n: int = 7) -> list[Check]:
    out = []
    for name in sections:
        out.extend(RUNNERS[name](max_n))
    return out

import pytest
from hypothesis import given

from contracta import catalog
from contracta.critical import (
    enumerate_critical,
    f_map,
    is_critical_for,
    is_critical_for_characterized,
    is_critically_exist,
    outside_violations,
    witness_conditions,
)
from contracta.errors import BadWitness, LimitExceeded, NonEdge
from contracta.families import GraphFamily
from contracta.graph import Graph, add_vertex, contract, disjoint_union, vset
from contracta.iso import all_induced, are_isomorphic, enumerate_upto

from conftest import graphs_with_edge

G = catalog.graph
CLAW = catalog.family(["claw"])
BEINEKE = catalog.family(catalog.BEINEKE_IDS)
CLAW_SET = vset([0, 1, 2, 3])


def claw_plus_edge() -> Graph:
    return disjoint_union(G("claw"), G("K2"))


def claw_plus(neighbors) -> Graph:
    return add_vertex(G("claw"), vset(neighbors))


@given(graphs_with_edge())
def test_f_map_sizes(ge):
    g, (u, v) = ge
    s = g.vertices & 0b1010111
    image = f_map(g, s, (u, v))
    both = s >> u & 1 and s >> v & 1
    assert image.bit_count() == s.bit_count() - (1 if both else 0)


def test_f_map_examples():
    g = G("P4")
    assert f_map(g, vset([0]), (2, 3)) == vset([0])
    assert f_map(g, vset([1, 2]), (1, 2)) == vset([2])
    assert f_map(g, vset([0, 1]), (1, 2)) == vset([0, 2])
    with pytest.raises(NonEdge):
        f_map(g, vset([0]), (0, 2))


@pytest.mark.parametrize("check", [is_critical_for, is_critical_for_characterized])
def test_critical_edge_examples(check):
    g = claw_plus_edge()
    assert not check(g, CLAW_SET, (4, 5), G("claw"))
    assert check(g, CLAW_SET, (0, 1), G("claw"))
    # a pendant on a leaf is dominated by that leaf, so contracting it rebuilds the claw
    pendant = claw_plus([1])
    assert not check(pendant, CLAW_SET, (1, 4), G("claw"))
    two_leaves = claw_plus([1, 2])
    assert check(two_leaves, CLAW_SET, (1, 4), G("claw"))
    with pytest.raises(BadWitness):
        check(g, vset([0, 1, 4]), (0, 1), G("claw"))


def test_critical_edge_characterization_exhaustive_n5():
    for g in enumerate_upto(5):
        for h in (G("claw"), G("C3"), G("P3")):
            for s in all_induced(g, h):
                for e in g.iter_edges():
                    assert is_critical_for(g, s, e, h) == is_critical_for_characterized(g, s, e, h)


def test_witness_conditions_examples():
    entries = witness_conditions(claw_plus_edge(), CLAW)
    assert entries and not entries[0].independent_ok
    k33 = witness_conditions(G("K3,3"), CLAW)
    assert k33 and all(c.independent_ok and c.corner_ok for c in k33)
    dominated = witness_conditions(claw_plus([0, 1]), CLAW)
    assert any(not c.corner_ok for c in dominated)


def test_outside_violation_reasons():
    assert outside_violations(claw_plus([1]), CLAW_SET) == [(4, "exactly one vertex")]
    assert outside_violations(claw_plus([0, 1]), CLAW_SET)[0][1] == "two adjacent vertices"
    assert outside_violations(claw_plus([1, 2]), CLAW_SET) == []
    assert outside_violations(claw_plus([0, 1, 2]), CLAW_SET)[0][1] == "three vertices inducing P3 or C3"


def test_critically_exist_examples():
    c3 = catalog.family(["C3"])
    assert is_critically_exist(G("C3"), c3).verdict
    for i in range(1, 7):
        assert is_critically_exist(G(f"CE{i}"), CLAW).verdict
    report = is_critically_exist(G("CE6"), BEINEKE)
    assert not report.verdict and report.failing_edge is not None
    idx, _ = report.surviving
    assert BEINEKE.names[idx] == "L2"


def test_critical_report_failure_carries_edge():
    report = is_critically_exist(G("S4"), CLAW)
    assert not report.verdict
    assert report.failing_edge == (0, 1)
    assert not is_critically_exist(G("C5"), CLAW).exist
    edgeless = Graph.from_edges(3, [])
    assert not is_critically_exist(edgeless, catalog.family(["K1"])).verdict


def test_enumerate_claw():
    assert enumerate_critical(CLAW, 7) == catalog.family([f"CE{i}" for i in range(1, 7)])


def test_enumerate_triangle():
    assert enumerate_critical(catalog.family(["C3"]), 6) == catalog.family(["C3"])


def test_enumerate_beineke():
    expected = catalog.family(["L1", "L2"] + [f"L{i}" for i in range(4, 14)])
    assert enumerate_critical(BEINEKE, 7) == expected


@pytest.mark.parametrize("ids", [["claw"], ["C3"], ["P3"], ["C4"], ["claw", "K3"], ["bull"], ["P4"]])
def test_pruned_search_equals_brute_filter(ids):
    fam = catalog.family(ids)
    assert enumerate_critical(fam, 7) == enumerate_critical(fam, 7, prune=False)


def test_enumerate_limits():
    with pytest.raises(LimitExceeded):
        enumerate_critical(CLAW, 10)
    with pytest.raises(LimitExceeded):
        enumerate_critical(CLAW, 9, prune=False)


def test_critical_graphs_satisfy_necessary_conditions():
    for fam in (CLAW, catalog.family(["C3"]), BEINEKE):
        for g in enumerate_critical(fam, 7):
            for entry in witness_conditions(g, fam):
                assert entry.independent_ok and entry.corner_ok
                assert outside_violations(g, entry.witness) == []


def test_l3_loses_criticality_to_l2():
    l3 = G("L3")
    report = is_critically_exist(l3, BEINEKE)
    assert not report.verdict
    assert are_isomorphic(contract(l3, report.failing_edge), G("L2"))

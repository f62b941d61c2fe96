import pytest

from contracta import catalog
from contracta.errors import LimitExceeded, MalformedSpec, OutOfRange
from contracta.families import GraphFamily, is_free
from contracta.graph import contract, vset
from contracta.iso import are_isomorphic, enumerate_graphs, enumerate_upto
from contracta.splitting import (
    SplitSpec,
    apply_split,
    free_split_set,
    iter_specs,
    split_edge,
    splittings,
    splittings_family,
    splittings_of_vertex,
)

G = catalog.graph


def test_spec_validation():
    c3 = G("C3")
    with pytest.raises(MalformedSpec):
        SplitSpec(c3, 0, vset([1]), 0)
    with pytest.raises(OutOfRange):
        SplitSpec(c3, 3, 0, 0)


def test_split_triangle_into_square():
    c3 = G("C3")
    assert are_isomorphic(apply_split(SplitSpec(c3, 0, vset([1]), vset([2]))), G("C4"))


def test_split_claw_center_whole_side_keeps_claw():
    claw = G("claw")
    spec = SplitSpec(claw, 0, claw.adj[0], 0)
    out = apply_split(spec)
    assert spec.trivial
    assert not is_free(out, catalog.family(["claw"]))


def test_split_labels():
    spec = SplitSpec(G("P3"), 1, vset([0]), vset([2]))
    g = apply_split(spec)
    u, w = split_edge(spec)
    assert (u, w) == (2, 3)
    assert g.has_edge(u, w)
    assert are_isomorphic(g, G("P4"))


def test_round_trip_every_spec():
    for h in enumerate_upto(5):
        for v in range(h.n):
            for spec in iter_specs(h, v):
                assert are_isomorphic(contract(apply_split(spec), split_edge(spec)), h)


def test_triangle_vertex_splittings():
    # ordered covers give C4, paw, diamond and K4; disjoint sides only C4 and paw
    union = splittings_of_vertex(G("C3"), 0)
    disjoint = splittings_of_vertex(G("C3"), 0, disjoint=True)
    assert len(union) == 4
    assert len(disjoint) == 2
    assert G("C4") in disjoint
    assert G("K4") in union


def test_degree_one_vertex_has_no_free_split():
    p2 = G("P2")
    fam = catalog.family(["P2"])
    for v in range(2):
        assert all(not is_free(g, fam) for g in splittings_of_vertex(p2, v))


def test_claw_leaf_splittings_all_contain_claw():
    fam = catalog.family(["claw"])
    assert all(not is_free(g, fam) for g in splittings_of_vertex(G("claw"), 1))


def test_claw_splittings_are_the_six():
    assert splittings(G("claw")) == catalog.family([f"CS{i}" for i in range(1, 7)])


def test_every_splitting_contracts_back():
    for h in [G("claw"), G("P4"), G("bull"), G("C5")]:
        for g in splittings(h):
            assert any(are_isomorphic(contract(g, e), h) for e in g.iter_edges())


def test_paths_have_no_free_split():
    for n in range(2, 9):
        assert len(free_split_set(catalog.family([f"P{n}"]))) == 0
    p4 = catalog.family(["P4"])
    assert all(not is_free(g, p4) for g in splittings(G("P4")))


@pytest.mark.parametrize("n", range(3, 9))
def test_cycle_free_split_is_next_cycle(n):
    assert free_split_set(catalog.family([f"C{n}"])) == catalog.family([f"C{n + 1}"])


def test_claw_free_split_is_bull():
    assert free_split_set(catalog.family(["claw"])) == catalog.family(["bull"])


def test_beineke_free_split_minimal_members():
    fs = free_split_set(catalog.family(catalog.BEINEKE_IDS))
    assert fs == catalog.family([f"L{i}" for i in range(14, 35)])


def test_pruning_does_not_change_free_split_sets():
    for ids in (["claw"], ["C5"], ["P4"], list(catalog.BEINEKE_IDS)):
        fam = catalog.family(ids)
        assert free_split_set(fam, prune=True) == free_split_set(fam, prune=False)


def test_trivial_specs_never_free():
    for h in enumerate_upto(5):
        fam = GraphFamily([h])
        for v in range(h.n):
            for spec in iter_specs(h, v):
                if spec.trivial:
                    assert not is_free(apply_split(spec), fam)


def test_orbit_reduction_is_sound_on_catalog():
    for ident in catalog.ids():
        g = G(ident)
        if g.n > 7:
            continue
        assert splittings(g, orbit_reduce=True) == splittings(g, orbit_reduce=False)


def test_splittings_family_unions_members():
    fam = catalog.family(["P3", "K3"])
    assert splittings_family(fam) == splittings(G("P3")).union(splittings(G("K3")))


def _contracts_to(h):
    return GraphFamily(
        g for g in enumerate_graphs(h.n + 1) if any(are_isomorphic(contract(g, e), h) for e in g.iter_edges())
    )


def test_disjoint_reading_misses_triangle():
    # K3 contracts to K2, but only a split whose sides share the neighbor produces it
    assert G("K3") in _contracts_to(G("K2"))
    assert G("K3") in splittings(G("K2"))
    assert G("K3") not in splittings(G("K2"), disjoint=True)


def test_degree_limit():
    with pytest.raises(LimitExceeded):
        list(iter_specs(G("S17"), 0))

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from contracta import catalog
from contracta.families import GraphFamily, elm, is_exist, is_free, witness_exist
from contracta.graph import induced
from contracta.iso import are_isomorphic, enumerate_graphs, enumerate_upto

from conftest import graphs

G = catalog.graph
CLAW = catalog.family(["claw"])


def test_family_dedups_isomorphic_members():
    fam = GraphFamily([G("K3"), G("C3"), G("P3")], ["K3", "C3", "P3"])
    assert len(fam) == 2
    assert fam.names == ("P3", "K3")
    assert G("C3") in fam


def test_family_order_is_by_size_then_code():
    fam = GraphFamily([G("C5"), G("K2"), G("P3")])
    assert [g.n for g in fam] == [2, 3, 5]


def test_free_examples():
    assert is_free(G("C5"), CLAW)
    assert not is_free(G("claw"), CLAW)
    assert not is_free(G("K3,3"), CLAW)
    assert is_exist(G("K3,3"), CLAW)


def test_witness_examples():
    assert witness_exist(G("bull"), CLAW) is None
    assert witness_exist(G("L3"), catalog.family(["L1"])) is None
    idx, mask = witness_exist(G("S4"), CLAW)
    assert idx == 0 and mask.bit_count() == 4 and mask & 1
    assert are_isomorphic(induced(G("S4"), mask), G("claw"))


def test_elm_examples():
    assert elm(catalog.family(["P3", "P4"])) == catalog.family(["P3"])
    assert elm(catalog.family(["claw", "bull"])) == catalog.family(["claw", "bull"])
    upper = catalog.family([f"L{i}" for i in range(14, 35)])
    assert elm(upper) == catalog.family([f"L{i}" for i in range(14, 22)])


def test_elm_keeps_names():
    fam = elm(catalog.family(["P3", "P4", "K3"]))
    assert fam.names == ("P3", "K3")


_SMALL = [g for g in enumerate_upto(5) if g.num_edges > 0]


@settings(max_examples=40)
@given(st.lists(st.sampled_from(_SMALL), min_size=1, max_size=4))
def test_elm_properties(members):
    fam = GraphFamily(members)
    reduced = elm(fam)
    assert reduced.issubset(fam)
    assert elm(reduced) == reduced
    for g in enumerate_upto(6):
        assert is_free(g, fam) == is_free(g, reduced)


def test_elm_preserves_freeness_exhaustive_n7():
    rng = random.Random(3)
    families = [GraphFamily(rng.sample(_SMALL, rng.randint(1, 4))) for _ in range(6)]
    for g in enumerate_graphs(7):
        for fam in families:
            assert is_free(g, fam) == is_free(g, elm(fam))


@given(graphs(max_n=8))
def test_witness_is_a_real_copy(g):
    fam = catalog.family(["claw", "K3", "C4"])
    hit = witness_exist(g, fam)
    if hit is None:
        assert is_free(g, fam)
    else:
        idx, mask = hit
        assert are_isomorphic(induced(g, mask), fam.members[idx])


def test_union_and_filter():
    a = catalog.family(["K3", "P3"])
    b = catalog.family(["C3", "claw"])
    assert len(a.union(b)) == 3
    assert a.filter(lambda g: g.num_edges == 3) == catalog.family(["K3"])
    assert a.index_of(G("C3")) is not None
    assert a.index_of(G("C4")) is None

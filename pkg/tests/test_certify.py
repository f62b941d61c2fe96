import pytest

from contracta import catalog
from contracta.certify import certify, is_strongly_free, strongly_free_via_free_split
from contracta.errors import NotFree
from contracta.families import is_free
from contracta.graph import contract
from contracta.iso import enumerate_upto

G = catalog.graph
CLAW = catalog.family(["claw"])
BEINEKE = catalog.family(catalog.BEINEKE_IDS)


def test_strongly_free_examples():
    assert is_strongly_free(G("C6"), CLAW)
    assert not is_strongly_free(G("bull"), CLAW)
    assert not is_strongly_free(G("claw"), CLAW)


def test_via_free_split_examples():
    assert not strongly_free_via_free_split(G("bull"), CLAW)
    assert strongly_free_via_free_split(G("C6"), CLAW)
    with pytest.raises(NotFree):
        strongly_free_via_free_split(G("claw"), CLAW)


@pytest.mark.parametrize("ids", [["claw"], ["C4"], ["P4"], list(catalog.BEINEKE_IDS)])
def test_strong_freeness_two_ways_agree(ids):
    fam = catalog.family(ids)
    for g in enumerate_upto(6):
        if is_free(g, fam):
            assert strongly_free_via_free_split(g, fam) == is_strongly_free(g, fam)


def test_certify_examples():
    c7 = certify(G("C7"), CLAW)
    assert c7.applicable and c7.reason == "stable"
    assert c7.g_is_free and c7.all_contractions_free
    bull = certify(G("bull"), CLAW)
    assert not bull.applicable and bull.reason == "fs-witness" and bull.witness_name == "bull"
    assert bull.summary() == "not applicable: FS-witness bull"
    k33 = certify(G("K3,3"), CLAW)
    assert not k33.applicable and k33.reason == "critical" and k33.critical_match == "CE3"


def test_certify_counterexample_edge_flips():
    v = certify(G("bull"), CLAW)
    assert v.counterexample_edge is not None
    assert is_free(contract(G("bull"), v.counterexample_edge), CLAW) != v.g_is_free


@pytest.mark.parametrize("fam", [CLAW, BEINEKE], ids=["claw", "beineke"])
def test_certify_sound_when_applicable(fam):
    for g in enumerate_upto(6, no_isolated=True):
        v = certify(g, fam)
        if v.applicable:
            assert v.g_is_free == v.all_contractions_free
            # a free graph certified stable has no contraction containing a member
            if v.g_is_free:
                assert v.counterexample_edge is None

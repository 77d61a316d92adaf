import pytest

from ternions.errors import InconsistentSignature
from ternions.module_geometry import CyclicSubmodule, enumerate_nonunimodular_free
from ternions.radical_decomposition import decompose, radical_signature, submodule_signature

from oracles import ternion_census


@pytest.mark.parametrize("v, sig", [((6, 6, 7), 2), ((4, 4, 7), 0), ((0, 0, 0), 3), ((6, 6, 4), 2), ((4, 6, 7), 1)])
def test_signature(t2, v, sig):
    assert radical_signature(v, t2.radical) == sig


def test_t2_classes(t2_classes):
    assert [(c.radical_entry_count, len(c)) for c in t2_classes] == [(2, 9), (1, 9), (0, 3)]


def test_classes_match_transcription(t2_classes, expected):
    want = {frozenset(map(tuple, e["orbit"])): e["radical_entries"] for e in expected["submodules"]}
    for c in t2_classes:
        for m in c.members:
            assert want[m.orbit] == c.radical_entry_count


def test_generators_agree(t2, t2_subs):
    for s in t2_subs:
        a, b = s.generators
        assert radical_signature(a, t2.radical) == radical_signature(b, t2.radical)


def test_partition(t2_subs, t2_classes):
    members = [m for c in t2_classes for m in c.members]
    assert len(members) == len(t2_subs)
    assert {m.canonical_id for m in members} == {s.canonical_id for s in t2_subs}


def test_no_full_radical_class(t2_classes):
    assert all(c.radical_entry_count < 3 for c in t2_classes)


def test_empty():
    assert decompose([], None) == []


def test_inconsistent_signature_raises(t2):
    fake = CyclicSubmodule(t2, frozenset({(6, 6, 7), (4, 4, 7)}), ((4, 4, 7), (6, 6, 7)), (4, 4, 7))
    with pytest.raises(InconsistentSignature):
        submodule_signature(fake, t2.radical)
    with pytest.raises(InconsistentSignature):
        decompose([fake], t2.radical)


def test_t3_rank3_pinned(t3):
    # pinned from an oracles.ternion_census(3, 3) run: 52 submodules, 12 / 24 / 16
    subs = enumerate_nonunimodular_free(t3, 3)
    classes = decompose(subs, t3.radical)
    assert len(subs) == 52
    assert {c.radical_entry_count: len(c) for c in classes} == {2: 12, 1: 24, 0: 16}


def test_t3_rank2_matches_oracle(t3):
    want = ternion_census(3, 2)
    classes = decompose(enumerate_nonunimodular_free(t3, 2), t3.radical)
    assert {c.radical_entry_count: len(c) for c in classes} == want["classes"]

from fractions import Fraction

import pytest

from e6sp4.embedding import (
    ELEMENTS,
    EMBEDDING_TABLE,
    NotInDomainError,
    angle_signature,
    degrees,
    phi_map,
    subsystem_membership,
    verify_embedding_claims,
)
from e6sp4.records import FAIL, PASS, judge
from e6sp4.rootcore import bilinear


def test_phi_examples():
    assert phi_map("a1") == (1, 0)
    assert phi_map(ELEMENTS["2a1+a6"]) == (2, 1)
    assert phi_map((1, 0, 0, 0, 0, 1)) == (1, 1)
    with pytest.raises(NotInDomainError):
        phi_map((0, 0, 1, 0, 0, 0))
    with pytest.raises(NotInDomainError):
        phi_map("a3")


def test_phi_injective_and_additive():
    images = [phi_map(n) for n in ELEMENTS]
    assert len(set(images)) == 4
    add = lambda *vs: tuple(map(sum, zip(*vs)))  # noqa: E731
    assert add(phi_map("a1"), phi_map("a6")) == phi_map("a1+a6")
    assert add(phi_map("a1"), phi_map("a1"), phi_map("a6")) == phi_map("2a1+a6")


def test_elements_are_stated_combinations():
    for name, el in ELEMENTS.items():
        assert el.vector[1:5] == (0, 0, 0, 0)


def test_phi_images_are_c2_roots(c2):
    assert all(v in c2 for v in EMBEDDING_TABLE.values())


def test_membership_bourbaki(e6):
    rep = subsystem_membership(e6)
    assert rep["a1"].is_root and rep["a1"].length2 == 2
    assert rep["a6"].is_root
    assert not rep["a1+a6"].is_root and rep["a1+a6"].length2 == 4
    assert not rep["2a1+a6"].is_root and rep["2a1+a6"].length2 == 10


def test_membership_negation(e6, e6_alt):
    for rs in (e6, e6_alt):
        for el in ELEMENTS.values():
            neg = tuple(-x for x in el.vector)
            assert (neg in rs) == (el.vector in rs)


def test_angles():
    from e6sp4 import presets
    from e6sp4.rootcore import build_root_system

    c2 = build_root_system(presets.get("C2"))
    g2 = build_root_system(presets.get("G2"))
    a2 = build_root_system(presets.get("A2"))
    assert angle_signature((1, 0), (0, 1), c2) == (Fraction(1, 2), -1)
    assert degrees(*angle_signature((1, 0), (0, 1), c2)) == 135
    assert degrees(*angle_signature((1, 0), (0, 1), g2)) == 150
    assert degrees(*angle_signature((1, 0), (0, 1), a2)) == 120


def test_verify_embedding_claims_bourbaki(e6):
    recs = {r.id: r for r in verify_embedding_claims(e6)}
    assert list(recs) == [
        "emb.ip_a1_a6", "emb.angle_a1_a6", "emb.len2_a1+a6", "emb.len2_2a1+a6",
        "emb.angle_nu1_nu2", "emb.gram_consistency",
    ]
    assert (recs["emb.ip_a1_a6"].computed, recs["emb.ip_a1_a6"].verdict) == ("0", FAIL)
    assert recs["emb.angle_nu1_nu2"].computed == "cos^2=1/2, sign=-"
    assert "135" in recs["emb.angle_nu1_nu2"].notes
    assert (recs["emb.gram_consistency"].claimed, recs["emb.gram_consistency"].computed) == ("6", "2")
    assert recs["emb.len2_a1+a6"].computed == "4"
    assert recs["emb.len2_2a1+a6"].computed == "10"
    assert all(r.verdict == FAIL for r in recs.values())


def test_verify_embedding_claims_total_and_sound(e6, e6_alt):
    for rs in (e6, e6_alt):
        recs = verify_embedding_claims(rs)
        assert len(recs) == 6
        for r in recs:
            assert r.verdict in (PASS, FAIL)
            assert judge(r.claimed, r.computed) == r.verdict
            assert r.anchor


def test_gram_consistency_independent_expansion(e6):
    # |a1 + a6|^2 under a form with Gram [[2, -1], [-1, 2]]: expand with the package's bilinear on A2
    from e6sp4 import presets
    from e6sp4.rootcore import build_root_system

    a2 = build_root_system(presets.get("A2"))
    assert bilinear((1, 1), (1, 1), a2) == 2

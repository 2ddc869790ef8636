import pytest

from hramsey.lemmas import (
    REGISTRY,
    LemmaError,
    lemma_ids,
    verify_structure_lemma,
)

ALL_IDS = [
    "claim_2k2d_1",
    "claim_2k2d_2",
    "claim_2k2d_3",
    "claim_2k2d_4",
    "claim_2k2d_5",
    "lem_2k2_k3",
    "lem_cd_bip",
    "lem_cdpc",
    "lem_finite",
    "lem_finite_d",
    "lem_k4",
    "lem_k4_d",
    "lem_p4c4cc",
    "lem_split_2k2d",
    "thm_acyclic",
]


def test_registry_ids_frozen():
    assert lemma_ids() == ALL_IDS


def test_default_caps_in_documented_band():
    for lemma in REGISTRY.values():
        assert 8 <= lemma.default_cap <= 10


def test_unknown_id_raises():
    with pytest.raises(LemmaError):
        verify_structure_lemma("lem_nope")


def test_report_shape():
    report = verify_structure_lemma("lem_k4", cap=6)
    assert report.lid == "lem_k4"
    assert report.cap == 6
    assert report.ok
    assert report.counterexamples == ()
    doc = report.to_dict()
    assert doc["lemma"] == "lem_k4"
    assert doc["ok"] is True
    assert "hypothesis_count" in doc and "details" in doc


@pytest.mark.parametrize(
    "lid",
    [
        "lem_k4",
        "lem_k4_d",
        "lem_cd_bip",
        "lem_2k2_k3",
        "lem_split_2k2d",
        "claim_2k2d_1",
        "claim_2k2d_2",
        "claim_2k2d_3",
        "claim_2k2d_4",
        "claim_2k2d_5",
        "lem_p4c4cc",
        "lem_cdpc",
    ],
)
def test_predicate_lemmas_hold_at_reduced_cap(lid):
    report = verify_structure_lemma(lid, cap=7)
    assert report.ok, report.counterexamples
    assert report.hypothesis_count > 0 or lid in ("lem_k4", "lem_k4_d")


def test_acyclic_theorem_small_cap():
    report = verify_structure_lemma("thm_acyclic", cap=6)
    assert report.ok
    assert report.hypothesis_count > 0


def test_finiteness_lemma_exact_max_order():
    # Forced to scan one level above the claimed maximum order even when
    # asked for less; the class must die at exactly that point.
    report = verify_structure_lemma("lem_finite", cap=4)
    assert report.cap >= 10
    assert report.ok

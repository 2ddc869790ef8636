import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hramsey import catalog
from hramsey.randbip import (
    GirthReport,
    RandomBipError,
    RandomParams,
    count_short_cycles,
    sample_girth_construction,
    short_cycles,
)
from oracles import brute_cycle_count
from strategies import bip_graphs


def test_params_validation():
    with pytest.raises(RandomBipError):
        RandomParams(n=8, k=3, seed=1)
    with pytest.raises(RandomBipError):
        RandomParams(n=0, k=4, seed=1)
    p = RandomParams(n=8, k=4, seed=1)
    assert p.part_size == 16
    assert 0 < p.edge_probability < 1


def test_cycle_counts_on_catalog_graphs():
    assert count_short_cycles(catalog.bip_cycle(4), 4) == 1
    assert count_short_cycles(catalog.bip_cycle(6), 4) == 0
    assert count_short_cycles(catalog.bip_cycle(6), 6) == 1
    assert count_short_cycles(catalog.bip_complete(2, 3), 4) == 3
    assert count_short_cycles(catalog.bip_complete(3, 3), 4) == 9
    assert count_short_cycles(catalog.bip_complete(3, 3), 6) == 15
    assert count_short_cycles(catalog.bip_path(7), 8) == 0


def test_short_cycles_requires_k_at_least_4():
    with pytest.raises(RandomBipError):
        short_cycles(catalog.bip_cycle(4), 3)


@settings(max_examples=40)
@given(bip_graphs(max_side=4), st.sampled_from([4, 5, 6]))
def test_cycle_count_matches_brute(bg, k):
    assert count_short_cycles(bg, k) == brute_cycle_count(bg.underlying(), k)


def test_cycles_are_reported_as_vertex_tuples():
    cycles = short_cycles(catalog.bip_complete(2, 2), 4)
    assert len(cycles) == 1
    assert len(cycles[0]) == 4
    assert len(set(cycles[0])) == 4


def test_sampler_is_deterministic():
    params = RandomParams(n=8, k=4, seed=99)
    bg1, rep1 = sample_girth_construction(params)
    bg2, rep2 = sample_girth_construction(params)
    assert bg1 == bg2
    assert rep1 == rep2


def test_sampler_postconditions():
    for seed in range(5):
        params = RandomParams(n=8, k=6, seed=seed)
        bg, report = sample_girth_construction(params)
        assert (bg.nA, bg.nB) == (8, 8)
        assert count_short_cycles(bg, 6) == 0
        assert report.girth_certified
        assert abs(report.deletions_a - report.deletions_b) <= 1
        assert report.final_a == report.final_b == 8
        assert isinstance(report, GirthReport)


def test_sampler_report_dict_shape():
    params = RandomParams(n=4, k=4, seed=3)
    _, report = sample_girth_construction(params)
    doc = report.to_dict()
    assert doc["n"] == 4 and doc["k"] == 4 and doc["seed"] == 3
    assert "deletions" in doc and "cobiclique" in doc
    assert doc["girth_certified"] is True


def test_sampler_rejects_tiny_n():
    with pytest.raises(RandomBipError):
        sample_girth_construction(RandomParams(n=2, k=4, seed=1))


def test_cobiclique_is_exact_at_small_sizes():
    params = RandomParams(n=8, k=4, seed=7)
    bg, report = sample_girth_construction(params)
    assert report.cobiclique_exact
    from hramsey.invariants import cobiclique_number

    assert report.cobiclique == cobiclique_number(bg)

from hypothesis import given, settings

from hramsey import catalog
from hramsey.invariants import (
    biclique_number,
    chromatic_number,
    clique_number,
    cobiclique_number,
    cochromatic_number,
    find_balanced_biclique,
    find_balanced_cobiclique,
    greedy_cobiclique_lower,
    has_clique,
    has_independent_set,
    independence_number,
    max_clique,
    max_independent_set,
)
from oracles import (
    brute_alpha,
    brute_biclique,
    brute_chromatic,
    brute_cobiclique,
    brute_cochromatic,
    brute_omega,
    is_clique,
    is_independent,
)
from strategies import bip_graphs, graphs


@given(graphs(max_n=8))
def test_clique_number_matches_brute(g):
    assert clique_number(g) == brute_omega(g)


@given(graphs(max_n=8))
def test_independence_number_matches_brute(g):
    assert independence_number(g) == brute_alpha(g)


@given(graphs(max_n=8))
def test_max_clique_is_a_clique_of_max_size(g):
    vs = max_clique(g)
    assert is_clique(g, list(vs))
    assert len(vs) == brute_omega(g)


@given(graphs(max_n=8))
def test_max_independent_set_is_independent(g):
    vs = max_independent_set(g)
    assert is_independent(g, list(vs))
    assert len(vs) == brute_alpha(g)


@given(graphs(max_n=8))
def test_has_clique_thresholds(g):
    w = brute_omega(g)
    assert has_clique(g, w)
    assert not has_clique(g, w + 1)
    a = brute_alpha(g)
    assert has_independent_set(g, a)
    assert not has_independent_set(g, a + 1)


@given(graphs(max_n=7))
def test_chromatic_number_matches_brute(g):
    assert chromatic_number(g) == brute_chromatic(g)


@settings(max_examples=30)
@given(graphs(max_n=7))
def test_cochromatic_number_matches_brute(g):
    assert cochromatic_number(g) == brute_cochromatic(g)


def test_cochromatic_c5_is_three():
    # C5 has alpha = omega = 2, so two parts cover at most 4 vertices;
    # three parts suffice (an edge, an edge, a vertex).
    assert cochromatic_number(catalog.cycle(5)) == 3


def test_known_chromatic_values():
    assert chromatic_number(catalog.petersen()) == 3
    assert chromatic_number(catalog.kneser(6, 2)) == 4
    assert chromatic_number(catalog.complete(5)) == 5
    assert chromatic_number(catalog.cycle(7)) == 3


def test_kneser_9_3_clique_number():
    # Three pairwise disjoint triples fit in nine points, four do not.
    assert clique_number(catalog.kneser(9, 3)) == 3


@given(bip_graphs(max_side=5))
def test_biclique_number_matches_brute(bg):
    cap = min(bg.nA, bg.nB)
    best = max((s for s in range(cap + 1) if s == 0 or brute_biclique(bg, s)), default=0)
    assert biclique_number(bg) == best


@given(bip_graphs(max_side=5))
def test_cobiclique_number_matches_brute(bg):
    cap = min(bg.nA, bg.nB)
    best = max(
        (s for s in range(cap + 1) if s == 0 or brute_cobiclique(bg, s)), default=0
    )
    assert cobiclique_number(bg) == best


@given(bip_graphs(max_side=5))
def test_find_balanced_biclique_agrees_with_brute(bg):
    for s in range(1, min(bg.nA, bg.nB) + 1):
        found = find_balanced_biclique(bg, s)
        expect = brute_biclique(bg, s)
        if expect is None:
            assert found is None
        else:
            assert found is not None
            a_side, b_side = found
            assert len(a_side) == len(b_side) == s
            assert all(bg.cross[a] >> b & 1 for a in a_side for b in b_side)


@given(bip_graphs(max_side=5))
def test_find_balanced_cobiclique_agrees_with_brute(bg):
    for s in range(1, min(bg.nA, bg.nB) + 1):
        found = find_balanced_cobiclique(bg, s)
        expect = brute_cobiclique(bg, s)
        if expect is None:
            assert found is None
        else:
            assert found is not None
            a_side, b_side = found
            assert len(a_side) == len(b_side) == s
            assert all(not bg.cross[a] >> b & 1 for a in a_side for b in b_side)


@given(bip_graphs(max_side=5))
def test_greedy_cobiclique_is_sound_lower_bound(bg):
    lower = greedy_cobiclique_lower(bg)
    assert 0 <= lower <= cobiclique_number(bg)


def test_complete_bipartite_extremes():
    k33 = catalog.bip_complete(3, 3)
    assert biclique_number(k33) == 3
    assert cobiclique_number(k33) == 0
    anti = k33.bipartite_complement()
    assert biclique_number(anti) == 0
    assert cobiclique_number(anti) == 3


def test_empty_graph_invariants():
    g = catalog.empty(4)
    assert clique_number(g) == 1
    assert independence_number(g) == 4
    assert chromatic_number(g) == 1
    assert cochromatic_number(g) == 1


def test_trivial_sizes():
    assert has_clique(catalog.path(3), 0)
    assert not has_clique(catalog.path(3), 4)

import itertools

from hypothesis import given
from hypothesis import strategies as st

from hramsey import catalog
from hramsey.canon import (
    canonical_form,
    canonical_form_bipartite,
    canonical_form_colored,
    canonical_perm,
)
from oracles import brute_canonical, brute_iso_count, graph_from_bits
from strategies import bip_graphs, graphs


@given(graphs(max_n=7), st.data())
def test_canonical_form_is_relabel_invariant(g, data):
    perm = data.draw(st.permutations(list(range(g.n))))
    assert canonical_form(g.relabel(list(perm))) == canonical_form(g)


@given(graphs(max_n=7))
def test_canonical_perm_is_a_permutation(g):
    perm = canonical_perm(g)
    assert sorted(perm) == list(range(g.n))


def test_canonical_form_separates_n4_classes():
    # All 64 labeled graphs on 4 vertices fall into 11 isomorphism classes.
    all4 = [graph_from_bits(4, b) for b in range(1 << 6)]
    fast = {canonical_form(g) for g in all4}
    assert len(fast) == 11
    assert brute_iso_count(all4) == 11


def test_canonical_form_matches_brute_partition_n5():
    # Fast canonical forms induce exactly the brute-force iso classes.
    all5 = [graph_from_bits(5, b) for b in range(1 << 10)]
    by_fast = {}
    for g in all5:
        by_fast.setdefault(canonical_form(g), brute_canonical(g))
    assert len(by_fast) == 34
    assert len(set(by_fast.values())) == 34
    for g in all5:
        assert by_fast[canonical_form(g)] == brute_canonical(g)


def test_distinguishes_c6_from_2k3():
    c6 = catalog.cycle(6)
    two_k3 = catalog.union_copies(catalog.complete(3), 2)
    assert canonical_form(c6) != canonical_form(two_k3)


@given(graphs(max_n=6), st.data())
def test_colored_form_respects_colors(g, data):
    colors = data.draw(
        st.lists(st.integers(0, 1), min_size=g.n, max_size=g.n)
    )
    perm = data.draw(st.permutations(list(range(g.n))))
    relabeled = g.relabel(list(perm))
    moved = [0] * g.n
    for v in range(g.n):
        moved[perm[v]] = colors[v]
    assert canonical_form_colored(relabeled, moved) == canonical_form_colored(g, colors)


def test_colored_form_separates_color_placements():
    # Same underlying path, marked endpoint vs marked middle.
    p3 = catalog.path(3)
    end = canonical_form_colored(p3, [1, 0, 0])
    mid = canonical_form_colored(p3, [0, 1, 0])
    assert end != mid


@given(bip_graphs(max_side=4), st.data())
def test_bipartite_form_ignores_labels_within_parts(bg, data):
    perm_a = data.draw(st.permutations(list(range(bg.nA))))
    perm_b = data.draw(st.permutations(list(range(bg.nB))))
    moved = [[0] * bg.nB for _ in range(bg.nA)]
    for a in range(bg.nA):
        for b in range(bg.nB):
            if bg.cross[a] >> b & 1:
                moved[perm_a[a]][perm_b[b]] = 1
    from hramsey.graph import BipartiteGraph

    rows = tuple(
        sum(bit << j for j, bit in enumerate(row)) for row in moved
    )
    other = BipartiteGraph(bg.nA, bg.nB, rows)
    assert canonical_form_bipartite(
        other.nA, other.nB, other.underlying()
    ) == canonical_form_bipartite(bg.nA, bg.nB, bg.underlying())


def test_petersen_is_kneser_5_2():
    assert canonical_form(catalog.petersen()) == canonical_form(catalog.kneser(5, 2))

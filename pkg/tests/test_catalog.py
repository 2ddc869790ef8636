import pytest
from hypothesis import given
from hypothesis import strategies as st

from hramsey import catalog
from hramsey.canon import canonical_form
from hramsey.graph import GraphError
from hramsey.invariants import clique_number, independence_number
from hramsey.subgraph import ClassSpec, in_class
from oracles import brute_cycle_count


def degree_multiset(g):
    return sorted(g.degree(v) for v in range(g.n))


def test_small_families():
    assert catalog.path(1).n == 1
    assert catalog.path(5).edge_count() == 4
    assert catalog.cycle(5).edge_count() == 5
    assert catalog.complete(4).edge_count() == 6
    assert catalog.empty(3).edge_count() == 0
    assert catalog.complete_bipartite(2, 3).edge_count() == 6
    with pytest.raises(GraphError):
        catalog.cycle(2)


def test_named_graph_shapes():
    named = catalog.named_graphs()
    assert degree_multiset(named["claw"]) == [1, 1, 1, 3]
    assert degree_multiset(named["paw"]) == [1, 2, 2, 3]
    assert degree_multiset(named["diamond"]) == [2, 2, 3, 3]
    assert named["co-claw"] == named["claw"].complement()
    assert named["co-diamond"] == named["diamond"].complement()
    assert named["co-paw"] == named["paw"].complement()
    assert named["P2+P3"].n == 5
    assert degree_multiset(named["P2+P3"]) == [1, 1, 1, 1, 2]


def test_rook3_is_the_claw_coclaw_extremal_graph():
    g = catalog.named_graphs()["rook3"]
    assert g.n == 9
    assert degree_multiset(g) == [4] * 9
    assert clique_number(g) == 3
    assert independence_number(g) == 3
    spec = ClassSpec.of(
        [catalog.named_graphs()["claw"], catalog.named_graphs()["co-claw"]]
    )
    assert in_class(g, spec)


def test_prism_shape():
    g = catalog.named_graphs()["prism"]
    assert g.n == 6
    assert degree_multiset(g) == [3] * 6
    assert clique_number(g) == 3
    assert brute_cycle_count(g, 3) == 2


def test_triangle_tower_is_2k2_diamond_free():
    g = catalog.named_graphs()["T9"]
    assert g.n == 9
    two_k2 = catalog.union_copies(catalog.complete(2), 2)
    spec = ClassSpec.of([two_k2, catalog.named_graphs()["diamond"]])
    assert in_class(g, spec)
    assert clique_number(g) < 6
    assert independence_number(g) < 4


def test_petersen():
    g = catalog.petersen()
    assert g.n == 10
    assert degree_multiset(g) == [3] * 10
    assert brute_cycle_count(g, 4) == 0
    assert brute_cycle_count(g, 5) == 12
    assert canonical_form(g) == canonical_form(catalog.kneser(5, 2))


def test_kneser_basics():
    g, labels = catalog.kneser_labeled(6, 2)
    assert g.n == 15
    assert all(len(lab) == 2 for lab in labels)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert g.has_edge(u, v) == (not labels[u] & labels[v])
    assert clique_number(g) == 3
    with pytest.raises(GraphError):
        catalog.kneser(2, 3)


def test_union_copies_and_blowup():
    two_k3 = catalog.union_copies(catalog.complete(3), 2)
    assert two_k3.n == 6
    assert two_k3.edge_count() == 6
    assert len(two_k3.components()) == 2
    blown = catalog.blowup(catalog.path(3), [2, 1, 2])
    assert blown.n == 5
    # Middle vertex copies join both end classes; end classes stay independent.
    assert blown.edge_count() == 2 * 1 + 1 * 2
    assert independence_number(blown) == 4


def test_s123_shape():
    u = catalog.s123()
    assert u.n == 7
    assert u.is_forest()
    assert degree_multiset(u) == [1, 1, 1, 2, 2, 2, 3]
    assert catalog.named_graphs()["S123"] == u


def test_bip_families():
    p = catalog.bip_path(6)
    assert (p.nA, p.nB) == (3, 3)
    assert p.edge_count() == 5
    c = catalog.bip_cycle(8)
    assert (c.nA, c.nB) == (4, 4)
    assert c.edge_count() == 8
    with pytest.raises(GraphError):
        catalog.bip_cycle(7)
    m = catalog.bip_matching(3)
    assert m.edge_count() == 3
    k = catalog.bip_complete(2, 5)
    assert k.edge_count() == 10


@given(st.integers(1, 4), st.integers(1, 4))
def test_double_star_gadget_shape(p, q):
    bg = catalog.double_star_gadget(p, q)
    assert bg.nA == 2
    assert bg.nB == p + q + 2
    # Exactly one B-vertex sees both centers, one sees neither, and the
    # rest are pendant to a single center.
    both = sum(1 for b in range(bg.nB) if bg.b_neighborhood(b) == 0b11)
    neither = sum(1 for b in range(bg.nB) if bg.b_neighborhood(b) == 0)
    assert both == 1 and neither == 1
    assert bg.underlying().is_forest()
    degrees = sorted(bg.underlying().degree(v) for v in range(2))
    assert degrees == sorted([p + 1, q + 1])

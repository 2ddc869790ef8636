import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hramsey import catalog
from hramsey.graph import BipartiteGraph
from hramsey.invariants import clique_number
from hramsey.structure import (
    ClassViolationError,
    HomogeneousWitness,
    StructureError,
    chain_dominators,
    extended_c5_recognize,
    pigeonhole_independent_set,
    pseudo_split_partition,
    split_partition,
    verify_homogeneous,
)
from hramsey.subgraph import ClassSpec, in_class
from oracles import graph_from_bits, is_clique, is_independent, subsets
from strategies import graphs


def brute_is_split(g) -> bool:
    for vs in subsets(g.n):
        rest = [v for v in range(g.n) if v not in set(vs)]
        if is_clique(g, vs) and is_independent(g, rest):
            return True
    return False


def test_split_partition_all_graphs_n_le_5():
    for n in range(1, 6):
        for bits in range(1 << (n * (n - 1) // 2)):
            g = graph_from_bits(n, bits)
            part = split_partition(g)
            if part is None:
                assert not brute_is_split(g)
            else:
                cliq, ind = part
                assert is_clique(g, sorted(cliq))
                assert is_independent(g, sorted(ind))
                assert cliq | ind == frozenset(range(g.n))
                assert not cliq & ind


@given(graphs(max_n=7))
def test_split_partition_matches_brute(g):
    assert (split_partition(g) is not None) == brute_is_split(g)


def test_split_partition_known_examples():
    assert split_partition(catalog.cycle(4)) is None
    assert split_partition(catalog.cycle(5)) is None
    assert split_partition(catalog.union_copies(catalog.complete(2), 2)) is None
    assert split_partition(catalog.named_graphs()["paw"]) is not None
    assert split_partition(catalog.complete(4)) is not None


def test_pseudo_split_on_c5_with_attachments():
    # C5, plus one vertex joined to all of it, plus one isolated vertex.
    c5 = catalog.cycle(5)
    g = c5.join(catalog.complete(1)).disjoint_union(catalog.empty(1))
    cyc, cliq, ind = pseudo_split_partition(g)
    assert len(cyc) == 5
    assert cliq == frozenset({5})
    assert ind == frozenset({6})


def test_pseudo_split_rejects_plain_bipartite():
    with pytest.raises(StructureError):
        pseudo_split_partition(catalog.path(4))


def test_pseudo_split_rejects_out_of_class():
    with pytest.raises(ClassViolationError):
        pseudo_split_partition(catalog.union_copies(catalog.complete(2), 2))


def test_extended_c5_bipartite_certificate():
    cert = extended_c5_recognize(catalog.cycle(6))
    assert cert.kind == "bipartite"
    left, right = cert.parts
    assert sorted(left + right) == list(range(6))
    # The certificate is issued before any class gate: C6 holds a 2K2.
    assert not in_class(
        catalog.cycle(6),
        ClassSpec.of([catalog.union_copies(catalog.complete(2), 2)]),
    )


def test_extended_c5_blowup_certificate():
    g = catalog.blowup(catalog.cycle(5), [2, 1, 2, 1, 1]).disjoint_union(
        catalog.empty(2)
    )
    cert = extended_c5_recognize(g)
    assert cert.kind == "blowup"
    assert sorted(cert.sizes) == [1, 1, 1, 2, 2]
    assert len(cert.isolated) == 2
    flat = [v for bag in cert.bags for v in bag] + list(cert.isolated)
    assert sorted(flat) == list(range(g.n))
    # Consecutive bags joined, non-consecutive bags empty.
    for i, bag in enumerate(cert.bags):
        nxt = cert.bags[(i + 1) % 5]
        far = cert.bags[(i + 2) % 5]
        assert all(g.has_edge(u, v) for u in bag for v in nxt)
        assert all(not g.has_edge(u, v) for u in bag for v in far)


def test_extended_c5_rejects_triangle():
    with pytest.raises(ClassViolationError):
        extended_c5_recognize(catalog.complete(3))


def test_chain_dominators_on_chain_graphs():
    # Nested neighborhoods: a staircase built by rows of decreasing width.
    bg = BipartiteGraph.from_edges(
        3, 3, [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]
    )
    a_dom, b_dom = chain_dominators(bg)
    assert a_dom == 0
    assert b_dom == 0
    assert bg.cross[a_dom] == 0b111
    assert all(bg.has_edge(a, b_dom) for a in range(3))


def test_chain_dominators_requires_connected_edge():
    with pytest.raises(StructureError):
        chain_dominators(catalog.bip_complete(2, 2).bipartite_complement())
    with pytest.raises(StructureError):
        chain_dominators(catalog.bip_matching(2))


def test_pigeonhole_independent_set_kneser():
    g, labels = catalog.kneser_labeled(9, 3)
    vs = pigeonhole_independent_set(g, labels)
    assert len(vs) == 28
    assert is_independent(g, list(vs))


def test_pigeonhole_rejects_wide_ground_set():
    g, labels = catalog.kneser_labeled(7, 2)
    with pytest.raises(StructureError):
        pigeonhole_independent_set(g, labels)


def test_verify_homogeneous_accepts_and_rejects():
    k22 = catalog.bip_complete(2, 2)
    good = HomogeneousWitness(kind="biclique", a_side=(0, 1), b_side=(0, 1))
    verify_homogeneous(k22, good, 2)
    bad_kind = HomogeneousWitness(kind="cobiclique", a_side=(0, 1), b_side=(0, 1))
    with pytest.raises(StructureError):
        verify_homogeneous(k22, bad_kind, 2)
    short = HomogeneousWitness(kind="biclique", a_side=(0,), b_side=(0, 1))
    with pytest.raises(StructureError):
        verify_homogeneous(k22, short, 2)
    dup = HomogeneousWitness(kind="biclique", a_side=(0, 0), b_side=(0, 1))
    with pytest.raises(StructureError):
        verify_homogeneous(k22, dup, 2)

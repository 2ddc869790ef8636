import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hramsey import catalog
from hramsey.graph import BipartiteGraph
from hramsey.subgraph import (
    ClassSpec,
    bipartite_contains_part_fixed,
    bipartite_in_class,
    class_violation,
    contains_induced,
    contains_induced_anchored,
    contains_induced_colored,
    in_class,
    in_class_anchored,
)
from oracles import brute_contains_induced
from strategies import bip_graphs, graphs

PATTERNS = [
    catalog.complete(3),
    catalog.path(4),
    catalog.cycle(4),
    catalog.named_graphs()["claw"],
    catalog.named_graphs()["paw"],
    catalog.named_graphs()["diamond"],
    catalog.union_copies(catalog.complete(2), 2),
    catalog.named_graphs()["P2+P3"],
]


@settings(max_examples=40)
@given(graphs(max_n=7), st.sampled_from(PATTERNS))
def test_contains_induced_matches_brute(host, pattern):
    emb = contains_induced(host, pattern)
    assert (emb is not None) == brute_contains_induced(host, pattern)
    if emb is not None:
        assert emb.verify(pattern, host)


def test_self_containment_and_size_gate():
    p4 = catalog.path(4)
    assert contains_induced(p4, p4) is not None
    assert contains_induced(p4, catalog.path(5)) is None
    # P4 contains P3 induced, but C4 does not.
    assert contains_induced(p4, catalog.path(3)) is not None
    assert contains_induced(catalog.cycle(4), catalog.path(3)) is not None
    assert contains_induced(catalog.cycle(4), catalog.complete(3)) is None


def test_class_violation_reports_witness():
    spec = ClassSpec.of([catalog.named_graphs()["claw"]], name="claw-free")
    star = catalog.complete_bipartite(1, 3)
    hit = class_violation(star, spec)
    assert hit is not None
    pattern, emb = hit
    assert pattern.n == 4
    assert emb.verify(pattern, star)
    assert not in_class(star, spec)
    assert in_class(catalog.path(3), spec)


@given(graphs(max_n=7), st.data())
def test_in_class_is_hereditary(g, data):
    spec = ClassSpec.of([catalog.path(4), catalog.complete(3)])
    if in_class(g, spec):
        keep = data.draw(st.sets(st.integers(0, g.n - 1)))
        assert in_class(g.induced(keep), spec)


@given(graphs(min_n=2, max_n=7), st.sampled_from(PATTERNS), st.data())
def test_anchored_implies_plain(host, pattern, data):
    anchor = data.draw(st.integers(0, host.n - 1))
    emb = contains_induced_anchored(host, pattern, anchor)
    if emb is not None:
        assert anchor in emb.mapping
        assert emb.verify(pattern, host)
        assert contains_induced(host, pattern) is not None


def test_anchored_pins_host_vertex():
    # Copies of K3 in the paw all use the triangle, never the pendant.
    paw = catalog.named_graphs()["paw"]
    triangle = catalog.complete(3)
    pendant = next(v for v in range(4) if paw.degree(v) == 1)
    assert contains_induced_anchored(paw, triangle, pendant) is None
    other = (pendant + 1) % 4
    emb = contains_induced_anchored(paw, triangle, other)
    assert emb is not None and other in emb.mapping


def test_in_class_anchored_consistency():
    # New vertex 3 of the paw creates the triangle violation iff it is
    # in every copy; the pendant is in none.
    paw = catalog.named_graphs()["paw"]
    spec = ClassSpec.of([catalog.complete(3)])
    pendant = next(v for v in range(4) if paw.degree(v) == 1)
    assert in_class_anchored(paw, spec, pendant)
    assert not in_class_anchored(paw, spec, (pendant + 1) % 4)


def test_colored_containment():
    # A colored pattern must land on host vertices of matching colors.
    host = catalog.path(4)
    pattern = catalog.path(2)
    host_colors = [0, 1, 1, 0]
    assert (
        contains_induced_colored(host, host_colors, pattern, [0, 1]) is not None
    )
    # Demand an edge between two color-0 vertices: only 0 and 3, nonadjacent.
    assert contains_induced_colored(host, host_colors, pattern, [0, 0]) is None


def test_bipartite_in_class_uses_underlying():
    spec = ClassSpec.of([catalog.named_graphs()["P2+P3"]])
    assert bipartite_in_class(catalog.bip_complete(3, 3), spec)
    assert not bipartite_in_class(catalog.bip_path(7), spec)


def test_part_fixed_containment_respects_parts():
    host = catalog.bip_path(5)  # parts 3 and 2
    pattern = catalog.bip_path(3)  # parts 2 and 1
    assert bipartite_contains_part_fixed(host, pattern) is not None
    # P3 the other way round: one A-vertex with two B-neighbors; the
    # middle path vertex provides it without any part swap.
    tall = BipartiteGraph.from_edges(1, 2, [(0, 0), (0, 1)])
    assert bipartite_contains_part_fixed(host, tall) is not None
    # No vertex of a path has three neighbors, in either orientation.
    claw = catalog.bip_complete(1, 3)
    assert bipartite_contains_part_fixed(host, claw, allow_swap=True) is None


def test_part_fixed_swap_gate():
    host = catalog.bip_complete(2, 3)
    pattern = catalog.bip_complete(3, 2)
    assert bipartite_contains_part_fixed(host, pattern) is None
    assert bipartite_contains_part_fixed(host, pattern, allow_swap=True) is not None


@given(bip_graphs(max_side=4))
def test_part_fixed_self_containment(bg):
    assert bipartite_contains_part_fixed(bg, bg) is not None

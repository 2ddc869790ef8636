"""Constructive partitions and recognizers with self-verifying outputs.

Each finder re-checks its result directly on the adjacency relation before
returning, so callers receive certified witnesses. A StructureError means a
stated precondition failed or (for in-class inputs) an internal invariant
was violated; the latter would be a bug, not a property of the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import complete, cycle, union_copies
from .graph import BipartiteGraph, Graph, bits, popcount
from .invariants import max_clique
from .subgraph import ClassSpec, Embedding, class_violation, contains_induced, in_class


class StructureError(ValueError):
    pass


@dataclass(frozen=True)
class HomogeneousWitness:
    """A balanced biclique ('biclique') or co-biclique ('cobiclique'),
    given by its vertex tuples on the two parts."""

    kind: str
    a_side: tuple[int, ...]
    b_side: tuple[int, ...]


def verify_homogeneous(bg: BipartiteGraph, wit: HomogeneousWitness, size: int) -> None:
    """Check a homogeneous witness directly on the adjacency relation."""
    if wit.kind not in ("biclique", "cobiclique"):
        raise StructureError(f"unknown witness kind {wit.kind!r}")
    for side, limit in ((wit.a_side, bg.nA), (wit.b_side, bg.nB)):
        if len(side) != size or len(set(side)) != size:
            raise StructureError(f"witness side {side} is not {size} distinct vertices")
        if any(v < 0 or v >= limit for v in side):
            raise StructureError(f"witness side {side} out of range")
    want = wit.kind == "biclique"
    for a in wit.a_side:
        for b in wit.b_side:
            if bg.has_edge(a, b) != want:
                raise StructureError(
                    f"witness pair ({a},{b}) breaks the {wit.kind} requirement"
                )


class ClassViolationError(StructureError):
    """The input leaves the required hereditary class; carries the evidence."""

    def __init__(self, message: str, pattern: Graph, embedding: Embedding):
        super().__init__(message)
        self.pattern = pattern
        self.embedding = embedding


def _require_class(g: Graph, spec: ClassSpec, context: str) -> None:
    hit = class_violation(g, spec)
    if hit is not None:
        pattern, emb = hit
        raise ClassViolationError(
            f"{context}: input contains a forbidden {pattern.n}-vertex pattern at {emb.mapping}",
            pattern,
            emb,
        )


def _is_clique(g: Graph, vertices: frozenset[int]) -> bool:
    return all(g.has_edge(x, y) for x in vertices for y in vertices if x < y)


def _is_independent(g: Graph, vertices: frozenset[int]) -> bool:
    return not any(g.has_edge(x, y) for x in vertices for y in vertices if x < y)


def split_partition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Clique/independent-set partition, or None when no such partition exists.

    Starts from a maximum clique; if the remainder has an edge, one endpoint
    of that edge has a unique non-neighbor in the clique exactly when the
    graph is split, and swapping them lands on a valid partition.
    """
    cliq = frozenset(max_clique(g))
    rest = frozenset(range(g.n)) - cliq
    bad = next(
        ((x, y) for x in rest for y in rest if x < y and g.has_edge(x, y)), None
    )
    if bad is None:
        return cliq, rest
    for z in bad:
        missing = [u for u in cliq if not g.has_edge(z, u)]
        if len(missing) != 1:
            continue
        swapped = (cliq - {missing[0]}) | {z}
        remainder = frozenset(range(g.n)) - swapped
        if _is_clique(g, swapped) and _is_independent(g, remainder):
            return swapped, remainder
    return None


_PSEUDO_SPLIT_SPEC = ClassSpec.of(
    [union_copies(complete(2), 2), cycle(4)], name="pseudo-split"
)


def pseudo_split_partition(
    g: Graph,
) -> tuple[tuple[int, ...], frozenset[int], frozenset[int]]:
    """Partition into an induced C5, a clique complete to it, and an
    independent set anticomplete to it.

    Requires a 2K2-free, C4-free input that contains an induced C5. Every
    off-cycle vertex sees either all five or none of the cycle vertices;
    anything else contradicts membership in the class.
    """
    _require_class(g, _PSEUDO_SPLIT_SPEC, "pseudo_split_partition")
    emb = contains_induced(g, cycle(5))
    if emb is None:
        raise StructureError("pseudo_split_partition: input has no induced C5")
    ring = emb.mapping
    ring_set = set(ring)
    ring_mask = 0
    for v in ring:
        ring_mask |= 1 << v
    clique_side: set[int] = set()
    indep_side: set[int] = set()
    for v in range(g.n):
        if v in ring_set:
            continue
        hits = popcount(g.adj[v] & ring_mask)
        if hits == 5:
            clique_side.add(v)
        elif hits == 0:
            indep_side.add(v)
        else:
            raise StructureError(
                f"pseudo_split_partition: vertex {v} meets the cycle in {hits} vertices"
            )
    if not _is_clique(g, frozenset(clique_side)):
        raise StructureError("pseudo_split_partition: cycle-dominating side is not a clique")
    if not _is_independent(g, frozenset(indep_side)):
        raise StructureError("pseudo_split_partition: cycle-avoiding side is not independent")
    return ring, frozenset(clique_side), frozenset(indep_side)


_TRIANGLE_FREE_2K2_SPEC = ClassSpec.of(
    [union_copies(complete(2), 2), complete(3)], name="2k2-k3-free"
)


@dataclass(frozen=True)
class ExtendedC5:
    """Recognition certificate: a bipartition, or a C5 blowup plus isolated
    vertices (five independent bags, consecutive bags completely joined)."""

    kind: str
    parts: tuple[tuple[int, ...], tuple[int, ...]] | None
    bags: tuple[tuple[int, ...], ...] | None
    isolated: tuple[int, ...]

    @property
    def sizes(self) -> tuple[int, ...] | None:
        if self.bags is None:
            return None
        return tuple(len(bag) for bag in self.bags)


def extended_c5_recognize(g: Graph) -> ExtendedC5:
    """Certify a 2K2-free triangle-free graph as bipartite or as a blown-up
    C5 together with isolated vertices.

    A bipartition certificate is returned for any bipartite input; the class
    precondition is only enforced on the non-bipartite branch, where it is
    what guarantees the blowup structure exists.
    """
    sides = g.bipartition()
    if sides is not None:
        left, right = sides
        return ExtendedC5(
            kind="bipartite",
            parts=(tuple(bits(left)), tuple(bits(right))),
            bags=None,
            isolated=tuple(v for v in range(g.n) if g.degree(v) == 0),
        )
    _require_class(g, _TRIANGLE_FREE_2K2_SPEC, "extended_c5_recognize")
    emb = contains_induced(g, cycle(5))
    if emb is None:
        raise StructureError(
            "extended_c5_recognize: non-bipartite input with no induced C5"
        )
    ring = emb.mapping
    bags: list[list[int]] = [[s] for s in ring]
    isolated: list[int] = []
    slot_of = {frozenset((ring[(i - 1) % 5], ring[(i + 1) % 5])): i for i in range(5)}
    ring_mask = 0
    for v in ring:
        ring_mask |= 1 << v
    for v in range(g.n):
        if v in set(ring):
            continue
        if g.degree(v) == 0:
            isolated.append(v)
            continue
        seen = frozenset(bits(g.adj[v] & ring_mask))
        slot = slot_of.get(seen)
        if slot is None:
            raise StructureError(
                f"extended_c5_recognize: vertex {v} does not fit any cycle bag"
            )
        bags[slot].append(v)
    for i in range(5):
        for j in range(i + 1, 5):
            joined = (j - i) % 5 in (1, 4)
            for x in bags[i]:
                for y in bags[j]:
                    if g.has_edge(x, y) != joined:
                        raise StructureError(
                            f"extended_c5_recognize: bag adjacency broken at ({x},{y})"
                        )
        if not _is_independent(g, frozenset(bags[i])):
            raise StructureError(f"extended_c5_recognize: bag {i} is not independent")
    return ExtendedC5(
        kind="blowup",
        parts=None,
        bags=tuple(tuple(sorted(bag)) for bag in bags),
        isolated=tuple(isolated),
    )


_CHAIN_SPEC = ClassSpec.of([union_copies(complete(2), 2)], name="2k2-free")


def chain_dominators(bg: BipartiteGraph) -> tuple[int, int]:
    """In a connected 2K2-free two-part graph with an edge, each part holds a
    vertex adjacent to every non-isolated vertex of the opposite part."""
    under = bg.underlying()
    if bg.edge_count() == 0:
        raise StructureError("chain_dominators: input has no edge")
    if not under.is_connected():
        raise StructureError("chain_dominators: input is disconnected")
    _require_class(under, _CHAIN_SPEC, "chain_dominators")
    active_b = 0
    for a in range(bg.nA):
        active_b |= bg.cross[a]
    active_a = [a for a in range(bg.nA) if bg.cross[a]]
    a_dom = next((a for a in range(bg.nA) if bg.cross[a] & active_b == active_b), None)
    b_dom = next(
        (
            b
            for b in range(bg.nB)
            if all(bg.has_edge(a, b) for a in active_a)
        ),
        None,
    )
    if a_dom is None or b_dom is None:
        raise StructureError("chain_dominators: no dominating pair found")
    return a_dom, b_dom


def pigeonhole_independent_set(
    g: Graph, labels: tuple[frozenset[int], ...]
) -> tuple[int, ...]:
    """Largest element class of a disjointness graph on equal-size sets.

    Vertices labeled by r-sets drawn from a ground set of at most 3r
    elements; the class of vertices whose label holds a fixed element is
    independent (its sets pairwise intersect), and the biggest such class
    covers at least a third of the vertices.
    """
    if len(labels) != g.n or g.n == 0:
        raise StructureError("pigeonhole_independent_set: labels must cover the vertices")
    r = len(labels[0])
    if r == 0 or any(len(lab) != r for lab in labels):
        raise StructureError("pigeonhole_independent_set: labels must be equal-size nonempty sets")
    ground = sorted(set().union(*labels))
    if len(ground) > 3 * r:
        raise StructureError(
            f"pigeonhole_independent_set: ground set has {len(ground)} > 3*{r} elements"
        )
    best: tuple[int, ...] = ()
    for e in ground:
        cls = tuple(v for v in range(g.n) if e in labels[v])
        if len(cls) > len(best):
            best = cls
    if 3 * len(best) < g.n:
        raise StructureError("pigeonhole_independent_set: pigeonhole bound failed")
    if not _is_independent(g, frozenset(best)):
        raise StructureError("pigeonhole_independent_set: element class is not independent")
    return best

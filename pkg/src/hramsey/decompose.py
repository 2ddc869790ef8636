"""Canonical decomposition of two-part graphs and a linear homogeneous finder.

A graph splits as a disjoint union (underlying components), a join
(components of the part-respecting complement), or a skew join
G1 (/) G2, which adds every edge between the A-side of G1 and the B-side
of G2. Trees built here use that priority order; graphs admitting none of
the three are decomposition leaves.

Skew cuts are located on the B-side neighborhood order: group B by exact
neighborhood, sort groups by size, and test each boundary for
prefix-union contained in suffix-intersection. Every skew decomposition
induces such a boundary cut, so the scan is complete; recomposition tests
certify each tree bit-for-bit.

s123_find_homogeneous peels decomposition pieces smaller-A-side first.
Peeled vertices are uniformly joined or co-joined to what remains, so
once the remainder is a leaf, counting arguments hand back a balanced
biclique or co-biclique of order n from any input with parts of size at
least 6n. Leaves with large parts are handled through their twin
quotient, which for the relevant leaves is a path or a cycle; leaves
without that shape fall back to exact search.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import s123
from .graph import BipartiteGraph, bits, popcount
from .invariants import find_balanced_biclique, find_balanced_cobiclique
from .structure import (
    ClassViolationError,
    HomogeneousWitness,
    StructureError,
    verify_homogeneous,
)
from .subgraph import ClassSpec, class_violation

Walk = tuple[tuple[str, tuple[int, ...]], ...]


@dataclass(frozen=True)
class DTree:
    kind: str
    a_ids: tuple[int, ...]
    b_ids: tuple[int, ...]
    children: tuple["DTree", ...]
    graph: BipartiteGraph | None
    walk: Walk | None

    def to_dict(self) -> dict:
        node: dict = {"kind": self.kind, "a": list(self.a_ids), "b": list(self.b_ids)}
        if self.kind == "leaf":
            if self.graph is not None:
                node["graph"] = self.graph.to_line()
            if self.walk is not None:
                node["walk"] = [[part, list(verts)] for part, verts in self.walk]
        else:
            node["children"] = [c.to_dict() for c in self.children]
        return node


Split = tuple[str, list[tuple[list[int], list[int]]]]


def _union_split(sub: BipartiteGraph) -> list[tuple[list[int], list[int]]] | None:
    comps = sub.underlying().components()
    if len(comps) < 2:
        return None
    parts = []
    for mask in comps:
        verts = list(bits(mask))
        parts.append(
            ([v for v in verts if v < sub.nA], [v - sub.nA for v in verts if v >= sub.nA])
        )
    return parts


def _skew_split(sub: BipartiteGraph) -> list[tuple[list[int], list[int]]] | None:
    cols = [0] * sub.nB
    for a in range(sub.nA):
        row = sub.cross[a]
        while row:
            b = (row & -row).bit_length() - 1
            cols[b] |= 1 << a
            row &= row - 1
    groups: dict[int, list[int]] = {}
    for b in range(sub.nB):
        groups.setdefault(cols[b], []).append(b)
    keys = sorted(groups, key=lambda m: (popcount(m), m))
    if len(keys) < 2:
        return None
    suffix_inter = [0] * (len(keys) + 1)
    suffix_inter[len(keys)] = (1 << sub.nA) - 1
    for i in range(len(keys) - 1, -1, -1):
        suffix_inter[i] = suffix_inter[i + 1] & keys[i]
    prefix_union = 0
    for t in range(1, len(keys)):
        prefix_union |= keys[t - 1]
        if prefix_union & ~suffix_inter[t]:
            continue
        b1 = sorted(b for k in keys[:t] for b in groups[k])
        b2 = sorted(b for k in keys[t:] for b in groups[k])
        b1_mask = 0
        for b in b1:
            b1_mask |= 1 << b
        a1 = [a for a in range(sub.nA) if sub.cross[a] & b1_mask]
        a2 = [a for a in range(sub.nA) if not sub.cross[a] & b1_mask]
        return [(a1, b1), (a2, b2)]
    return None


def decompose_once(sub: BipartiteGraph) -> Split | None:
    """One decomposition step in priority order, or None for a leaf.

    Union and join list every component as a child; skew returns the two
    sides of the cut with the completely-joined pair ordered first-A to
    second-B. Graphs with at most one vertex per part are leaves.
    """
    if sub.nA <= 1 and sub.nB <= 1:
        return None
    parts = _union_split(sub)
    if parts is not None:
        return ("union", parts)
    parts = _union_split(sub.bipartite_complement())
    if parts is not None:
        return ("join", parts)
    parts = _skew_split(sub)
    if parts is not None:
        return ("skew", parts)
    return None


def twin_walk(bg: BipartiteGraph) -> Walk | None:
    """Walk order of the twin-quotient when it is a path or a cycle.

    Vertices with identical neighborhoods collapse into one quotient node;
    the walk lists each node as (part, member vertices). None when the
    quotient is not a single path or cycle.
    """
    cols = [0] * bg.nB
    for a in range(bg.nA):
        row = bg.cross[a]
        while row:
            b = (row & -row).bit_length() - 1
            cols[b] |= 1 << a
            row &= row - 1
    a_groups: dict[int, list[int]] = {}
    for a in range(bg.nA):
        a_groups.setdefault(bg.cross[a], []).append(a)
    b_groups: dict[int, list[int]] = {}
    for b in range(bg.nB):
        b_groups.setdefault(cols[b], []).append(b)
    nodes: list[tuple[str, tuple[int, ...]]] = [
        ("A", tuple(v)) for v in a_groups.values()
    ] + [("B", tuple(v)) for v in b_groups.values()]
    if not nodes:
        return None

    def node_key(i: int) -> int:
        part, verts = nodes[i]
        return min(verts) if part == "A" else bg.nA + min(verts)

    nbr: list[list[int]] = [[] for _ in nodes]
    for i, (pi, vi) in enumerate(nodes):
        if pi != "A":
            continue
        for j, (pj, vj) in enumerate(nodes):
            if pj == "B" and bg.has_edge(vi[0], vj[0]):
                nbr[i].append(j)
                nbr[j].append(i)
    if any(len(ns) > 2 for ns in nbr):
        return None
    edge_count = sum(len(ns) for ns in nbr) // 2
    seen = {0}
    frontier = [0]
    while frontier:
        cur = frontier.pop()
        for j in nbr[cur]:
            if j not in seen:
                seen.add(j)
                frontier.append(j)
    if len(seen) != len(nodes):
        return None
    if edge_count == len(nodes) - 1:
        ends = [i for i in range(len(nodes)) if len(nbr[i]) <= 1]
        start = min(ends, key=node_key)
    elif edge_count == len(nodes):
        start = min(range(len(nodes)), key=node_key)
    else:
        return None
    order = [start]
    if nbr[start]:
        order.append(min(nbr[start], key=node_key))
        while True:
            nxt = [j for j in nbr[order[-1]] if j != order[-2]]
            if not nxt or nxt[0] == start:
                break
            order.append(nxt[0])
    return tuple(nodes[i] for i in order)


def canonical_decompose(bg: BipartiteGraph) -> DTree:
    def rec(a_ids: list[int], b_ids: list[int]) -> DTree:
        sub = bg.induced(a_ids, b_ids)
        split = decompose_once(sub)
        if split is None:
            return DTree(
                "leaf",
                tuple(a_ids),
                tuple(b_ids),
                (),
                sub,
                _map_walk(twin_walk(sub), a_ids, b_ids),
            )
        kind, parts = split
        children = [
            rec([a_ids[i] for i in pa], [b_ids[i] for i in pb]) for pa, pb in parts
        ]
        if kind != "skew":
            children.sort(
                key=lambda c: min(
                    [v for v in c.a_ids] + [bg.nA + v for v in c.b_ids]
                )
            )
        return DTree(kind, tuple(a_ids), tuple(b_ids), tuple(children), None, None)

    return rec(list(range(bg.nA)), list(range(bg.nB)))


def _map_walk(walk: Walk | None, a_ids: list[int], b_ids: list[int]) -> Walk | None:
    if walk is None:
        return None
    return tuple(
        (part, tuple(a_ids[v] if part == "A" else b_ids[v] for v in verts))
        for part, verts in walk
    )


def recompose(tree: DTree, nA: int, nB: int) -> BipartiteGraph:
    """Rebuild the graph a tree describes, in the original coordinates."""
    edges: list[tuple[int, int]] = []

    def emit(node: DTree) -> None:
        if node.kind == "leaf":
            g = node.graph
            for a in range(g.nA):
                for b in range(g.nB):
                    if g.has_edge(a, b):
                        edges.append((node.a_ids[a], node.b_ids[b]))
            return
        for child in node.children:
            emit(child)
        if node.kind == "join":
            for i, ci in enumerate(node.children):
                for j, cj in enumerate(node.children):
                    if i != j:
                        edges.extend((a, b) for a in ci.a_ids for b in cj.b_ids)
        elif node.kind == "skew":
            first, second = node.children
            edges.extend((a, b) for a in first.a_ids for b in second.b_ids)

    emit(tree)
    return BipartiteGraph.from_edges(nA, nB, edges)


_S123_SPEC = ClassSpec.of([s123()], name="s123-free")


def _classify_probes(
    bg: BipartiteGraph,
    probes: list[int],
    probes_are_a: bool,
    target: list[int],
    n: int,
    context: str,
) -> HomogeneousWitness:
    joined: list[int] = []
    cojoined: list[int] = []
    for v in probes:
        hits = sum(
            1
            for t in target
            if (bg.has_edge(v, t) if probes_are_a else bg.has_edge(t, v))
        )
        if hits == len(target):
            joined.append(v)
        elif hits == 0:
            cojoined.append(v)
        else:
            raise StructureError(
                f"{context}: vertex {v} is neither joined nor co-joined to the remainder"
            )
    for bucket, kind in ((joined, "biclique"), (cojoined, "cobiclique")):
        if len(bucket) >= n:
            chosen, others = bucket[:n], sorted(target)[:n]
            a_side, b_side = (chosen, others) if probes_are_a else (others, chosen)
            return HomogeneousWitness(kind, tuple(a_side), tuple(b_side))
    raise StructureError(f"{context}: neither side of the classification reaches {n}")


def _walk_cobiclique(
    g2: BipartiteGraph, walk: Walk, side: str, n: int
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    my_classes = [verts for part, verts in walk if part == side]
    opp_range = range(g2.nB) if side == "A" else range(g2.nA)

    def edge(mine: int, other: int) -> bool:
        return g2.has_edge(mine, other) if side == "A" else g2.has_edge(other, mine)

    prefix: list[int] = []
    consumed = 0
    for verts in my_classes:
        prefix.extend(verts)
        consumed += 1
        if len(prefix) >= n:
            break
    if len(prefix) < n:
        return None
    far = [o for o in opp_range if not any(edge(v, o) for v in prefix)]
    if len(far) >= n:
        return tuple(prefix[:n]), tuple(far[:n])
    suffix = [v for verts in my_classes[consumed:] for v in verts]
    if len(suffix) < n:
        return None
    far2 = [o for o in opp_range if not any(edge(v, o) for v in suffix)]
    if len(far2) >= n:
        return tuple(suffix[:n]), tuple(far2[:n])
    return None


def _leaf_homogeneous(
    bg: BipartiteGraph, a_ids: list[int], b_ids: list[int], n: int
) -> HomogeneousWitness:
    sub = bg.induced(a_ids, b_ids)
    for flipped in (False, True):
        g2 = sub.bipartite_complement() if flipped else sub
        kind_joined = "cobiclique" if flipped else "biclique"
        kind_cojoined = "biclique" if flipped else "cobiclique"

        cols = [0] * g2.nB
        for a in range(g2.nA):
            row = g2.cross[a]
            while row:
                b = (row & -row).bit_length() - 1
                cols[b] |= 1 << a
                row &= row - 1
        groups: list[tuple[str, list[int], list[int]]] = []
        seen_a: dict[int, list[int]] = {}
        for a in range(g2.nA):
            seen_a.setdefault(g2.cross[a], []).append(a)
        for mask, members in seen_a.items():
            groups.append(("A", members, list(bits(mask))))
        seen_b: dict[int, list[int]] = {}
        for b in range(g2.nB):
            seen_b.setdefault(cols[b], []).append(b)
        for mask, members in seen_b.items():
            groups.append(("B", members, list(bits(mask))))
        for part, members, nbrs in groups:
            if len(members) < n:
                continue
            opp_size = g2.nB if part == "A" else g2.nA
            if len(nbrs) >= n:
                mine, others, kind = members[:n], nbrs[:n], kind_joined
            else:
                outside = [o for o in range(opp_size) if o not in set(nbrs)]
                if len(outside) < n:
                    continue
                mine, others, kind = members[:n], outside[:n], kind_cojoined
            a_rel, b_rel = (mine, others) if part == "A" else (others, mine)
            return HomogeneousWitness(
                kind,
                tuple(a_ids[v] for v in a_rel),
                tuple(b_ids[v] for v in b_rel),
            )

        walk = twin_walk(g2)
        if walk is None:
            continue
        for side in ("A", "B"):
            found = _walk_cobiclique(g2, walk, side, n)
            if found is None:
                continue
            mine, others = found
            a_rel, b_rel = (mine, others) if side == "A" else (others, mine)
            return HomogeneousWitness(
                kind_cojoined,
                tuple(a_ids[v] for v in a_rel),
                tuple(b_ids[v] for v in b_rel),
            )

    hit = find_balanced_biclique(sub, n)
    if hit is not None:
        return HomogeneousWitness(
            "biclique",
            tuple(a_ids[v] for v in hit[0]),
            tuple(b_ids[v] for v in hit[1]),
        )
    hit = find_balanced_cobiclique(sub, n)
    if hit is not None:
        return HomogeneousWitness(
            "cobiclique",
            tuple(a_ids[v] for v in hit[0]),
            tuple(b_ids[v] for v in hit[1]),
        )
    raise StructureError("leaf search found no homogeneous set of the required order")


def s123_find_homogeneous(bg: BipartiteGraph, n: int) -> HomogeneousWitness:
    """A verified K_{n,n} or its complement in an S123-free input with both
    parts of size at least 6n."""
    if n < 1:
        raise StructureError("s123_find_homogeneous: needs n >= 1")
    if bg.nA < 6 * n or bg.nB < 6 * n:
        raise StructureError(
            f"s123_find_homogeneous: parts ({bg.nA},{bg.nB}) below 6n = {6 * n}"
        )
    hit = class_violation(bg.underlying(), _S123_SPEC)
    if hit is not None:
        pattern, emb = hit
        raise ClassViolationError(
            f"s123_find_homogeneous: forbidden subdivided claw at {emb.mapping}",
            pattern,
            emb,
        )

    pieces_a: list[list[int]] = []
    pieces_b: list[list[int]] = []
    cur_a, cur_b = list(range(bg.nA)), list(range(bg.nB))
    while True:
        sub = bg.induced(cur_a, cur_b)
        split = decompose_once(sub)
        if split is None:
            break
        _, parts = split
        mapped = [
            (sorted(cur_a[i] for i in pa), sorted(cur_b[i] for i in pb))
            for pa, pb in parts
        ]
        piece_at = min(range(len(mapped)), key=lambda i: (len(mapped[i][0]), mapped[i]))
        pieces_a.append(mapped[piece_at][0])
        pieces_b.append(mapped[piece_at][1])
        cur_a = sorted(v for i, (pa, _) in enumerate(mapped) if i != piece_at for v in pa)
        cur_b = sorted(v for i, (_, pb) in enumerate(mapped) if i != piece_at for v in pb)

    if len(cur_a) >= 4 * n and len(cur_b) >= 4 * n:
        wit = _leaf_homogeneous(bg, cur_a, cur_b, n)
    elif len(cur_a) >= 4 * n:
        peeled_b = [b for piece in pieces_b for b in piece]
        wit = _classify_probes(bg, peeled_b, False, cur_a, n, "s123 small-B case")
    else:
        cum = 0
        upto = 0
        while cum < 2 * n:
            cum += len(pieces_a[upto])
            upto += 1
        a_prefix = [a for piece in pieces_a[:upto] for a in piece]
        b_prefix = [b for piece in pieces_b[:upto] for b in piece]
        a_rest = sorted(
            [a for piece in pieces_a[upto:] for a in piece] + cur_a
        )
        b_rest = sorted(
            [b for piece in pieces_b[upto:] for b in piece] + cur_b
        )
        if len(b_rest) >= n:
            wit = _classify_probes(bg, a_prefix, True, b_rest, n, "s123 prefix-A case")
        else:
            wit = _classify_probes(bg, b_prefix, False, a_rest, n, "s123 prefix-B case")
    verify_homogeneous(bg, wit, n)
    return wit

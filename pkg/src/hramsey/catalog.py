"""Named small graphs and parametric graph families used across the package."""

from __future__ import annotations

from itertools import combinations
from math import comb

from .graph import BipartiteGraph, Graph, GraphError, MAX_VERTICES


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.complete(n)


def empty(n: int) -> Graph:
    return Graph.empty(n)


def complete_bipartite(s: int, t: int) -> Graph:
    return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def union_copies(g: Graph, k: int) -> Graph:
    out = Graph.empty(0)
    for _ in range(k):
        out = out.disjoint_union(g)
    return out


def claw() -> Graph:
    return complete_bipartite(1, 3)


def co_claw() -> Graph:
    return claw().complement()


def diamond() -> Graph:
    # K4 minus one edge.
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def co_diamond() -> Graph:
    return diamond().complement()


def paw() -> Graph:
    # Triangle with a pendant vertex.
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def co_paw() -> Graph:
    return paw().complement()


def p2_plus_p3() -> Graph:
    return path(2).disjoint_union(path(3))


def s123() -> Graph:
    """The tree with one center growing legs of lengths 1, 2, and 3."""
    return Graph.from_edges(
        7, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]
    )


def rook3() -> Graph:
    """3-by-3 rook's graph: cells adjacent in the same row or column."""
    edges = []
    for r in range(3):
        for c in range(3):
            v = 3 * r + c
            for c2 in range(c + 1, 3):
                edges.append((v, 3 * r + c2))
            for r2 in range(r + 1, 3):
                edges.append((v, 3 * r2 + c))
    return Graph.from_edges(9, edges)


def prism() -> Graph:
    """Two triangles joined by a perfect matching (the complement of C6)."""
    return cycle(6).complement()


def triangle_tower() -> Graph:
    """Nine vertices in three triangles T_0, T_1, T_2 with directed-style
    cross edges a_i~b_j, b_i~c_j, c_i~a_j exactly when i <= j.

    Vertex 3i is a_i, 3i+1 is b_i, 3i+2 is c_i.
    """
    edges = []
    for i in range(3):
        for j in range(i, 3):
            edges.append((3 * i, 3 * j + 1))
            edges.append((3 * i + 1, 3 * j + 2))
            edges.append((3 * i + 2, 3 * j))
    return Graph.from_edges(9, edges)


def blowup(g: Graph, sizes: list[int]) -> Graph:
    """Replace vertex i by an independent set of sizes[i] vertices.

    Two bag vertices are adjacent iff their originals were adjacent.
    """
    if len(sizes) != g.n:
        raise GraphError("one size per vertex required")
    if any(s < 0 for s in sizes):
        raise GraphError("bag sizes must be nonnegative")
    starts = []
    total = 0
    for s in sizes:
        starts.append(total)
        total += s
    edges = []
    for u, v in g.edges():
        for i in range(sizes[u]):
            for j in range(sizes[v]):
                edges.append((starts[u] + i, starts[v] + j))
    return Graph.from_edges(total, edges)


def kneser(a: int, b: int) -> Graph:
    return kneser_labeled(a, b)[0]


def kneser_labeled(a: int, b: int) -> tuple[Graph, tuple[frozenset[int], ...]]:
    """Kneser graph on the b-subsets of {0..a-1}, adjacent iff disjoint.

    Returns the graph together with the subset label of each vertex
    (vertices in lexicographic subset order).
    """
    if b < 1 or a < b:
        raise GraphError("need 1 <= b <= a")
    if comb(a, b) > MAX_VERTICES:
        raise GraphError(f"kneser({a},{b}) exceeds {MAX_VERTICES} vertices")
    labels = tuple(frozenset(c) for c in combinations(range(a), b))
    n = len(labels)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if not (labels[i] & labels[j])
    ]
    return Graph.from_edges(n, edges), labels


def petersen() -> Graph:
    return kneser(5, 2)


def bip_path(n: int) -> BipartiteGraph:
    """P_n with even path positions in the first part."""
    nA = (n + 1) // 2
    nB = n // 2
    edges = []
    for i in range(n - 1):
        if i % 2 == 0:
            edges.append((i // 2, i // 2))
        else:
            edges.append(((i + 1) // 2, i // 2))
    return BipartiteGraph.from_edges(nA, nB, edges)


def bip_cycle(n: int) -> BipartiteGraph:
    if n < 4 or n % 2:
        raise GraphError("two-part cycles must have even length >= 4")
    half = n // 2
    edges = []
    for i in range(half):
        edges.append((i, i))
        edges.append(((i + 1) % half, i))
    return BipartiteGraph.from_edges(half, half, edges)


def bip_matching(k: int) -> BipartiteGraph:
    return BipartiteGraph.from_edges(k, k, [(i, i) for i in range(k)])


def bip_complete(nA: int, nB: int) -> BipartiteGraph:
    return BipartiteGraph.complete_graph(nA, nB)


def double_star_gadget(p: int, q: int) -> BipartiteGraph:
    """Two centers c1, c2 in one part; opposite part holds p leaves of c1,
    q leaves of c2, one vertex adjacent to both centers, and one isolated
    vertex.  The second part has p+q+2 vertices.
    """
    if p < 1 or q < 1:
        raise GraphError("need p, q >= 1")
    edges = [(0, i) for i in range(p)]
    edges += [(1, p + i) for i in range(q)]
    shared = p + q
    edges += [(0, shared), (1, shared)]
    return BipartiteGraph.from_edges(2, p + q + 2, edges)


_NAMED = {
    "claw": claw,
    "co-claw": co_claw,
    "diamond": diamond,
    "co-diamond": co_diamond,
    "paw": paw,
    "co-paw": co_paw,
    "rook3": rook3,
    "prism": prism,
    "petersen": petersen,
    "S123": s123,
    "P2+P3": p2_plus_p3,
    "T9": triangle_tower,
}


def named_graphs() -> dict[str, Graph]:
    return {name: make() for name, make in _NAMED.items()}

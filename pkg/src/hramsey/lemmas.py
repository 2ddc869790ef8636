"""Machine checks for the structural facts behind the exact formulas.

Each registered fact pairs a hypothesis with a conclusion over a hereditary
class. verify_structure_lemma enumerates every class member up to a size
cap, filters by the hypothesis, and tests the conclusion, reporting any
counterexample graphs verbatim. Finiteness facts instead assert that the
class dies out above a stated order; the two-part containment fact checks
an embedding target for every forest whose part-respecting complement is
also a forest.

Registered checks are data: a new fact is a new registry entry built from
the shared predicate helpers, not a new code path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from . import catalog
from .catalog import double_star_gadget, named_graphs
from .graph import BipartiteGraph, Graph, bits, mask_of, popcount
from .invariants import clique_number, independence_number
from .exhaustive import enumerate_bipartite_grid, enumerate_class
from .structure import StructureError, extended_c5_recognize, split_partition
from .subgraph import ClassSpec, bipartite_contains_part_fixed, contains_induced


class LemmaError(ValueError):
    pass


@dataclass(frozen=True)
class LemmaReport:
    lid: str
    cap: int
    hypothesis_count: int
    counterexamples: tuple[str, ...]
    details: tuple[tuple[str, int], ...]
    ok: bool

    def to_dict(self) -> dict:
        return {
            "lemma": self.lid,
            "cap": self.cap,
            "hypothesis_count": self.hypothesis_count,
            "counterexamples": list(self.counterexamples),
            "details": {k: v for k, v in self.details},
            "ok": self.ok,
        }


@dataclass(frozen=True)
class Lemma:
    lid: str
    description: str
    kind: str
    forbidden: tuple[str, ...]
    default_cap: int
    hypothesis: Callable[[Graph], bool] | None = None
    conclusion: Callable[[Graph], bool] | None = None
    max_order: int = 0
    prune: Callable[[Graph], bool] | None = None


def _named(name: str) -> Graph:
    table = named_graphs()
    if name in table:
        return table[name]
    builders = {
        "2K2": lambda: catalog.union_copies(catalog.complete(2), 2),
        "K3": lambda: catalog.complete(3),
        "K4": lambda: catalog.complete(4),
        "co-K4": lambda: catalog.empty(4),
        "P4": lambda: catalog.path(4),
        "C4": lambda: catalog.cycle(4),
    }
    return builders[name]()


def _spec(names: tuple[str, ...]) -> ClassSpec:
    return ClassSpec.of([_named(n) for n in names], name=",".join(names))


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for x, y, z in itertools.combinations(range(g.n), 3):
        if g.has_edge(x, y) and g.has_edge(x, z) and g.has_edge(y, z):
            out.append((x, y, z))
    return out


def _two_colorings(g: Graph):
    """Every proper 2-coloring, as masks (side0, side1)."""
    comps = g.components()
    per_comp = []
    for comp in comps:
        verts = list(bits(comp))
        color = {verts[0]: 0}
        queue = [verts[0]]
        ok = True
        while queue:
            v = queue.pop()
            for u in bits(g.adj[v] & comp):
                if u in color:
                    if color[u] == color[v]:
                        ok = False
                        break
                else:
                    color[u] = color[v] ^ 1
                    queue.append(u)
            if not ok:
                break
        if not ok:
            return
        side = mask_of(v for v, c in color.items() if c == 0)
        per_comp.append((side, comp & ~side))
    for flips in itertools.product((0, 1), repeat=len(per_comp)):
        a = b = 0
        for (s0, s1), f in zip(per_comp, flips):
            a |= s1 if f else s0
            b |= s0 if f else s1
        yield a, b


def _is_simplex(g: Graph) -> bool:
    """Some bipartition leaves every vertex at most one non-neighbor across."""
    for a_mask, b_mask in _two_colorings(g):
        if all(
            popcount(b_mask & ~g.adj[v]) <= 1 for v in bits(a_mask)
        ) and all(popcount(a_mask & ~g.adj[v]) <= 1 for v in bits(b_mask)):
            return True
    return False


def _is_complete_bip_plus_isolated(g: Graph) -> bool:
    isolated = [v for v in range(g.n) if g.degree(v) == 0]
    if len(isolated) != 1:
        return False
    rest = g.induced([v for v in range(g.n) if v != isolated[0]])
    for a_mask, b_mask in _two_colorings(rest):
        if all(rest.adj[v] == b_mask for v in bits(a_mask)):
            return True
    return False


def _minus_dominating_is_bipartite(g: Graph) -> bool:
    keep = [v for v in range(g.n) if g.degree(v) < g.n - 1]
    return g.induced(keep).bipartition() is not None


def _is_path_graph(g: Graph) -> bool:
    return g.is_connected() and g.is_forest() and all(g.degree(v) <= 2 for v in range(g.n))


def _is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and g.is_connected() and all(g.degree(v) == 2 for v in range(g.n))


def _co_degree_at_most_one(g: Graph) -> bool:
    return all(g.degree(v) >= g.n - 2 for v in range(g.n))


def _cdpc_conclusion(g: Graph) -> bool:
    comps = g.components()
    if len(comps) == 1:
        return (
            (_is_path_graph(g) and g.n <= 5)
            or (_is_cycle_graph(g) and g.n <= 6)
            or _co_degree_at_most_one(g)
        )
    if len(comps) == 2:
        parts = [g.induced(list(bits(c))) for c in comps]
        if all(p.edge_count() == p.n * (p.n - 1) // 2 for p in parts):
            return True
        singles = [p for p in parts if p.n == 1]
        others = [p for p in parts if p.n > 1]
        return len(singles) == 1 and _co_degree_at_most_one(others[0])
    return g.edge_count() == 0


def _split_partition_sparse(g: Graph) -> bool:
    found = split_partition(g)
    if found is None:
        return False
    clique, indep = found
    c_mask = mask_of(clique)
    return all(popcount(g.adj[v] & c_mask) <= 1 for v in indep)


def _extended_c5_or_bipartite(g: Graph) -> bool:
    try:
        extended_c5_recognize(g)
        return True
    except StructureError:
        return False


def _triangles_disjoint(g: Graph) -> bool:
    tris = _triangles(g)
    return all(
        set(s).isdisjoint(t) for s, t in itertools.combinations(tris, 2)
    )


def _edge_one_neighbor_per_triangle(g: Graph) -> bool:
    tris = _triangles(g)
    for x, y in g.edges():
        for tri in tris:
            if x in tri or y in tri:
                continue
            t_mask = mask_of(tri)
            if popcount(g.adj[x] & t_mask) != 1 or popcount(g.adj[y] & t_mask) != 1:
                return False
    return True


def _no_c5_avoiding_triangle(g: Graph) -> bool:
    tris = _triangles(g)
    c5 = catalog.cycle(5)
    for tri in tris:
        rest = [v for v in range(g.n) if v not in tri]
        if contains_induced(g.induced(rest), c5) is not None:
            return False
    return True


def _three_triangles_exhaust(g: Graph) -> bool:
    tris = _triangles(g)
    if len(tris) < 3:
        return True
    if len(tris) > 3:
        return False
    used = set().union(*map(set, tris))
    return all(g.degree(v) == 0 for v in range(g.n) if v not in used)


def _two_triangles_bipartition(g: Graph) -> bool:
    tris = _triangles(g)
    if len(tris) != 2:
        return True
    used = sorted(set(tris[0]) | set(tris[1]))
    rest = [v for v in range(g.n) if v not in used]
    sub = g.induced(rest)
    if sub.edge_count() == 0:
        return True
    for z1 in tris[0]:
        for z2 in tris[1]:
            for x_bits in range(1 << len(rest)):
                x_side = [rest[i] for i in range(len(rest)) if x_bits >> i & 1]
                y_side = [v for v in rest if v not in x_side]
                if _independent(g, x_side + [z1, z2]) and _independent(
                    g, y_side + [z1, z2]
                ):
                    return True
    return False


def _independent(g: Graph, verts: list[int]) -> bool:
    return all(
        not g.has_edge(u, v) for u, v in itertools.combinations(verts, 2)
    )


def _has_triangle_no_k4(g: Graph) -> bool:
    w = clique_number(g)
    return w == 3


def _bip_s123() -> BipartiteGraph:
    return BipartiteGraph.from_edges(
        3, 4, [(0, 0), (0, 1), (0, 2), (1, 1), (2, 2), (2, 3)]
    )


REGISTRY: dict[str, Lemma] = {
    lem.lid: lem
    for lem in [
        Lemma(
            "lem_k4",
            "claw,co-claw-free with an independent set of size 4 is triangle-free",
            "predicate",
            ("claw", "co-claw"),
            8,
            hypothesis=lambda g: independence_number(g) >= 4,
            conclusion=lambda g: clique_number(g) <= 2,
        ),
        Lemma(
            "lem_finite",
            "claw,co-claw,K4,co-K4-free graphs stop at order 9",
            "finite",
            ("claw", "co-claw", "K4", "co-K4"),
            10,
            max_order=9,
        ),
        Lemma(
            "lem_k4_d",
            "diamond,co-diamond-free with an independent set of size 4 is bipartite",
            "predicate",
            ("diamond", "co-diamond"),
            8,
            hypothesis=lambda g: independence_number(g) >= 4,
            conclusion=lambda g: g.bipartition() is not None,
        ),
        Lemma(
            "lem_cd_bip",
            "co-diamond-free bipartite with an edge is a near-complete"
            " two-part graph or complete bipartite plus one isolated vertex",
            "predicate",
            ("co-diamond",),
            8,
            hypothesis=lambda g: g.edge_count() > 0,
            conclusion=lambda g: _is_simplex(g) or _is_complete_bip_plus_isolated(g),
            prune=lambda g: g.bipartition() is not None,
        ),
        Lemma(
            "lem_2k2_k3",
            "2K2,K3-free is bipartite or a C5 blowup plus isolated vertices",
            "predicate",
            ("2K2", "K3"),
            9,
            hypothesis=lambda g: True,
            conclusion=_extended_c5_or_bipartite,
        ),
        Lemma(
            "lem_split_2k2d",
            "2K2,diamond-free with a K4 splits into a clique and an"
            " independent set with at most one clique neighbor each",
            "predicate",
            ("2K2", "diamond"),
            9,
            hypothesis=lambda g: clique_number(g) >= 4,
            conclusion=_split_partition_sparse,
        ),
        Lemma(
            "claim_2k2d_1",
            "2K2,diamond-free with clique number 3: triangles are disjoint",
            "predicate",
            ("2K2", "diamond"),
            9,
            hypothesis=_has_triangle_no_k4,
            conclusion=_triangles_disjoint,
        ),
        Lemma(
            "claim_2k2d_2",
            "2K2,diamond-free with clique number 3: edge endpoints each see"
            " exactly one vertex of any disjoint triangle",
            "predicate",
            ("2K2", "diamond"),
            9,
            hypothesis=_has_triangle_no_k4,
            conclusion=_edge_one_neighbor_per_triangle,
        ),
        Lemma(
            "claim_2k2d_3",
            "2K2,diamond-free with clique number 3: no induced C5 avoids a triangle",
            "predicate",
            ("2K2", "diamond"),
            9,
            hypothesis=_has_triangle_no_k4,
            conclusion=_no_c5_avoiding_triangle,
        ),
        Lemma(
            "claim_2k2d_4",
            "2K2,diamond-free with clique number 3: three triangles exhaust"
            " the non-isolated vertices",
            "predicate",
            ("2K2", "diamond"),
            9,
            hypothesis=_has_triangle_no_k4,
            conclusion=_three_triangles_exhaust,
        ),
        Lemma(
            "claim_2k2d_5",
            "2K2,diamond-free with exactly two triangles and an outside edge:"
            " the outside extends to two independent sets through the triangles",
            "predicate",
            ("2K2", "diamond"),
            9,
            hypothesis=_has_triangle_no_k4,
            conclusion=_two_triangles_bipartition,
        ),
        Lemma(
            "lem_p4c4cc",
            "P4,C4,co-claw-free minus its dominating vertices is bipartite",
            "predicate",
            ("P4", "C4", "co-claw"),
            9,
            hypothesis=lambda g: True,
            conclusion=_minus_dominating_is_bipartite,
        ),
        Lemma(
            "lem_cdpc",
            "co-diamond,paw,claw-free: short path or cycle, near-complete,"
            " two cliques, clique plus vertex, or edgeless",
            "predicate",
            ("co-diamond", "paw", "claw"),
            9,
            hypothesis=lambda g: True,
            conclusion=_cdpc_conclusion,
        ),
        Lemma(
            "lem_finite_d",
            "diamond,co-diamond,K4,co-K4-free graphs stop at order 9",
            "finite",
            ("diamond", "co-diamond", "K4", "co-K4"),
            10,
            max_order=9,
        ),
        Lemma(
            "thm_acyclic",
            "two-part forests with forest complements embed into a path on 7"
            " vertices, a spider with legs 1,2,3, or a double star gadget",
            "acyclic",
            (),
            8,
        ),
    ]
}


def lemma_ids() -> list[str]:
    return sorted(REGISTRY)


def _run_predicate(lem: Lemma, cap: int) -> LemmaReport:
    spec = _spec(lem.forbidden)
    levels = enumerate_class(spec, cap, extra=lem.prune)
    checked = 0
    bad: list[str] = []
    details: list[tuple[str, int]] = []
    for n in sorted(levels):
        hits = 0
        for g in levels[n]:
            if not lem.hypothesis(g):
                continue
            hits += 1
            checked += 1
            if not lem.conclusion(g):
                bad.append(g.to_graph6())
        details.append((f"n={n}", hits))
    return LemmaReport(lem.lid, cap, checked, tuple(bad), tuple(details), not bad)


def _run_finite(lem: Lemma, cap: int) -> LemmaReport:
    spec = _spec(lem.forbidden)
    cap = max(cap, lem.max_order + 1)
    levels = enumerate_class(spec, cap)
    details = [(f"n={n}", len(levels[n])) for n in sorted(levels)]
    witnesses = len(levels.get(lem.max_order, []))
    bad = [g.to_graph6() for n in levels if n > lem.max_order for g in levels[n]]
    ok = witnesses >= 1 and not bad
    return LemmaReport(lem.lid, cap, sum(len(v) for v in levels.values()), tuple(bad), tuple(details), ok)


def _run_acyclic(lem: Lemma, cap: int) -> LemmaReport:
    hosts = [catalog.bip_path(7), _bip_s123(), double_star_gadget(cap, cap)]

    def both_forests(bg: BipartiteGraph) -> bool:
        return bg.underlying().is_forest() and bg.bipartite_complement().underlying().is_forest()

    grid = enumerate_bipartite_grid(
        ClassSpec.of([], name="all"),
        cap,
        cap,
        part_symmetric=True,
        feasible=both_forests,
    )
    checked = 0
    bad: list[str] = []
    details: list[tuple[str, int]] = []
    for (a, b) in sorted(grid):
        if a + b > cap:
            continue
        hits = 0
        for bg in grid[(a, b)]:
            hits += 1
            checked += 1
            if not any(
                bipartite_contains_part_fixed(host, bg, allow_swap=True) is not None
                for host in hosts
            ):
                bad.append(bg.to_line())
        details.append((f"parts=({a},{b})", hits))
    return LemmaReport(lem.lid, cap, checked, tuple(bad), tuple(details), not bad)


def verify_structure_lemma(lid: str, cap: int | None = None) -> LemmaReport:
    """Exhaustively check one registered fact up to the size cap."""
    if lid not in REGISTRY:
        raise LemmaError(f"unknown lemma id {lid!r} (known: {', '.join(lemma_ids())})")
    lem = REGISTRY[lid]
    used = lem.default_cap if cap is None else cap
    if used < 1:
        raise LemmaError("cap must be positive")
    if lem.kind == "predicate":
        return _run_predicate(lem, used)
    if lem.kind == "finite":
        return _run_finite(lem, used)
    return _run_acyclic(lem, used)

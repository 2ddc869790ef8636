"""Isomorph-free exhaustive generation for hereditary classes.

Graphs are grown one vertex at a time.  Because every class here is
hereditary, each member on n+1 vertices restricts to a member on n
vertices, so level-wise augmentation with canonical-form deduplication
visits every class member exactly once per isomorphism type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from collections.abc import Callable

from .canon import canonical_form, canonical_form_bipartite
from .graph import BipartiteGraph, Graph
from .invariants import _max_clique, find_balanced_biclique, find_balanced_cobiclique
from .subgraph import ClassSpec, in_class, in_class_anchored


def _clique_with_new_vertex(g: Graph, k: int) -> bool:
    """Does g have a clique of size k through its last-added vertex?"""
    if k <= 1:
        return g.n >= k
    v = g.n - 1
    size, _ = _max_clique(g.adj, g.adj[v], stop_at=k - 1)
    return size >= k - 1


def _independent_with_new_vertex(g: Graph, k: int) -> bool:
    return _clique_with_new_vertex(g.complement(), k)


def enumerate_class(
    spec: ClassSpec,
    max_n: int,
    max_omega: int | None = None,
    max_alpha: int | None = None,
    extra: Callable[[Graph], bool] | None = None,
) -> dict[int, list[Graph]]:
    """All class members per vertex count, one per isomorphism type.

    max_omega / max_alpha additionally reject graphs holding a clique or
    independent set of that size.  extra, if given, must be a hereditary
    predicate; it prunes the search the same way the class check does.
    """
    levels: dict[int, list[Graph]] = {}
    one = Graph.empty(1)
    current: dict[str, Graph] = {}
    ok = (
        in_class(one, spec)
        and not (max_omega is not None and max_omega <= 1)
        and not (max_alpha is not None and max_alpha <= 1)
        and (extra is None or extra(one))
    )
    if ok:
        current[canonical_form(one)] = one
    levels[1] = [current[k] for k in sorted(current)]
    for n in range(2, max_n + 1):
        nxt: dict[str, Graph] = {}
        for parent in levels[n - 1]:
            for mask in range(1 << parent.n):
                child = parent.add_vertex(mask)
                if max_omega is not None and _clique_with_new_vertex(child, max_omega):
                    continue
                if max_alpha is not None and _independent_with_new_vertex(child, max_alpha):
                    continue
                if not in_class_anchored(child, spec, child.n - 1):
                    continue
                if extra is not None and not extra(child):
                    continue
                key = canonical_form(child)
                if key not in nxt:
                    nxt[key] = child
        levels[n] = [nxt[k] for k in sorted(nxt)]
        if not levels[n]:
            for m in range(n + 1, max_n + 1):
                levels[m] = []
            break
    return levels


@dataclass(frozen=True)
class RamseyResult:
    """Outcome of an exhaustive Ramsey computation.

    value is the least n at which no feasible graph exists, when the
    search determined it; otherwise None.  lower_bound is always valid:
    feasible graphs exist on lower_bound - 1 vertices.
    """

    p: int
    q: int
    cap: int
    value: int | None
    lower_bound: int
    counts: dict[int, int]
    witnesses: tuple[Graph, ...] = field(repr=False, default=())

    @property
    def determined(self) -> bool:
        return self.value is not None


def ramsey_exact(spec: ClassSpec, p: int, q: int, cap: int) -> RamseyResult:
    """R(p, q) restricted to the class, by exhaustive search up to cap.

    Feasible graphs are class members with no clique of size p and no
    independent set of size q.  The least vertex count admitting none is
    the Ramsey value; by heredity the feasible counts are monotone.
    """
    if p < 1 or q < 1:
        raise ValueError("need p, q >= 1")
    levels = enumerate_class(spec, cap, max_omega=p, max_alpha=q)
    counts: dict[int, int] = {}
    value = None
    witnesses: tuple[Graph, ...] = ()
    top_nonempty = 0
    for n in range(1, cap + 1):
        lvl = levels.get(n, [])
        counts[n] = len(lvl)
        if lvl:
            top_nonempty = n
            witnesses = tuple(lvl)
        elif value is None:
            value = n
            break
    if value is not None:
        # Trim counts beyond the first empty level.
        counts = {n: c for n, c in counts.items() if n <= value}
    return RamseyResult(
        p=p,
        q=q,
        cap=cap,
        value=value,
        lower_bound=top_nonempty + 1,
        counts=counts,
        witnesses=witnesses,
    )


def _feasible_bip(bg: BipartiteGraph, p: int | None, q: int | None) -> bool:
    if p is not None and find_balanced_biclique(bg, p) is not None:
        return False
    if q is not None and find_balanced_cobiclique(bg, q) is not None:
        return False
    return True


def _bip_key(bg: BipartiteGraph) -> str:
    return canonical_form_bipartite(bg.nA, bg.nB, bg.underlying())


def enumerate_bipartite_square(
    spec: ClassSpec,
    max_m: int,
    p: int | None = None,
    q: int | None = None,
) -> dict[int, list[BipartiteGraph]]:
    """Class members with equal parts (m, m), one per part-fixed type.

    p / q reject graphs containing a balanced biclique of order p or a
    balanced co-biclique of order q.  Both constraints and the class are
    preserved under one-vertex-per-part deletion, which makes the
    add-one-to-each-part augmentation exhaustive.
    """
    levels: dict[int, list[BipartiteGraph]] = {}
    zero = BipartiteGraph(0, 0, ())
    current = {_bip_key(zero): zero}
    levels[0] = list(current.values())
    for m in range(1, max_m + 1):
        half: dict[str, BipartiteGraph] = {}
        for parent in levels[m - 1]:
            for mask in range(1 << parent.nB):
                child = parent.add_a(mask)
                if not _feasible_bip(child, p, q):
                    continue
                if not in_class_anchored(
                    child.underlying(), spec, parent.nA
                ):
                    continue
                key = _bip_key(child)
                if key not in half:
                    half[key] = child
        nxt: dict[str, BipartiteGraph] = {}
        for parent in half.values():
            for mask in range(1 << parent.nA):
                child = parent.add_b(mask)
                if not _feasible_bip(child, p, q):
                    continue
                if not in_class_anchored(
                    child.underlying(), spec, child.nA + child.nB - 1
                ):
                    continue
                key = _bip_key(child)
                if key not in nxt:
                    nxt[key] = child
        levels[m] = [nxt[k] for k in sorted(nxt)]
        if not levels[m]:
            for j in range(m + 1, max_m + 1):
                levels[j] = []
            break
    return levels


def bipartite_ramsey_exact(spec: ClassSpec, p: int, q: int, cap: int) -> RamseyResult:
    """Part-balanced Ramsey value over the class, by exhaustive search.

    Feasible graphs have parts (m, m), no part-respecting K_{p,p}, and no
    part-respecting empty q-by-q pair.
    """
    if p < 1 or q < 1:
        raise ValueError("need p, q >= 1")
    levels = enumerate_bipartite_square(spec, cap, p=p, q=q)
    counts: dict[int, int] = {}
    value = None
    top_nonempty = 0
    witnesses: tuple[BipartiteGraph, ...] = ()
    for m in range(1, cap + 1):
        lvl = levels.get(m, [])
        counts[m] = len(lvl)
        if lvl:
            top_nonempty = m
            witnesses = tuple(lvl)
        elif value is None:
            value = m
            break
    if value is not None:
        counts = {m: c for m, c in counts.items() if m <= value}
    return RamseyResult(
        p=p,
        q=q,
        cap=cap,
        value=value,
        lower_bound=top_nonempty + 1,
        counts=counts,
        witnesses=witnesses,  # type: ignore[arg-type]
    )


def enumerate_bipartite_grid(
    spec: ClassSpec,
    max_a: int,
    max_b: int,
    part_symmetric: bool = False,
    feasible: Callable[[BipartiteGraph], bool] | None = None,
) -> dict[tuple[int, int], list[BipartiteGraph]]:
    """Class members for every part-size pair (i, j) within the bounds.

    With part_symmetric=True only cells with i <= j are produced (callers
    use this when their property is invariant under part exchange).
    feasible, if given, must be preserved by vertex deletion.
    """
    grid: dict[tuple[int, int], list[BipartiteGraph]] = {}
    zero = BipartiteGraph(0, 0, ())
    grid[(0, 0)] = [zero] if (feasible is None or feasible(zero)) else []
    for j in range(1, max_b + 1):
        cell: dict[str, BipartiteGraph] = {}
        for parent in grid[(0, j - 1)]:
            child = parent.add_b(0)
            if feasible is None or feasible(child):
                cell[_bip_key(child)] = child
        grid[(0, j)] = [cell[k] for k in sorted(cell)]
    for i in range(1, max_a + 1):
        for j in range(max_b + 1):
            if part_symmetric and j < i:
                continue
            cell = {}
            for parent in grid.get((i - 1, j), []):
                for mask in range(1 << parent.nB):
                    child = parent.add_a(mask)
                    if not in_class_anchored(child.underlying(), spec, i - 1):
                        continue
                    if feasible is not None and not feasible(child):
                        continue
                    key = _bip_key(child)
                    if key not in cell:
                        cell[key] = child
            grid[(i, j)] = [cell[k] for k in sorted(cell)]
    return grid

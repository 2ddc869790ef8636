"""Canonical labeling for small graphs.

The labeling uses iterative colour refinement plus backtracking
individualization with automorphism pruning.  It is exact (two graphs get
the same canonical form iff they are isomorphic) and fast enough for the
vertex counts this project works at (enumeration never exceeds a few dozen
vertices).
"""

from __future__ import annotations

from collections.abc import Sequence

from .graph import Graph, bits, popcount, to_graph6


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts against every cell until stable."""
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple(popcount(adj[v] & m) for m in masks)
                sig.setdefault(key, []).append(v)
            if len(sig) == 1:
                out.append(cell)
            else:
                changed = True
                for key in sorted(sig):
                    out.append(sig[key])
        cells = out
        if not changed:
            return cells


def _encode(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(adj)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        for u in bits(adj[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


def _close_orbit(seed: set[int], gens: list[list[int]]) -> set[int]:
    orbit = set(seed)
    frontier = list(seed)
    while frontier:
        v = frontier.pop()
        for g in gens:
            w = g[v]
            if w not in orbit:
                orbit.add(w)
                frontier.append(w)
    return orbit


def _canonical_order(adj: tuple[int, ...], cells: list[list[int]]) -> list[int]:
    n = len(adj)
    best_enc: tuple[int, ...] | None = None
    best_order: list[int] | None = None
    autos: list[list[int]] = []

    def search(cells: list[list[int]], base: list[int]) -> None:
        nonlocal best_enc, best_order
        cells = _refine(adj, cells)
        target = -1
        for idx, cell in enumerate(cells):
            if len(cell) > 1 and (target < 0 or len(cell) < len(cells[target])):
                target = idx
        if target < 0:
            order = [c[0] for c in cells]
            enc = _encode(adj, order)
            if best_enc is None or enc < best_enc:
                best_enc, best_order = enc, order
            elif enc == best_enc:
                # Equal encodings at two leaves give an automorphism.
                perm = [0] * n
                assert best_order is not None
                for i in range(n):
                    perm[best_order[i]] = order[i]
                autos.append(perm)
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if tried:
                gens = [g for g in autos if all(g[b] == b for b in base)]
                if v in _close_orbit(set(tried), gens):
                    continue
            child = (
                cells[:target]
                + [[v], [u for u in cell if u != v]]
                + cells[target + 1 :]
            )
            search(child, base + [v])
            tried.append(v)

    search(cells, [])
    assert best_order is not None
    return best_order


def _initial_cells(n: int, colors: Sequence[int] | None) -> list[list[int]]:
    if colors is None:
        return [list(range(n))] if n else []
    if len(colors) != n:
        raise ValueError("colors length must match vertex count")
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        groups.setdefault(c, []).append(v)
    return [groups[c] for c in sorted(groups)]


def canonical_perm(g: Graph, colors: Sequence[int] | None = None) -> list[int]:
    """Relabeling that sends g to its canonical representative.

    The result maps old vertex -> new vertex.  With colors given, vertices
    of distinct colors are never exchanged and colour groups end up as
    consecutive index ranges in ascending colour order.
    """
    if g.n == 0:
        return []
    order = _canonical_order(g.adj, _initial_cells(g.n, colors))
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return perm


def canonical_form(g: Graph) -> str:
    """Isomorphism-invariant string key for g."""
    return to_graph6(g.relabel(canonical_perm(g)))


def canonical_form_colored(g: Graph, colors: Sequence[int]) -> str:
    """Canonical key treating vertices of distinct colors as distinct."""
    counts: dict[int, int] = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    prefix = ",".join(f"{c}:{counts[c]}" for c in sorted(counts))
    relabeled = g.relabel(canonical_perm(g, colors))
    return f"{prefix}|{to_graph6(relabeled)}"


def canonical_form_bipartite(nA: int, nB: int, underlying: Graph) -> str:
    """Canonical key for a two-part graph with the parts held fixed.

    ``underlying`` must carry the first part on vertices 0..nA-1 and the
    second part on nA..nA+nB-1.  Parts are never swapped, so a graph and
    its part-swapped twin get different keys whenever the sides differ.
    """
    colors = [0] * nA + [1] * nB
    relabeled = underlying.relabel(canonical_perm(underlying, colors))
    return f"B{nA},{nB}|{to_graph6(relabeled)}"

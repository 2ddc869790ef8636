"""Exact clique, coloring, and biclique solvers on bitmask graphs.

All solvers are branch-and-bound searches meant for desk-scale inputs.
Each one enforces a hard size cap and raises SizeLimitError beyond it
rather than silently taking forever.
"""

from __future__ import annotations

from fractions import Fraction

from .graph import BipartiteGraph, Graph, GraphError, bits, popcount

CHROMATIC_CAP = 20
COCHROMATIC_CAP = 16
BICLIQUE_CAP = 32


class SizeLimitError(ValueError):
    """An exact solver was asked to exceed its size cap."""


class _Stop(Exception):
    pass


def _greedy_color_order(
    adj: tuple[int, ...], cand: int
) -> tuple[list[int], list[int]]:
    """Greedy coloring of the vertices in cand.

    Returns vertices grouped class by class together with, per position,
    the number of classes used so far; the latter bounds the clique size
    reachable from that suffix.
    """
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            bit = 1 << v
            rest ^= bit
            avail &= ~adj[v]
            avail ^= bit
            order.append(v)
            bounds.append(color)
    return order, bounds


def _max_clique(
    adj: tuple[int, ...], cand: int, stop_at: int | None = None
) -> tuple[int, int]:
    """Largest clique within the vertex set cand: (size, vertex mask)."""
    best_size = 0
    best_mask = 0

    def expand(r_mask: int, r_size: int, cand: int) -> None:
        nonlocal best_size, best_mask
        order, bounds = _greedy_color_order(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if r_size + bounds[i] <= best_size:
                return
            v = order[i]
            bit = 1 << v
            if r_size + 1 > best_size:
                best_size = r_size + 1
                best_mask = r_mask | bit
                if stop_at is not None and best_size >= stop_at:
                    raise _Stop
            nxt = cand & adj[v]
            if nxt:
                expand(r_mask | bit, r_size + 1, nxt)
            cand ^= bit

    if cand:
        try:
            expand(0, 0, cand)
        except _Stop:
            pass
    return best_size, best_mask


def clique_number(g: Graph) -> int:
    return _max_clique(g.adj, (1 << g.n) - 1)[0]


def max_clique(g: Graph) -> set[int]:
    return set(bits(_max_clique(g.adj, (1 << g.n) - 1)[1]))


def independence_number(g: Graph) -> int:
    return clique_number(g.complement())


def max_independent_set(g: Graph) -> set[int]:
    return max_clique(g.complement())


def has_clique(g: Graph, k: int, within: int | None = None) -> bool:
    """Does g have a clique of size k inside the vertex mask within?"""
    if k <= 0:
        return True
    cand = (1 << g.n) - 1 if within is None else within
    size, _ = _max_clique(g.adj, cand, stop_at=k)
    return size >= k


def has_independent_set(g: Graph, k: int, within: int | None = None) -> bool:
    return has_clique(g.complement(), k, within)


def _k_colorable(adj: tuple[int, ...], n: int, k: int, clique_mask: int) -> bool:
    colors = [-1] * n
    pre = list(bits(clique_mask))
    if len(pre) > k:
        return False
    for i, v in enumerate(pre):
        colors[v] = i

    def rec(done: int, max_used: int) -> bool:
        if done == n:
            return True
        # Most saturated uncolored vertex first, ties by degree.
        pick = -1
        pick_key = (-1, -1)
        for v in range(n):
            if colors[v] >= 0:
                continue
            seen = {colors[u] for u in bits(adj[v]) if colors[u] >= 0}
            key = (len(seen), popcount(adj[v]))
            if key > pick_key:
                pick_key = key
                pick = v
        v = pick
        forbidden = {colors[u] for u in bits(adj[v]) if colors[u] >= 0}
        limit = min(k - 1, max_used + 1)
        for c in range(limit + 1):
            if c in forbidden:
                continue
            colors[v] = c
            if rec(done + 1, max(max_used, c)):
                return True
            colors[v] = -1
        return False

    return rec(len(pre), len(pre) - 1)


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    if g.n > CHROMATIC_CAP:
        raise SizeLimitError(f"chromatic solver capped at {CHROMATIC_CAP} vertices")
    if g.edge_count() == 0:
        return 1
    lo, clique_mask = _max_clique(g.adj, (1 << g.n) - 1)
    _, greedy_bounds = _greedy_color_order(g.adj, (1 << g.n) - 1)
    hi = greedy_bounds[-1]
    k = lo
    while k < hi and not _k_colorable(g.adj, g.n, k, clique_mask):
        k += 1
    return k


def cochromatic_number(g: Graph) -> int:
    """Fewest parts in a partition of V(g) into cliques and independent sets."""
    n = g.n
    if n == 0:
        return 0
    if n > COCHROMATIC_CAP:
        raise SizeLimitError(f"cochromatic solver capped at {COCHROMATIC_CAP} vertices")
    adj = g.adj
    co = g.complement().adj
    full = (1 << n) - 1
    _, b1 = _greedy_color_order(adj, full)
    _, b2 = _greedy_color_order(co, full)
    best = min(b1[-1], b2[-1])

    # parts: [mask, may still be a clique, may still be independent]
    parts: list[list[int]] = []

    def rec(v: int) -> None:
        nonlocal best
        if len(parts) >= best:
            return
        if v == n:
            best = len(parts)
            return
        bit = 1 << v
        for part in parts:
            mask, cl_ok, in_ok = part
            new_cl = cl_ok and (mask & ~adj[v]) == 0
            new_in = in_ok and (mask & adj[v]) == 0
            if not (new_cl or new_in):
                continue
            part[0] = mask | bit
            part[1] = new_cl
            part[2] = new_in
            rec(v + 1)
            part[0] = mask
            part[1] = cl_ok
            part[2] = in_ok
        if len(parts) + 1 < best:
            parts.append([bit, 1, 1])
            rec(v + 1)
            parts.pop()

    rec(0)
    return best


def _balanced_biclique(
    cross: tuple[int, ...], nA: int, nB: int, stop_at: int | None = None
) -> tuple[int, int, int]:
    """Largest balanced biclique: (size, A-mask, B-mask of a witness)."""
    best_size = 0
    best = (0, 0)

    def rec(i: int, a_mask: int, a_count: int, t_mask: int) -> None:
        nonlocal best_size, best
        val = min(a_count, popcount(t_mask))
        if val > best_size:
            best_size = val
            best = (a_mask, t_mask)
            if stop_at is not None and val >= stop_at:
                raise _Stop
        if i == nA:
            return
        if min(a_count + (nA - i), popcount(t_mask)) <= best_size:
            return
        nxt = t_mask & cross[i]
        if nxt:
            rec(i + 1, a_mask | (1 << i), a_count + 1, nxt)
        rec(i + 1, a_mask, a_count, t_mask)

    try:
        rec(0, 0, 0, (1 << nB) - 1)
    except _Stop:
        pass
    return best_size, best[0], best[1]


def _check_biclique_cap(bg: BipartiteGraph) -> None:
    if max(bg.nA, bg.nB) > BICLIQUE_CAP:
        raise SizeLimitError(
            f"exact biclique solver capped at parts of {BICLIQUE_CAP}"
        )


def biclique_number(bg: BipartiteGraph) -> int:
    """b(G): the largest s with a complete K_{s,s} across the parts."""
    _check_biclique_cap(bg)
    if bg.nA == 0 or bg.nB == 0:
        return 0
    if bg.nA <= bg.nB:
        return _balanced_biclique(bg.cross, bg.nA, bg.nB)[0]
    sw = bg.swap_parts()
    return _balanced_biclique(sw.cross, sw.nA, sw.nB)[0]


def cobiclique_number(bg: BipartiteGraph) -> int:
    """a(G): the largest s with an empty s-by-s pair across the parts."""
    return biclique_number(bg.bipartite_complement())


def find_balanced_biclique(
    bg: BipartiteGraph, s: int
) -> tuple[list[int], list[int]] | None:
    """Vertex sets of a K_{s,s} in bg, or None.  Exact."""
    if s <= 0:
        return [], []
    _check_biclique_cap(bg)
    if bg.nA < s or bg.nB < s:
        return None
    swapped = bg.nA > bg.nB
    work = bg.swap_parts() if swapped else bg
    size, a_mask, b_mask = _balanced_biclique(work.cross, work.nA, work.nB, stop_at=s)
    if size < s:
        return None
    a_side = list(bits(a_mask))[:s]
    b_side = list(bits(b_mask))[:s]
    if swapped:
        a_side, b_side = b_side, a_side
    return a_side, b_side


def find_balanced_cobiclique(
    bg: BipartiteGraph, s: int
) -> tuple[list[int], list[int]] | None:
    return find_balanced_biclique(bg.bipartite_complement(), s)


def greedy_biclique_lower(bg: BipartiteGraph) -> int:
    """Greedy lower bound on b(G) for graphs too big for the exact solver."""
    if bg.nA == 0 or bg.nB == 0:
        return 0
    work = bg if bg.nA <= bg.nB else bg.swap_parts()
    best = 0
    for start in range(work.nA):
        chosen = [start]
        t_mask = work.cross[start]
        best = max(best, min(1, popcount(t_mask)))
        remaining = [a for a in range(work.nA) if a != start]
        while remaining and t_mask:
            nxt = max(remaining, key=lambda a: (popcount(t_mask & work.cross[a]), -a))
            new_t = t_mask & work.cross[nxt]
            if min(len(chosen) + 1, popcount(new_t)) < min(len(chosen), popcount(t_mask)):
                break
            chosen.append(nxt)
            t_mask = new_t
            remaining.remove(nxt)
            best = max(best, min(len(chosen), popcount(t_mask)))
    return best


def greedy_cobiclique_lower(bg: BipartiteGraph) -> int:
    return greedy_biclique_lower(bg.bipartite_complement())


def homogeneous_ratio(g: Graph) -> Fraction:
    """max(independent set, clique) over vertex count."""
    if g.n == 0:
        raise GraphError("homogeneous ratio of the empty graph is undefined")
    return Fraction(max(clique_number(g), independence_number(g)), g.n)

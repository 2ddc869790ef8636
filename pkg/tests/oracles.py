"""Brute-force reference implementations used to check the fast code.

Everything here trades speed for obviousness: subset scans, permutation
scans, and recursive assignments with no clever pruning.  Sizes are kept
small by the tests that import these.
"""

from __future__ import annotations

import itertools

from hramsey.graph import BipartiteGraph, Graph


def subsets(n: int):
    for mask in range(1 << n):
        yield [v for v in range(n) if mask >> v & 1]


def is_clique(g: Graph, vs: list[int]) -> bool:
    return all(g.adj[u] >> v & 1 for u, v in itertools.combinations(vs, 2))


def is_independent(g: Graph, vs: list[int]) -> bool:
    return all(not g.adj[u] >> v & 1 for u, v in itertools.combinations(vs, 2))


def brute_omega(g: Graph) -> int:
    return max(len(vs) for vs in subsets(g.n) if is_clique(g, vs))


def brute_alpha(g: Graph) -> int:
    return max(len(vs) for vs in subsets(g.n) if is_independent(g, vs))


def brute_chromatic(g: Graph) -> int:
    if g.n == 0:
        return 0

    def colorable(k: int) -> bool:
        colors = [0] * g.n

        def place(v: int, used: int) -> bool:
            if v == g.n:
                return True
            for c in range(min(used + 1, k)):
                if all(colors[u] != c for u in range(v) if g.adj[v] >> u & 1):
                    colors[v] = c
                    if place(v + 1, max(used, c + 1)):
                        return True
            return False

        return place(0, 0)

    k = 1
    while not colorable(k):
        k += 1
    return k


def brute_cochromatic(g: Graph) -> int:
    """Fewest parts in a partition where every part is a clique or independent."""
    if g.n == 0:
        return 0
    parts: list[list[int]] = []
    best = g.n

    def rec(v: int) -> None:
        nonlocal best
        if len(parts) >= best:
            return
        if v == g.n:
            best = len(parts)
            return
        for part in parts:
            part.append(v)
            if is_clique(g, part) or is_independent(g, part):
                rec(v + 1)
            part.pop()
        parts.append([v])
        rec(v + 1)
        parts.pop()

    rec(0)
    return best


def brute_contains_induced(host: Graph, pattern: Graph) -> bool:
    if pattern.n > host.n:
        return False
    for combo in itertools.combinations(range(host.n), pattern.n):
        for perm in itertools.permutations(combo):
            ok = True
            for i, j in itertools.combinations(range(pattern.n), 2):
                want = pattern.adj[i] >> j & 1
                got = host.adj[perm[i]] >> perm[j] & 1
                if want != got:
                    ok = False
                    break
            if ok:
                return True
    return False


def brute_canonical(g: Graph) -> tuple:
    """Lexicographically least adjacency encoding over all relabelings."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        bits = tuple(
            g.adj[perm[i]] >> perm[j] & 1
            for i in range(g.n)
            for j in range(i + 1, g.n)
        )
        if best is None or bits < best:
            best = bits
    return (g.n, best)


def brute_iso_count(graphs) -> int:
    return len({brute_canonical(g) for g in graphs})


def brute_biclique(bg: BipartiteGraph, s: int):
    """Some complete s-by-s cross pair, or None."""
    for a_set in itertools.combinations(range(bg.nA), s):
        for b_set in itertools.combinations(range(bg.nB), s):
            if all(bg.cross[a] >> b & 1 for a in a_set for b in b_set):
                return list(a_set), list(b_set)
    return None


def brute_cobiclique(bg: BipartiteGraph, s: int):
    for a_set in itertools.combinations(range(bg.nA), s):
        for b_set in itertools.combinations(range(bg.nB), s):
            if all(not bg.cross[a] >> b & 1 for a in a_set for b in b_set):
                return list(a_set), list(b_set)
    return None


def brute_cycle_count(g: Graph, max_len: int) -> int:
    """Simple cycles of length 3..max_len, each counted once."""
    total = 0
    for length in range(3, max_len + 1):
        for combo in itertools.combinations(range(g.n), length):
            v0 = combo[0]
            rest = combo[1:]
            for perm in itertools.permutations(rest):
                if perm[0] > perm[-1]:
                    continue
                walk = (v0, *perm)
                if all(
                    g.adj[walk[i]] >> walk[i + 1] & 1 for i in range(length - 1)
                ) and g.adj[walk[-1]] >> v0 & 1:
                    total += 1
    return total


def graph_from_bits(n: int, bits: int) -> Graph:
    rows = [0] * n
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            if bits >> idx & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))


def bip_from_bits(nA: int, nB: int, bits: int) -> BipartiteGraph:
    full = (1 << nB) - 1
    return BipartiteGraph(nA, nB, tuple(bits >> (a * nB) & full for a in range(nA)))

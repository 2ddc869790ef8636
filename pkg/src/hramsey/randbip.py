"""Randomized construction of sparse two-part graphs with no short cycles.

Sampling uses edge probability p = (4n)^(1/(2k) - 1) on parts of size 2n,
chosen so that cycles of length at most k are rare while the co-biclique
number stays small. Every sampled short cycle is then destroyed by vertex
deletion, greedily removing the vertex that kills the most surviving
cycles and alternating parts so deletions split as evenly as possible.
Parts are truncated to exactly n vertices; a degenerate sample (a part
exhausted below n) triggers a deterministic resample from a derived seed.

The girth certificate is re-checked on the final graph: a successful
return always has zero cycles of length at most k.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from .graph import BipartiteGraph, bits
from .invariants import BICLIQUE_CAP, cobiclique_number, greedy_cobiclique_lower


class RandomBipError(ValueError):
    pass


@dataclass(frozen=True)
class RandomParams:
    n: int
    k: int
    seed: int

    def __post_init__(self) -> None:
        if self.k < 4:
            raise RandomBipError("k must be at least 4")
        if self.n < 1:
            raise RandomBipError("n must be positive")
        if not 0 < self.edge_probability < 1:
            raise RandomBipError("edge probability out of range")

    @property
    def part_size(self) -> int:
        """Size of each part before deletion, twice the target size."""
        return 2 * self.n

    @property
    def delta(self) -> float:
        return 1 / (2 * self.k)

    @property
    def edge_probability(self) -> float:
        return (2 * self.part_size) ** (self.delta - 1)


@dataclass(frozen=True)
class GirthReport:
    n: int
    k: int
    seed: int
    attempts: int
    cycles_found: int
    deletions_a: int
    deletions_b: int
    final_a: int
    final_b: int
    cobiclique: int
    cobiclique_exact: bool
    girth_certified: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "seed": self.seed,
            "attempts": self.attempts,
            "cycles_found": self.cycles_found,
            "deletions": {"a": self.deletions_a, "b": self.deletions_b},
            "final_parts": [self.final_a, self.final_b],
            "cobiclique": self.cobiclique,
            "cobiclique_exact": self.cobiclique_exact,
            "girth_certified": self.girth_certified,
        }


def short_cycles(bg: BipartiteGraph, k: int) -> list[tuple[int, ...]]:
    """All cycles with at most k vertices, once each, as underlying-id tuples.

    Cycles are rooted at their minimum vertex and oriented toward the
    smaller second vertex, so each one appears exactly once. Cycles need
    not be induced.
    """
    if k < 4:
        raise RandomBipError("k must be at least 4")
    g = bg.underlying()
    adj = g.adj
    found: list[tuple[int, ...]] = []
    for root in range(g.n):
        above = ~((2 << root) - 1)
        stack: list[tuple[int, int, tuple[int, ...]]] = [(root, 1 << root, (root,))]
        while stack:
            v, seen, path = stack.pop()
            for u in bits(adj[v] & above & ~seen):
                if len(path) >= 2 and adj[u] >> root & 1 and path[1] < u:
                    found.append(path + (u,))
                if len(path) + 1 < k:
                    stack.append((u, seen | 1 << u, path + (u,)))
    return found


def count_short_cycles(bg: BipartiteGraph, k: int) -> int:
    """Exact number of (not necessarily induced) cycles of length <= k."""
    return len(short_cycles(bg, k))


def sample_girth_construction(
    params: RandomParams, retry_cap: int = 20
) -> tuple[BipartiteGraph, GirthReport]:
    """A two-part graph with n vertices per part and no cycle of length <= k.

    Deterministic for fixed params: the sample, the greedy destruction, and
    any resamples all derive from params.seed.
    """
    if params.n < 4:
        raise RandomBipError("sampling needs n >= 4")
    big = params.part_size
    p = params.edge_probability
    for attempt in range(retry_cap):
        rng = random.Random(f"{params.seed}:{attempt}")
        edges = [
            (a, b) for a in range(big) for b in range(big) if rng.random() < p
        ]
        bg = BipartiteGraph.from_edges(big, big, edges)
        cycles = short_cycles(bg, params.k)
        surviving = [frozenset(c) for c in cycles]
        deleted_a: set[int] = set()
        deleted_b: set[int] = set()
        while surviving:
            use_a = len(deleted_a) <= len(deleted_b)
            lo, hi = (0, big) if use_a else (big, 2 * big)
            cover: Counter[int] = Counter()
            for cyc in surviving:
                for v in cyc:
                    if lo <= v < hi:
                        cover[v] += 1
            victim = max(sorted(cover), key=lambda v: cover[v])
            (deleted_a if use_a else deleted_b).add(victim)
            surviving = [c for c in surviving if victim not in c]
        keep_a = [a for a in range(big) if a not in deleted_a]
        keep_b = [b for b in range(big) if big + b not in deleted_b]
        if len(keep_a) < params.n or len(keep_b) < params.n:
            continue
        final = bg.induced(keep_a[: params.n], keep_b[: params.n])
        if count_short_cycles(final, params.k) != 0:
            raise RandomBipError("cycle destruction left a short cycle")
        if final.nA <= BICLIQUE_CAP and final.nB <= BICLIQUE_CAP:
            a_value, exact = cobiclique_number(final), True
        else:
            a_value, exact = greedy_cobiclique_lower(final), False
        report = GirthReport(
            n=params.n,
            k=params.k,
            seed=params.seed,
            attempts=attempt + 1,
            cycles_found=len(cycles),
            deletions_a=len(deleted_a),
            deletions_b=len(deleted_b),
            final_a=final.nA,
            final_b=final.nB,
            cobiclique=a_value,
            cobiclique_exact=exact,
            girth_certified=True,
        )
        return final, report
    raise RandomBipError(f"no viable sample in {retry_cap} attempts")

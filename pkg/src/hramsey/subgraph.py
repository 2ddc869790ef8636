"""Induced-subgraph embedding search and hereditary class membership."""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable, Sequence

from .canon import canonical_form
from .graph import BipartiteGraph, Graph, bits, popcount

FORBIDDEN_MAX_VERTICES = 10


class ClassSpecError(ValueError):
    pass


@dataclass(frozen=True)
class Embedding:
    """An induced embedding of a pattern H into a host G.

    mapping[h] is the host vertex that pattern vertex h lands on.
    """

    mapping: tuple[int, ...]

    def verify(self, pattern: Graph, host: Graph) -> bool:
        m = self.mapping
        if len(m) != pattern.n or len(set(m)) != len(m):
            return False
        if any(not (0 <= v < host.n) for v in m):
            return False
        for u in range(pattern.n):
            for v in range(u + 1, pattern.n):
                if pattern.has_edge(u, v) != host.has_edge(m[u], m[v]):
                    return False
        return True


@dataclass(frozen=True)
class ClassSpec:
    """A hereditary class given by its finite set of forbidden patterns."""

    forbidden: tuple[Graph, ...]
    name: str | None = None

    @staticmethod
    def of(graphs: Iterable[Graph], name: str | None = None) -> ClassSpec:
        seen: dict[str, Graph] = {}
        for g in graphs:
            if g.n == 0:
                raise ClassSpecError("forbidden pattern must have vertices")
            if g.n > FORBIDDEN_MAX_VERTICES:
                raise ClassSpecError(
                    f"forbidden pattern too large ({g.n} > {FORBIDDEN_MAX_VERTICES})"
                )
            seen.setdefault(canonical_form(g), g)
        ordered = sorted(seen.items(), key=lambda kv: (kv[1].n, kv[0]))
        return ClassSpec(tuple(g for _, g in ordered), name)

    def key(self) -> tuple[str, ...]:
        """Deterministic identity of the class, independent of input labels."""
        return tuple(canonical_form(g) for g in self.forbidden)


def _pattern_order(h: Graph, first: int | None = None) -> list[int]:
    """Connected-first search order over the pattern's vertices."""
    n = h.n
    if first is None:
        first = max(range(n), key=lambda v: (h.degree(v), -v))
    order = [first]
    placed = {first}
    while len(order) < n:
        nxt = max(
            (v for v in range(n) if v not in placed),
            key=lambda v: (
                sum(1 for u in order if h.has_edge(u, v)),
                h.degree(v),
                -v,
            ),
        )
        order.append(nxt)
        placed.add(nxt)
    return order


def _embed(
    g: Graph,
    h: Graph,
    order: list[int],
    forced: dict[int, int],
    g_colors: Sequence[int] | None = None,
    h_colors: Sequence[int] | None = None,
) -> tuple[int, ...] | None:
    gn = g.n
    full = (1 << gn) - 1
    color_masks: dict[int, int] | None = None
    if g_colors is not None and h_colors is not None:
        color_masks = {}
        for v, c in enumerate(g_colors):
            color_masks[c] = color_masks.get(c, 0) | (1 << v)
    mapping = [-1] * h.n
    used = 0

    degs_g = [popcount(g.adj[v]) for v in range(gn)]
    degs_h = [popcount(h.adj[v]) for v in range(h.n)]

    def rec(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        hv = order[i]
        if hv in forced:
            v = forced[hv]
            if used & (1 << v):
                return False
            for j in range(i):
                hu = order[j]
                if h.has_edge(hu, hv) != g.has_edge(mapping[hu], v):
                    return False
            if color_masks is not None and not (color_masks.get(h_colors[hv], 0) >> v) & 1:
                return False
            if degs_g[v] < degs_h[hv]:
                return False
            mapping[hv] = v
            used |= 1 << v
            if rec(i + 1):
                return True
            used &= ~(1 << v)
            mapping[hv] = -1
            return False
        cand = full & ~used
        if color_masks is not None:
            cand &= color_masks.get(h_colors[hv], 0)
        for j in range(i):
            hu = order[j]
            gu = mapping[hu]
            if h.has_edge(hu, hv):
                cand &= g.adj[gu]
            else:
                cand &= ~g.adj[gu]
            if not cand:
                return False
        for v in bits(cand):
            if degs_g[v] < degs_h[hv]:
                continue
            mapping[hv] = v
            used |= 1 << v
            if rec(i + 1):
                return True
            used &= ~(1 << v)
            mapping[hv] = -1
        return False

    if rec(0):
        return tuple(mapping)
    return None


def contains_induced(g: Graph, h: Graph) -> Embedding | None:
    """An induced copy of h in g, or None."""
    if h.n > g.n:
        return None
    if h.n == 0:
        return Embedding(())
    found = _embed(g, h, _pattern_order(h), {})
    return Embedding(found) if found is not None else None


def contains_induced_anchored(g: Graph, h: Graph, anchor: int) -> Embedding | None:
    """An induced copy of h in g that uses the host vertex anchor."""
    if h.n > g.n or h.n == 0:
        return None
    for hv in range(h.n):
        if popcount(g.adj[anchor]) < h.degree(hv):
            continue
        found = _embed(g, h, _pattern_order(h, first=hv), {hv: anchor})
        if found is not None:
            return Embedding(found)
    return None


def contains_induced_colored(
    g: Graph,
    g_colors: Sequence[int],
    h: Graph,
    h_colors: Sequence[int],
    forced: dict[int, int] | None = None,
) -> Embedding | None:
    """An induced copy of h in g mapping each vertex to its own colour."""
    if h.n > g.n:
        return None
    if h.n == 0:
        return Embedding(())
    first = None
    forced = forced or {}
    if forced:
        first = next(iter(forced))
    found = _embed(g, h, _pattern_order(h, first=first), forced, g_colors, h_colors)
    return Embedding(found) if found is not None else None


def class_violation(g: Graph, spec: ClassSpec) -> tuple[Graph, Embedding] | None:
    """First forbidden pattern found in g, with its embedding."""
    for f in spec.forbidden:
        emb = contains_induced(g, f)
        if emb is not None:
            return f, emb
    return None


def in_class(g: Graph, spec: ClassSpec) -> bool:
    return class_violation(g, spec) is None


def in_class_anchored(g: Graph, spec: ClassSpec, anchor: int) -> bool:
    """Class check for a host whose subgraph without anchor is known clean."""
    return all(contains_induced_anchored(g, f, anchor) is None for f in spec.forbidden)


def bipartite_in_class(bg: BipartiteGraph, spec: ClassSpec) -> bool:
    """Membership for two-part graphs; patterns match in either orientation."""
    return in_class(bg.underlying(), spec)


def bipartite_contains_part_fixed(
    bg: BipartiteGraph, pattern: BipartiteGraph, allow_swap: bool = False
) -> Embedding | None:
    """Induced copy of a two-part pattern respecting the part assignment.

    With allow_swap, the pattern may also match with its parts exchanged.
    """
    g = bg.underlying()
    g_colors = [0] * bg.nA + [1] * bg.nB
    h = pattern.underlying()
    h_colors = [0] * pattern.nA + [1] * pattern.nB
    emb = contains_induced_colored(g, g_colors, h, h_colors)
    if emb is not None:
        return emb
    if allow_swap:
        sw = pattern.swap_parts()
        h2 = sw.underlying()
        h2_colors = [0] * sw.nA + [1] * sw.nB
        return contains_induced_colored(g, g_colors, h2, h2_colors)
    return None

"""Core graph types: bitmask adjacency, graph6 I/O, bipartite graphs with fixed parts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_VERTICES = 128


class GraphError(ValueError):
    pass


def popcount(x: int) -> int:
    return x.bit_count()


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; adj[v] is the neighborhood of v as a bitmask."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits beyond vertex range")
            if row >> v & 1:
                raise GraphError(f"self-loop at {v}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    @staticmethod
    def empty(n: int) -> Graph:
        return Graph(n, (0,) * n)

    @staticmethod
    def complete(n: int) -> Graph:
        full = (1 << n) - 1
        return Graph(n, tuple(full ^ (1 << v) for v in range(n)))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(self.adj)))

    def add_vertex(self, neighbors: int) -> Graph:
        """New graph with vertex n adjacent to the given mask of old vertices."""
        if neighbors & ~((1 << self.n) - 1):
            raise GraphError("neighbor mask outside vertex range")
        bit = 1 << self.n
        rows = [row | bit if neighbors >> v & 1 else row for v, row in enumerate(self.adj)]
        rows.append(neighbors)
        return Graph(self.n + 1, tuple(rows))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph on the given vertices, relabeled in ascending order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = [0] * len(keep)
        for v in keep:
            for u in bits(self.adj[v]):
                if u in index:
                    rows[index[v]] |= 1 << index[u]
        return Graph(len(keep), tuple(rows))

    def relabel(self, perm: list[int]) -> Graph:
        """Image graph under the map old vertex v -> perm[v]."""
        rows = [0] * self.n
        for v in range(self.n):
            for u in bits(self.adj[v]):
                rows[perm[v]] |= 1 << perm[u]
        return Graph(self.n, tuple(rows))

    def components(self) -> list[int]:
        """Connected components as vertex masks, ordered by smallest member."""
        seen = 0
        out = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = 1 << v
            while frontier:
                grow = 0
                for u in bits(frontier):
                    grow |= self.adj[u]
                frontier = grow & ~comp
                comp |= grow
            out.append(comp)
            seen |= comp
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def bipartition(self) -> tuple[int, int] | None:
        """Two color-class masks if bipartite (per component, side of vertex 0 first), else None."""
        color = {}
        sides = [0, 0]
        for comp in self.components():
            root = next(bits(comp))
            color[root] = 0
            stack = [root]
            while stack:
                v = stack.pop()
                for u in bits(self.adj[v]):
                    if u not in color:
                        color[u] = color[v] ^ 1
                        stack.append(u)
                    elif color[u] == color[v]:
                        return None
        for v, c in color.items():
            sides[c] |= 1 << v
        return sides[0], sides[1]

    def is_forest(self) -> bool:
        return self.edge_count() == self.n - len(self.components())

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        rows = list(self.adj) + [row << shift for row in other.adj]
        return Graph(self.n + other.n, tuple(rows))

    def join(self, other: Graph) -> Graph:
        g = self.disjoint_union(other)
        left = (1 << self.n) - 1
        right = ((1 << g.n) - 1) ^ left
        rows = [row | (right if v < self.n else left) for v, row in enumerate(g.adj)]
        return Graph(g.n, tuple(rows))

    def to_graph6(self) -> str:
        return to_graph6(self)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def to_graph6(g: Graph) -> str:
    """Standard graph6 encoding: upper-triangle column-major bits, 6 per byte, offset 63."""
    n = g.n
    if n <= 62:
        head = [63 + n]
    else:
        head = [126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)]
    bitstream = []
    for v in range(1, n):
        for u in range(v):
            bitstream.append(g.adj[u] >> v & 1)
    while len(bitstream) % 6:
        bitstream.append(0)
    body = []
    for i in range(0, len(bitstream), 6):
        word = 0
        for b in bitstream[i : i + 6]:
            word = word << 1 | b
        body.append(63 + word)
    return bytes(head + body).decode("ascii")


def from_graph6(text: str) -> Graph:
    data = [c - 63 for c in text.strip().encode("ascii")]
    if not data or any(not 0 <= c <= 63 for c in data):
        raise GraphError(f"invalid graph6 text {text!r}")
    if data[0] == 63:
        if len(data) < 4:
            raise GraphError("truncated graph6 header")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise GraphError(f"graph6 body length mismatch for n={n}")
    stream = []
    for word in body:
        for shift in range(5, -1, -1):
            stream.append(word >> shift & 1)
    rows = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if stream[i]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            i += 1
    if any(stream[need:]):
        raise GraphError("nonzero padding bits in graph6 body")
    return Graph(n, tuple(rows))


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with an ordered part split; cross[a] is N(a) as a mask over B."""

    nA: int
    nB: int
    cross: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.nA < 0 or self.nB < 0 or self.nA + self.nB > MAX_VERTICES:
            raise GraphError("part sizes out of range")
        if len(self.cross) != self.nA:
            raise GraphError("cross row count does not match nA")
        full = (1 << self.nB) - 1
        for a, row in enumerate(self.cross):
            if row & ~full:
                raise GraphError(f"cross row {a} has bits beyond part B")

    @staticmethod
    def from_edges(nA: int, nB: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
        rows = [0] * nA
        for a, b in edges:
            rows[a] |= 1 << b
        return BipartiteGraph(nA, nB, tuple(rows))

    @staticmethod
    def complete_graph(nA: int, nB: int) -> BipartiteGraph:
        full = (1 << nB) - 1
        return BipartiteGraph(nA, nB, (full,) * nA)

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.cross[a] >> b & 1)

    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.cross)

    def b_neighborhood(self, b: int) -> int:
        """Neighbors of B-vertex b as a mask over A."""
        m = 0
        for a, row in enumerate(self.cross):
            m |= (row >> b & 1) << a
        return m

    def bipartite_complement(self) -> BipartiteGraph:
        full = (1 << self.nB) - 1
        return BipartiteGraph(self.nA, self.nB, tuple(full ^ row for row in self.cross))

    def swap_parts(self) -> BipartiteGraph:
        return BipartiteGraph(self.nB, self.nA, tuple(self.b_neighborhood(b) for b in range(self.nB)))

    def add_a(self, neighbors: int) -> BipartiteGraph:
        if neighbors & ~((1 << self.nB) - 1):
            raise GraphError("neighbor mask outside part B")
        return BipartiteGraph(self.nA + 1, self.nB, self.cross + (neighbors,))

    def add_b(self, neighbors: int) -> BipartiteGraph:
        """New B-vertex adjacent to the given mask of A-vertices."""
        if neighbors & ~((1 << self.nA) - 1):
            raise GraphError("neighbor mask outside part A")
        bit = 1 << self.nB
        rows = [row | bit if neighbors >> a & 1 else row for a, row in enumerate(self.cross)]
        return BipartiteGraph(self.nA, self.nB + 1, tuple(rows))

    def induced(self, a_vertices: Iterable[int], b_vertices: Iterable[int]) -> BipartiteGraph:
        keep_a = sorted(set(a_vertices))
        keep_b = sorted(set(b_vertices))
        rows = []
        for a in keep_a:
            row = 0
            for j, b in enumerate(keep_b):
                row |= (self.cross[a] >> b & 1) << j
            rows.append(row)
        return BipartiteGraph(len(keep_a), len(keep_b), tuple(rows))

    def underlying(self) -> Graph:
        """Plain graph on A then B (A-vertex a is vertex a, B-vertex b is vertex nA+b)."""
        rows = [row << self.nA for row in self.cross]
        rows += [self.b_neighborhood(b) for b in range(self.nB)]
        return Graph(self.nA + self.nB, tuple(rows))

    def to_line(self) -> str:
        return to_bip_line(self)

    def __str__(self) -> str:
        return self.to_line()


def to_bip_line(bg: BipartiteGraph) -> str:
    """One-line text form `B <nA> <nB> <hex>`: rows packed row-major, nB bits per row."""
    value = 0
    for a, row in enumerate(bg.cross):
        value |= row << (a * bg.nB)
    return f"B {bg.nA} {bg.nB} {value:x}"


def from_bip_line(text: str) -> BipartiteGraph:
    parts = text.split()
    if len(parts) != 4 or parts[0] != "B":
        raise GraphError(f"invalid bipartite line {text!r}")
    try:
        nA, nB = int(parts[1]), int(parts[2])
        value = int(parts[3], 16)
    except ValueError as exc:
        raise GraphError(f"invalid bipartite line {text!r}") from exc
    if nA < 0 or nB < 0:
        raise GraphError("negative part size")
    full = (1 << nB) - 1
    rows = tuple(value >> (a * nB) & full for a in range(nA))
    if value >> (nA * nB):
        raise GraphError("bipartite line value has bits beyond nA*nB")
    return BipartiteGraph(nA, nB, rows)

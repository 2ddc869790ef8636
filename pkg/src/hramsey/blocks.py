"""Neighborhood-class decomposition of P2+P3-free two-part graphs.

Two same-part vertices are related when their neighborhoods are equal or
cross-incomparable with exactly one private neighbor on each side. In the
P2+P3-free class this relation is an equivalence; its classes are totally
ordered by strict neighborhood containment, and each class of incomparable
vertices pairs with an opposite-part class of the same size through an
induced matching or co-matching (a block). Ordering black classes by
shrinking neighborhoods and white classes by growing ones yields linear
orders with strong before/after adjacency guarantees, which
p2p3_find_homogeneous exploits to locate a balanced biclique or
co-biclique in any sufficiently large in-class graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import p2_plus_p3
from .graph import BipartiteGraph, popcount
from .structure import (
    ClassViolationError,
    HomogeneousWitness,
    StructureError,
    verify_homogeneous,
)
from .subgraph import ClassSpec, class_violation

_P2P3_SPEC = ClassSpec.of([p2_plus_p3()], name="p2p3-free")

TYPE_EQUAL = 1
TYPE_INCOMPARABLE = 2


@dataclass(frozen=True)
class VertexClass:
    vertices: tuple[int, ...]
    kind: int
    block: int | None


@dataclass(frozen=True)
class Block:
    black_class: int
    white_class: int
    pairing: str
    black_vertices: tuple[int, ...]
    white_vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.black_vertices)


@dataclass(frozen=True)
class BlockDecomposition:
    black_classes: tuple[VertexClass, ...]
    white_classes: tuple[VertexClass, ...]
    blocks: tuple[Block, ...]
    black_order: tuple[int, ...]
    white_order: tuple[int, ...]


def _related(nx: int, ny: int) -> bool:
    if nx == ny:
        return True
    return popcount(nx & ~ny) == 1 and popcount(ny & ~nx) == 1


def _partition_classes(nbhd: list[int], count: int) -> list[list[int]]:
    parent = list(range(count))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for x in range(count):
        for y in range(x + 1, count):
            if _related(nbhd[x], nbhd[y]):
                parent[find(x)] = find(y)
    groups: dict[int, list[int]] = {}
    for v in range(count):
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


def _classify(nbhd: list[int], members: list[int], part: str) -> int:
    if len(members) == 1:
        return TYPE_EQUAL
    if all(nbhd[x] == nbhd[members[0]] for x in members[1:]):
        return TYPE_EQUAL
    for i, x in enumerate(members):
        for y in members[i + 1 :]:
            if popcount(nbhd[x] & ~nbhd[y]) != 1 or popcount(nbhd[y] & ~nbhd[x]) != 1:
                raise StructureError(
                    f"{part} class {members} mixes equal and incomparable neighborhoods"
                )
    return TYPE_INCOMPARABLE


def _check_nesting(nbhd: list[int], ordered: list[list[int]], part: str, shrinking: bool) -> None:
    for i, earlier in enumerate(ordered):
        for later in ordered[i + 1 :]:
            for x in earlier:
                for y in later:
                    big, small = (nbhd[x], nbhd[y]) if shrinking else (nbhd[y], nbhd[x])
                    if small & ~big or small == big:
                        raise StructureError(
                            f"{part} classes are not strictly nested at vertices {x},{y}"
                        )


def p2p3_blocks(bg: BipartiteGraph) -> BlockDecomposition:
    """Full class/block decomposition; raises ClassViolationError with the
    embedding when the input contains an induced P2+P3."""
    hit = class_violation(bg.underlying(), _P2P3_SPEC)
    if hit is not None:
        pattern, emb = hit
        raise ClassViolationError(
            f"p2p3_blocks: induced P2+P3 at {emb.mapping}", pattern, emb
        )
    black_n = [bg.cross[a] for a in range(bg.nA)]
    white_n = [0] * bg.nB
    for a in range(bg.nA):
        row = bg.cross[a]
        for b in range(bg.nB):
            if row >> b & 1:
                white_n[b] |= 1 << a

    raw_black = _partition_classes(black_n, bg.nA)
    raw_white = _partition_classes(white_n, bg.nB)
    black_kinds = {tuple(m): _classify(black_n, m, "black") for m in raw_black}
    white_kinds = {tuple(m): _classify(white_n, m, "white") for m in raw_white}

    raw_black.sort(key=lambda m: -popcount(black_n[m[0]]))
    raw_white.sort(key=lambda m: popcount(white_n[m[0]]))
    _check_nesting(black_n, raw_black, "black", shrinking=True)
    _check_nesting(white_n, raw_white, "white", shrinking=False)

    white_index = {v: i for i, members in enumerate(raw_white) for v in members}

    blocks: list[Block] = []
    black_block: dict[int, int] = {}
    white_block: dict[int, int] = {}
    ordered_whites: dict[int, tuple[int, ...]] = {}
    for bci, members in enumerate(raw_black):
        if black_kinds[tuple(members)] != TYPE_INCOMPARABLE:
            continue
        x, y = members[0], members[1]
        private = (black_n[x] & ~black_n[y]).bit_length() - 1
        wci = white_index[private]
        partner = raw_white[wci]
        if white_kinds[tuple(partner)] != TYPE_INCOMPARABLE or len(partner) != len(members):
            raise StructureError(
                f"black class {members} pairs with incompatible white class {partner}"
            )
        partner_mask = 0
        for v in partner:
            partner_mask |= 1 << v
        degrees = {popcount(black_n[v] & partner_mask) for v in members}
        if degrees == {1}:
            pairing = "matching"
            mate = lambda v: (black_n[v] & partner_mask).bit_length() - 1
        elif degrees == {len(partner) - 1}:
            pairing = "comatching"
            mate = lambda v: (~black_n[v] & partner_mask).bit_length() - 1
        else:
            raise StructureError(
                f"block at black class {members} is neither a matching nor a co-matching"
            )
        ordered_black = tuple(sorted(members))
        ordered_white = tuple(mate(v) for v in ordered_black)
        if sorted(ordered_white) != sorted(partner):
            raise StructureError(
                f"block at black class {members} has no bijection onto {partner}"
            )
        idx = len(blocks)
        blocks.append(Block(bci, wci, pairing, ordered_black, ordered_white))
        black_block[bci] = idx
        white_block[wci] = idx
        ordered_whites[wci] = ordered_white

    for wci, members in enumerate(raw_white):
        if white_kinds[tuple(members)] == TYPE_INCOMPARABLE and wci not in white_block:
            raise StructureError(f"white class {members} has no block partner")

    black_classes = tuple(
        VertexClass(
            blocks[black_block[i]].black_vertices
            if i in black_block
            else tuple(sorted(m)),
            black_kinds[tuple(m)],
            black_block.get(i),
        )
        for i, m in enumerate(raw_black)
    )
    white_classes = tuple(
        VertexClass(
            ordered_whites[i] if i in white_block else tuple(sorted(m)),
            white_kinds[tuple(m)],
            white_block.get(i),
        )
        for i, m in enumerate(raw_white)
    )
    dec = BlockDecomposition(
        black_classes,
        white_classes,
        tuple(blocks),
        tuple(v for cls in black_classes for v in cls.vertices),
        tuple(v for cls in white_classes for v in cls.vertices),
    )
    _check_order_bullets(bg, dec)
    return dec


def _class_spans(classes: tuple[VertexClass, ...]) -> list[tuple[int, int]]:
    spans = []
    at = 0
    for cls in classes:
        spans.append((at, at + len(cls.vertices)))
        at += len(cls.vertices)
    return spans


def _check_order_bullets(bg: BipartiteGraph, dec: BlockDecomposition) -> None:
    """The four adjacency guarantees of the linear orders, checked directly."""
    wpos = {v: i for i, v in enumerate(dec.white_order)}
    bpos = {v: i for i, v in enumerate(dec.black_order)}
    bspans = _class_spans(dec.black_classes)
    wspans = _class_spans(dec.white_classes)

    for cls, (lo, hi) in zip(dec.black_classes, bspans):
        for x in cls.vertices:
            row = [bg.has_edge(x, w) for w in dec.white_order]
            if cls.kind == TYPE_EQUAL:
                if row != sorted(row):
                    raise StructureError(f"black vertex {x} is not suffix-adjacent")
            else:
                wlo, whi = wspans[dec.blocks[cls.block].white_class]
                if not all(row[whi:]) or any(row[:wlo]):
                    raise StructureError(f"block black vertex {x} breaks the order rule")
    for cls, (lo, hi) in zip(dec.white_classes, wspans):
        for y in cls.vertices:
            col = [bg.has_edge(b, y) for b in dec.black_order]
            if cls.kind == TYPE_EQUAL:
                if col != sorted(col, reverse=True):
                    raise StructureError(f"white vertex {y} is not prefix-adjacent")
            else:
                blo, bhi = bspans[dec.blocks[cls.block].black_class]
                if not all(col[:blo]) or any(col[bhi:]):
                    raise StructureError(f"block white vertex {y} breaks the order rule")


def _block_of(dec: BlockDecomposition, black: int | None, white: int | None) -> int | None:
    if black is not None:
        for cls in dec.black_classes:
            if black in cls.vertices:
                return cls.block
    if white is not None:
        for cls in dec.white_classes:
            if white in cls.vertices:
                return cls.block
    return None


def p2p3_find_homogeneous(bg: BipartiteGraph, p: int, q: int) -> HomogeneousWitness:
    """A verified balanced biclique of order p or co-biclique of order q.

    Requires p, q >= 2 and both parts of size at least max(p,q)+p+q-2; walks
    the proof of the matching Ramsey bound: window checks first, then the
    block containing the crossing pairs, then a case split on its size.
    """
    if p < 2 or q < 2:
        raise StructureError("p2p3_find_homogeneous: needs p, q >= 2")
    threshold = max(p, q) + p + q - 2
    if bg.nA < threshold or bg.nB < threshold:
        raise StructureError(
            f"p2p3_find_homogeneous: parts ({bg.nA},{bg.nB}) below threshold {threshold}"
        )
    dec = p2p3_blocks(bg)
    border, worder = dec.black_order, dec.white_order
    first_blacks, last_blacks = border[:p], border[-q:]
    first_whites, last_whites = worder[:q], worder[-p:]

    wit = None
    if all(bg.has_edge(x, y) for x in first_blacks for y in last_whites):
        wit = HomogeneousWitness("biclique", first_blacks, last_whites)
    elif not any(bg.has_edge(x, y) for x in last_blacks for y in first_whites):
        wit = HomogeneousWitness("cobiclique", last_blacks, first_whites)
    if wit is not None:
        verify_homogeneous(bg, wit, p if wit.kind == "biclique" else q)
        return wit

    w1, b3 = next(
        (w, b) for w in first_whites for b in last_blacks if bg.has_edge(b, w)
    )
    b1, w3 = next(
        (b, w) for b in first_blacks for w in last_whites if not bg.has_edge(b, w)
    )
    if _block_of(dec, b3, None) != _block_of(dec, None, w1) or _block_of(dec, b3, None) is None:
        wit = HomogeneousWitness("biclique", border[:p], worder[-p:])
        verify_homogeneous(bg, wit, p)
        return wit
    if _block_of(dec, b1, None) != _block_of(dec, None, w3) or _block_of(dec, b1, None) is None:
        wit = HomogeneousWitness("cobiclique", border[-q:], worder[:q])
        verify_homogeneous(bg, wit, q)
        return wit
    if _block_of(dec, b1, None) != _block_of(dec, b3, None):
        raise StructureError("p2p3_find_homogeneous: crossing pairs in distinct blocks")

    block = dec.blocks[_block_of(dec, b3, None)]
    xb, xw = block.black_vertices, block.white_vertices
    m = block.size
    bspans = _class_spans(dec.black_classes)
    wspans = _class_spans(dec.white_classes)
    blo, bhi = bspans[block.black_class]
    wlo, whi = wspans[block.white_class]
    blacks_before, blacks_after = border[:blo], border[bhi:]
    whites_before, whites_after = worder[:wlo], worder[whi:]

    if block.pairing == "matching":
        if m >= 2 * q:
            wit = HomogeneousWitness("cobiclique", xb[q : 2 * q], xw[:q])
        elif m != 2 * q - 1:
            raise StructureError(f"p2p3_find_homogeneous: matching block of size {m}")
        elif blacks_after:
            wit = HomogeneousWitness(
                "cobiclique", (blacks_after[0],) + xb[m - (q - 1) :], xw[:q]
            )
        elif whites_before:
            wit = HomogeneousWitness(
                "cobiclique", xb[:q], (whites_before[0],) + xw[q:]
            )
        else:
            wit = HomogeneousWitness(
                "biclique",
                (b3,) + blacks_before[: p - 1],
                (w1,) + whites_after[: p - 1],
            )
    else:
        if m >= 2 * p:
            wit = HomogeneousWitness("biclique", xb[:p], xw[p : 2 * p])
        elif m != 2 * p - 1:
            raise StructureError(f"p2p3_find_homogeneous: co-matching block of size {m}")
        elif blacks_before:
            wit = HomogeneousWitness(
                "biclique", (blacks_before[0],) + xb[: p - 1], xw[m - p :]
            )
        elif whites_after:
            wit = HomogeneousWitness(
                "biclique", xb[-p:], (whites_after[0],) + xw[: p - 1]
            )
        else:
            wit = HomogeneousWitness(
                "cobiclique",
                (b1,) + blacks_after[: q - 1],
                (w3,) + whites_before[: q - 1],
            )
    verify_homogeneous(bg, wit, p if wit.kind == "biclique" else q)
    return wit

"""Closed-form Ramsey values per class, with verified extremal witnesses.

Every entry carries: the forbidden patterns defining its class, the value
formula, a witness builder for the lower bound, and the parameter domain.
witness_lower re-verifies each construction before returning it, so a
returned graph is a machine-checked certificate that the Ramsey value
exceeds its vertex count.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Callable

from . import witnesses as w
from .catalog import (
    claw,
    co_claw,
    co_diamond,
    complete,
    cycle,
    diamond,
    path,
    paw,
    p2_plus_p3,
    union_copies,
)
from .exhaustive import RamseyResult, bipartite_ramsey_exact, ramsey_exact
from .graph import BipartiteGraph, Graph
from .invariants import (
    clique_number,
    find_balanced_biclique,
    find_balanced_cobiclique,
    independence_number,
)
from .subgraph import ClassSpec, in_class
from .witnesses import WitnessUnattainable


class FormulaDomainError(ValueError):
    pass


@dataclass(frozen=True)
class Formula:
    fid: str
    description: str
    bipartite: bool
    min_a: int
    min_b: int
    forbidden: tuple[Graph, ...]
    value_fn: Callable[[int, int], int]
    witness_fn: Callable[[int, int], Graph | BipartiteGraph]

    def spec(self) -> ClassSpec:
        return ClassSpec.of(self.forbidden, name=self.fid)

    def check_domain(self, a: int, b: int) -> None:
        if a < self.min_a or b < self.min_b:
            raise FormulaDomainError(
                f"{self.fid} needs arguments >= ({self.min_a},{self.min_b})"
            )

    def value(self, a: int, b: int) -> int:
        self.check_domain(a, b)
        return self.value_fn(a, b)


def _claw_coclaw(a: int, b: int) -> int:
    if a == 4 and b == 4:
        return 10
    return max((5 * a - 3) // 2, (5 * b - 3) // 2)


def _diamond(a: int, b: int) -> int:
    if a == 3 and b == 3:
        return 6
    if a in (4, 5) and b in (4, 5):
        return 10
    return max(2 * a - 1, 2 * b - 1)


def _twok2_c4(a: int, b: int) -> int:
    return a + b


def _twok2_diamond(a: int, b: int) -> int:
    z = 5 * (b - 1) // 2 + 1
    if a == 3:
        return z
    if a == 4:
        return {3: 7, 4: 10}.get(b, z)
    if (a, b) == (5, 4):
        return 10
    return max(z, a + b - 1)


def _p4c4coclaw(a: int, b: int) -> int:
    return a + 2 * b - 4


def _cdpawclaw(a: int, b: int) -> int:
    if a == 3 and b == 3:
        return 6
    if a == 3 and b in (4, 5, 6):
        return 7
    if b == 3:
        return 2 * a - 1
    return max(2 * a, b)


def _p3free(p: int, q: int) -> int:
    return (p - 1) * (q - 1) + 1


def _p2p3_bip(p: int, q: int) -> int:
    return max(p, q) + p + q - 2


def _twok2() -> Graph:
    return union_copies(complete(2), 2)


FORMULAS: dict[str, Formula] = {
    f.fid: f
    for f in (
        Formula(
            fid="thm_claw_coclaw",
            description="claw-free and co-claw-free graphs",
            bipartite=False,
            min_a=3,
            min_b=3,
            forbidden=(claw(), co_claw()),
            value_fn=_claw_coclaw,
            witness_fn=w.claw_coclaw_witness,
        ),
        Formula(
            fid="thm_diamond",
            description="diamond-free and co-diamond-free graphs",
            bipartite=False,
            min_a=3,
            min_b=3,
            forbidden=(diamond(), co_diamond()),
            value_fn=_diamond,
            witness_fn=w.diamond_witness,
        ),
        Formula(
            fid="thm_2k2_c4",
            description="2K2-free and C4-free graphs",
            bipartite=False,
            min_a=3,
            min_b=3,
            forbidden=(_twok2(), cycle(4)),
            value_fn=_twok2_c4,
            witness_fn=w.twok2_c4_witness,
        ),
        Formula(
            fid="thm_2k2_diamond",
            description="2K2-free and diamond-free graphs",
            bipartite=False,
            min_a=3,
            min_b=3,
            forbidden=(_twok2(), diamond()),
            value_fn=_twok2_diamond,
            witness_fn=w.twok2_diamond_witness,
        ),
        Formula(
            fid="thm_p4c4coclaw",
            description="P4-free, C4-free, and co-claw-free graphs",
            bipartite=False,
            min_a=3,
            min_b=3,
            forbidden=(path(4), cycle(4), co_claw()),
            value_fn=_p4c4coclaw,
            witness_fn=w.p4c4coclaw_witness,
        ),
        Formula(
            fid="thm_cdpawclaw",
            description="co-diamond-free, paw-free, and claw-free graphs",
            bipartite=False,
            min_a=3,
            min_b=3,
            forbidden=(co_diamond(), paw(), claw()),
            value_fn=_cdpawclaw,
            witness_fn=w.cdpawclaw_witness,
        ),
        Formula(
            fid="thm_p3free",
            description="P3-free graphs (disjoint unions of cliques)",
            bipartite=False,
            min_a=1,
            min_b=1,
            forbidden=(path(3),),
            value_fn=_p3free,
            witness_fn=w.p3free_witness,
        ),
        Formula(
            fid="thm_cop3free",
            description="co-P3-free graphs (complete multipartite graphs)",
            bipartite=False,
            min_a=1,
            min_b=1,
            forbidden=(path(3).complement(),),
            value_fn=_p3free,
            witness_fn=w.cop3free_witness,
        ),
        Formula(
            fid="thm_p2p3_bip",
            description="two-part graphs without an induced P2+P3",
            bipartite=True,
            min_a=2,
            min_b=2,
            forbidden=(p2_plus_p3(),),
            value_fn=_p2p3_bip,
            witness_fn=w.p2p3_bip_witness,
        ),
    )
}


def formula_ids() -> list[str]:
    return sorted(FORMULAS)


def formula_value(fid: str, a: int, b: int) -> int:
    return _get(fid).value(a, b)


def _get(fid: str) -> Formula:
    if fid not in FORMULAS:
        raise KeyError(f"unknown formula id {fid!r}; known: {', '.join(formula_ids())}")
    return FORMULAS[fid]


class WitnessVerificationError(ValueError):
    pass


def _verify_graph_witness(f: Formula, g: Graph, a: int, b: int, n: int) -> None:
    if g.n != n:
        raise WitnessVerificationError(f"{f.fid}({a},{b}): witness has {g.n} vertices, expected {n}")
    if not in_class(g, f.spec()):
        raise WitnessVerificationError(f"{f.fid}({a},{b}): witness leaves the class")
    if clique_number(g) >= a:
        raise WitnessVerificationError(f"{f.fid}({a},{b}): witness holds a clique of size {a}")
    if independence_number(g) >= b:
        raise WitnessVerificationError(
            f"{f.fid}({a},{b}): witness holds an independent set of size {b}"
        )


def _verify_bip_witness(
    f: Formula, bg: BipartiteGraph, p: int, q: int, parts: int
) -> None:
    if bg.nA != parts or bg.nB != parts:
        raise WitnessVerificationError(
            f"{f.fid}({p},{q}): witness parts ({bg.nA},{bg.nB}), expected {parts}"
        )
    if not in_class(bg.underlying(), f.spec()):
        raise WitnessVerificationError(f"{f.fid}({p},{q}): witness leaves the class")
    if find_balanced_biclique(bg, p) is not None:
        raise WitnessVerificationError(
            f"{f.fid}({p},{q}): witness holds a balanced biclique of order {p}"
        )
    if find_balanced_cobiclique(bg, q) is not None:
        raise WitnessVerificationError(
            f"{f.fid}({p},{q}): witness holds a balanced co-biclique of order {q}"
        )


def witness_lower(fid: str, a: int, b: int) -> Graph | BipartiteGraph:
    """A verified extremal graph one vertex (per part) below the value.

    Raises WitnessUnattainable when no such graph exists for the cell, and
    WitnessVerificationError if a construction fails its own checks.
    """
    f = _get(fid)
    f.check_domain(a, b)
    built = f.witness_fn(a, b)
    target = f.value_fn(a, b) - 1
    if f.bipartite:
        assert isinstance(built, BipartiteGraph)
        _verify_bip_witness(f, built, a, b, target)
    else:
        assert isinstance(built, Graph)
        _verify_graph_witness(f, built, a, b, target)
    return built


def crosscheck_cell(fid: str, a: int, b: int, cap: int) -> dict:
    """Compare the closed form against exhaustive enumeration at one cell.

    Status: 'agree', 'disagree', or 'undetermined' (cap too low to decide).
    The witness check runs independently of enumeration.
    """
    f = _get(fid)
    predicted = f.value(a, b)
    if f.bipartite:
        result: RamseyResult = bipartite_ramsey_exact(f.spec(), a, b, cap)
    else:
        result = ramsey_exact(f.spec(), a, b, cap)
    try:
        witness_lower(fid, a, b)
        witness_status = "verified"
    except WitnessUnattainable as exc:
        witness_status = f"unattainable: {exc}"
    except WitnessVerificationError as exc:
        witness_status = f"failed: {exc}"
    if result.determined:
        status = "agree" if result.value == predicted else "disagree"
    else:
        status = "undetermined"
    return {
        "formula": fid,
        "a": a,
        "b": b,
        "cap": cap,
        "predicted": predicted,
        "enumerated": result.value,
        "lower_bound": result.lower_bound,
        "counts": {str(k): v for k, v in sorted(result.counts.items())},
        "witness": witness_status,
        "status": status,
    }

"""Command line front end.

Subcommands cover the computational surface of the package: exhaustive
Ramsey values, closed-form evaluation and cross-checking, witness
construction, class membership, canonical decomposition, homogeneous-set
finders, structure lemma verification, random girth sampling, and raw
enumeration.

Exit codes: 0 success, 1 usage or input error, 2 verification
disagreement (a closed form contradicted by enumeration, a lemma
counterexample, an unattainable witness).

Output is a single JSON document on stdout, byte-identical across runs
and --jobs settings for identical inputs; --format text renders the
same payload as key/value lines.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from . import catalog
from .blocks import p2p3_find_homogeneous
from .cache import ENGINE_VERSION, ResultCache, cache_key
from .decompose import canonical_decompose, recompose, s123_find_homogeneous
from .exhaustive import (
    bipartite_ramsey_exact,
    enumerate_bipartite_grid,
    enumerate_class,
    ramsey_exact,
)
from .formulas import (
    FormulaDomainError,
    WitnessVerificationError,
    crosscheck_cell,
    formula_ids,
    formula_value,
    witness_lower,
)
from .graph import BipartiteGraph, Graph, GraphError, from_bip_line, from_graph6
from .lemmas import LemmaError, lemma_ids, verify_structure_lemma
from .randbip import (
    RandomBipError,
    RandomParams,
    count_short_cycles,
    sample_girth_construction,
)
from .structure import ClassViolationError, StructureError
from .subgraph import ClassSpec, class_violation
from .witnesses import WitnessUnattainable

SCHEMA_VERSION = 1

RAMSEY_CAP_DEFAULT = 11
BIPARTITE_CAP_DEFAULT = 6

WITNESS_LIMIT = 64


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse tuned to the documented exit codes: bad usage raises
    UsageError so main can map it to exit 1 instead of argparse's 2."""

    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------- inputs

_COPIES_RE = re.compile(r"(\d*)K(\d+)")
_PATH_RE = re.compile(r"P(\d+)")
_CYCLE_RE = re.compile(r"C(\d+)")
_EMPTY_RE = re.compile(r"co-K(\d+)")


def parse_graph_token(tok: str) -> Graph:
    """One --forbid token: a catalog name, K/P/C shorthand, or raw graph6.

    Shorthands: Kn complete, co-Kn edgeless, Pn path, Cn cycle, mKn m
    disjoint copies of Kn (2K2), co-<token> complement of an inner token.
    """
    named = catalog.named_graphs()
    if tok in named:
        return named[tok]
    m = _EMPTY_RE.fullmatch(tok)
    if m:
        return catalog.empty(int(m.group(1)))
    m = _COPIES_RE.fullmatch(tok)
    if m:
        copies = int(m.group(1)) if m.group(1) else 1
        base = catalog.complete(int(m.group(2)))
        return catalog.union_copies(base, copies) if copies > 1 else base
    m = _PATH_RE.fullmatch(tok)
    if m:
        return catalog.path(int(m.group(1)))
    m = _CYCLE_RE.fullmatch(tok)
    if m:
        return catalog.cycle(int(m.group(1)))
    if tok.startswith("co-"):
        return parse_graph_token(tok[3:]).complement()
    try:
        return from_graph6(tok)
    except GraphError:
        raise UsageError(
            f"unknown graph token {tok!r}: not a catalog name, a K/P/C "
            "shorthand, or valid graph6"
        ) from None


def parse_forbid(text: str) -> ClassSpec:
    tokens = [t for t in (s.strip() for s in text.split(",")) if t]
    if not tokens:
        raise UsageError("--forbid needs at least one graph token")
    return ClassSpec.of([parse_graph_token(t) for t in tokens], name=text)


def parse_range(text: str) -> list[int]:
    """'4' or '3..5' (inclusive)."""
    if ".." in text:
        lo_s, _, hi_s = text.partition("..")
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise UsageError(f"bad range {text!r}") from None
        if hi < lo:
            raise UsageError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    try:
        return [int(text)]
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None


def read_graph_arg(args) -> Graph:
    if getattr(args, "graph", None):
        try:
            return from_graph6(args.graph)
        except GraphError as exc:
            raise UsageError(str(exc)) from None
    if getattr(args, "line", None):
        return read_line_arg(args).underlying()
    raise UsageError("need --graph <graph6> or --line 'B nA nB hex'")


def read_line_arg(args) -> BipartiteGraph:
    if not getattr(args, "line", None):
        raise UsageError("need --line 'B nA nB hex'")
    try:
        return from_bip_line(args.line)
    except GraphError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------- output

def emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        return
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, list):
            sys.stdout.write(f"{key}:\n")
            for item in value:
                sys.stdout.write("  " + json.dumps(item, sort_keys=True) + "\n")
        elif isinstance(value, dict):
            sys.stdout.write(f"{key}: " + json.dumps(value, sort_keys=True) + "\n")
        else:
            sys.stdout.write(f"{key}: {value}\n")


def _base_payload(command: str, **fields) -> dict:
    payload = {"schema": SCHEMA_VERSION, "engine": ENGINE_VERSION, "command": command}
    payload.update(fields)
    return payload


def _encode_witnesses(witnesses) -> tuple[list[str], int]:
    lines = []
    for g in witnesses[:WITNESS_LIMIT]:
        lines.append(g.to_line() if isinstance(g, BipartiteGraph) else g.to_graph6())
    return lines, len(witnesses)


# ------------------------------------------------------------- handlers

def cmd_ramsey(args) -> tuple[dict, int]:
    spec = parse_forbid(args.forbid)
    cap = args.cap if args.cap is not None else (
        BIPARTITE_CAP_DEFAULT if args.bipartite else RAMSEY_CAP_DEFAULT
    )
    cache = ResultCache.from_options(args.cache_dir)
    key = cache_key("ramsey", args.bipartite, spec.key(), args.p, args.q, cap)
    payload = cache.load(key)
    if payload is None:
        run = bipartite_ramsey_exact if args.bipartite else ramsey_exact
        result = run(spec, args.p, args.q, cap)
        lines, total = _encode_witnesses(result.witnesses)
        payload = _base_payload(
            "ramsey",
            forbid=args.forbid,
            bipartite=args.bipartite,
            p=args.p,
            q=args.q,
            cap=cap,
            value=result.value,
            determined=result.determined,
            lower_bound=result.lower_bound,
            counts={str(n): c for n, c in sorted(result.counts.items())},
            witnesses=lines,
            witness_count=total,
        )
        cache.store(key, payload)
    else:
        print("cache hit", file=sys.stderr)
    return payload, 0


def cmd_formula(args) -> tuple[dict, int]:
    value = formula_value(args.formula, args.a, args.b)
    payload = _base_payload(
        "formula", formula=args.formula, a=args.a, b=args.b, value=value
    )
    return payload, 0


def _cell_task(task: tuple[str, int, int, int]) -> dict:
    fid, a, b, cap = task
    return crosscheck_cell(fid, a, b, cap)


def cmd_crosscheck(args) -> tuple[dict, int]:
    fid = args.formula
    a_values = parse_range(args.a)
    b_values = parse_range(args.b)
    cache = ResultCache.from_options(args.cache_dir)
    tasks = [(fid, a, b, args.cap) for a in a_values for b in b_values]
    cells: list[dict | None] = [None] * len(tasks)
    missing: list[int] = []
    for i, task in enumerate(tasks):
        hit = cache.load(cache_key("crosscheck", *task))
        if hit is not None:
            cells[i] = hit
        else:
            missing.append(i)
    if missing:
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                fresh = list(pool.map(_cell_task, [tasks[i] for i in missing]))
        else:
            fresh = [_cell_task(tasks[i]) for i in missing]
        for i, cell in zip(missing, fresh):
            cells[i] = cell
            cache.store(cache_key("crosscheck", *tasks[i]), cell)
    done = [c for c in cells if c is not None]
    if any(c["status"] == "disagree" for c in done):
        status = "disagree"
    elif any(c["status"] == "undetermined" for c in done):
        status = "undetermined"
    else:
        status = "agree"
    payload = _base_payload(
        "crosscheck", formula=fid, cap=args.cap, cells=done, status=status
    )
    return payload, 2 if status == "disagree" else 0


def cmd_construct(args) -> tuple[dict, int]:
    value = formula_value(args.formula, args.a, args.b)
    try:
        built = witness_lower(args.formula, args.a, args.b)
    except WitnessUnattainable as exc:
        payload = _base_payload(
            "construct",
            formula=args.formula,
            a=args.a,
            b=args.b,
            value=value,
            witness=None,
            error=str(exc),
        )
        return payload, 2
    lines, _ = _encode_witnesses([built])
    n = built.nA + built.nB if isinstance(built, BipartiteGraph) else built.n
    payload = _base_payload(
        "construct",
        formula=args.formula,
        a=args.a,
        b=args.b,
        value=value,
        order=n,
        witness=lines[0],
        verified=True,
    )
    return payload, 0


def cmd_check(args) -> tuple[dict, int]:
    spec = parse_forbid(args.forbid)
    g = read_graph_arg(args)
    hit = class_violation(g, spec)
    payload = _base_payload(
        "check",
        forbid=args.forbid,
        order=g.n,
        in_class=hit is None,
    )
    if hit is not None:
        pattern, emb = hit
        payload["violation"] = {
            "pattern": pattern.to_graph6(),
            "mapping": list(emb.mapping),
        }
    return payload, 0


def cmd_decompose(args) -> tuple[dict, int]:
    bg = read_line_arg(args)
    tree = canonical_decompose(bg)
    rebuilt = recompose(tree, bg.nA, bg.nB)
    payload = _base_payload(
        "decompose",
        line=bg.to_line(),
        tree=tree.to_dict(),
        recompose_ok=rebuilt == bg,
    )
    return payload, 0 if rebuilt == bg else 2


def cmd_find_hom(args) -> tuple[dict, int]:
    bg = read_line_arg(args)
    if args.cls == "p2p3":
        if args.p is None or args.q is None:
            raise UsageError("--class p2p3 needs --p and --q")
        wit = p2p3_find_homogeneous(bg, args.p, args.q)
        size = args.p if wit.kind == "biclique" else args.q
        extra = {"p": args.p, "q": args.q}
    else:
        if args.n is None:
            raise UsageError("--class s123 needs --n")
        wit = s123_find_homogeneous(bg, args.n)
        size = args.n
        extra = {"n": args.n}
    payload = _base_payload(
        "find-hom",
        cls=args.cls,
        line=bg.to_line(),
        kind=wit.kind,
        a_side=list(wit.a_side),
        b_side=list(wit.b_side),
        size=size,
        verified=True,
        **extra,
    )
    return payload, 0


def cmd_verify_lemma(args) -> tuple[dict, int]:
    ids = lemma_ids() if args.lemma == "all" else [args.lemma]
    for lid in ids:
        if lid not in lemma_ids():
            raise UsageError(f"unknown lemma id {lid!r}; see --help for the list")
    reports = [verify_structure_lemma(lid, cap=args.cap) for lid in ids]
    all_ok = all(r.ok for r in reports)
    payload = _base_payload(
        "verify-lemma",
        lemmas=[r.to_dict() for r in reports],
        ok=all_ok,
    )
    return payload, 0 if all_ok else 2


def cmd_girth_sample(args) -> tuple[dict, int]:
    samples = []
    certified = True
    for offset in range(args.samples):
        params = RandomParams(n=args.n, k=args.k, seed=args.seed + offset)
        bg, report = sample_girth_construction(params)
        recount = count_short_cycles(bg, args.k)
        certified = certified and report.girth_certified and recount == 0
        samples.append(
            {
                "seed": params.seed,
                "line": bg.to_line(),
                "recount": recount,
                "report": report.to_dict(),
            }
        )
    payload = _base_payload(
        "girth-sample",
        n=args.n,
        k=args.k,
        samples=samples,
        certified=certified,
    )
    return payload, 0 if certified else 2


def cmd_enumerate(args) -> tuple[dict, int]:
    spec = parse_forbid(args.forbid)
    if args.bipartite:
        grid = enumerate_bipartite_grid(
            spec, args.a, args.b, part_symmetric=args.part_symmetric
        )
        counts = {f"{a},{b}": len(v) for (a, b), v in sorted(grid.items())}
        payload = _base_payload(
            "enumerate",
            forbid=args.forbid,
            bipartite=True,
            a=args.a,
            b=args.b,
            part_symmetric=args.part_symmetric,
            counts=counts,
        )
        if args.list:
            payload["graphs"] = {
                f"{a},{b}": [bg.to_line() for bg in v] for (a, b), v in sorted(grid.items())
            }
    else:
        cap = args.cap if args.cap is not None else 8
        levels = enumerate_class(spec, cap, max_omega=args.max_omega, max_alpha=args.max_alpha)
        payload = _base_payload(
            "enumerate",
            forbid=args.forbid,
            bipartite=False,
            cap=cap,
            counts={str(n): len(v) for n, v in sorted(levels.items())},
        )
        if args.list:
            payload["graphs"] = {
                str(n): [g.to_graph6() for g in v] for n, v in sorted(levels.items())
            }
    return payload, 0


# --------------------------------------------------------------- parser

def build_parser() -> _Parser:
    fid_list = ", ".join(formula_ids())
    lemma_list = ", ".join(lemma_ids())
    name_list = ", ".join(sorted(catalog.named_graphs()))
    forbid_help = (
        "comma-separated forbidden induced subgraphs: catalog names "
        f"({name_list}), shorthands Kn/co-Kn/Pn/Cn/mKn/co-<token>, or raw graph6"
    )

    parser = _Parser(
        prog="hramsey",
        description="Ramsey numbers, structure, and enumeration in hereditary graph classes.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"formula ids: {fid_list}\nlemma ids: {lemma_list}",
    )
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument(
        "--cache-dir",
        default=None,
        help="cache directory for expensive results (default: $RAMSEY_CACHE if set)",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser(
        "ramsey",
        help="exhaustive Ramsey value in a hereditary class",
        epilog=f"catalog names: {name_list}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--forbid", required=True, help=forbid_help)
    p.add_argument("--p", type=int, required=True, help="clique / biclique order")
    p.add_argument("--q", type=int, required=True, help="independent / co-biclique order")
    p.add_argument(
        "--cap",
        type=int,
        default=None,
        help=f"search cap (default {RAMSEY_CAP_DEFAULT}, bipartite {BIPARTITE_CAP_DEFAULT})",
    )
    p.add_argument(
        "--bipartite",
        action="store_true",
        help="part-balanced two-part variant over part-respecting patterns",
    )
    p.set_defaults(handler=cmd_ramsey)

    p = sub.add_parser(
        "formula",
        help="evaluate a closed form",
        epilog=f"formula ids: {fid_list}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("formula", choices=formula_ids(), metavar="formula")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(handler=cmd_formula)

    p = sub.add_parser(
        "crosscheck",
        help="closed form vs exhaustive enumeration over a parameter grid",
        epilog=f"formula ids: {fid_list}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("formula", choices=formula_ids(), metavar="formula")
    p.add_argument("--a", "--p", dest="a", required=True, help="range, e.g. 3..5 or 4")
    p.add_argument("--b", "--q", dest="b", required=True, help="range, e.g. 3..5 or 4")
    p.add_argument("--cap", type=int, required=True, help="enumeration cap per cell")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers over cells")
    p.set_defaults(handler=cmd_crosscheck)

    p = sub.add_parser(
        "construct",
        help="build and verify the extremal witness for a closed form",
        epilog=f"formula ids: {fid_list}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("formula", choices=formula_ids(), metavar="formula")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser(
        "check",
        help="class membership for one graph",
        epilog=f"catalog names: {name_list}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--forbid", required=True, help=forbid_help)
    p.add_argument("--graph", help="graph6 string")
    p.add_argument("--line", help="two-part line 'B nA nB hex'")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("decompose", help="canonical union/join/skew decomposition")
    p.add_argument("--line", required=True, help="two-part line 'B nA nB hex'")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser(
        "find-hom",
        help="certified balanced biclique or co-biclique in a structured class",
    )
    p.add_argument("--class", dest="cls", choices=("p2p3", "s123"), required=True)
    p.add_argument("--line", required=True, help="two-part line 'B nA nB hex'")
    p.add_argument("--p", type=int, help="biclique order (p2p3)")
    p.add_argument("--q", type=int, help="co-biclique order (p2p3)")
    p.add_argument("--n", type=int, help="homogeneous order (s123)")
    p.set_defaults(handler=cmd_find_hom)

    p = sub.add_parser(
        "verify-lemma",
        help="exhaustively verify a structure lemma up to its cap",
        epilog=f"lemma ids: {lemma_list}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("lemma", metavar="lemma", help="a lemma id or 'all'")
    p.add_argument("--cap", type=int, default=None, help="override the per-lemma cap (8..10)")
    p.set_defaults(handler=cmd_verify_lemma)

    p = sub.add_parser(
        "girth-sample",
        help="random two-part graph with no short cycles, with certificate",
    )
    p.add_argument("--n", type=int, required=True, help="final vertices per part")
    p.add_argument("--k", type=int, required=True, help="forbid cycles of length <= k")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--samples", type=int, default=1, help="consecutive seeds starting at --seed")
    p.set_defaults(handler=cmd_girth_sample)

    p = sub.add_parser(
        "enumerate",
        help="isomorph-free members of a hereditary class by order",
        epilog=f"catalog names: {name_list}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--forbid", required=True, help=forbid_help)
    p.add_argument("--cap", type=int, default=None, help="max order (default 8)")
    p.add_argument("--max-omega", type=int, default=None, help="prune cliques above this")
    p.add_argument("--max-alpha", type=int, default=None, help="prune independent sets above this")
    p.add_argument("--bipartite", action="store_true", help="two-part grid enumeration")
    p.add_argument("--a", type=int, default=4, help="max part A size (bipartite)")
    p.add_argument("--b", type=int, default=4, help="max part B size (bipartite)")
    p.add_argument("--part-symmetric", action="store_true", help="dedup under part swap")
    p.add_argument("--list", action="store_true", help="include encoded graphs")
    p.set_defaults(handler=cmd_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not hasattr(args, "handler"):
            parser.print_help(sys.stderr)
            return 1
        payload, code = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (FormulaDomainError, LemmaError, RandomBipError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ClassViolationError as exc:
        print(f"error: input outside the class: {exc}", file=sys.stderr)
        return 1
    except WitnessVerificationError as exc:
        print(f"error: witness failed verification: {exc}", file=sys.stderr)
        return 2
    except StructureError as exc:
        print(f"error: structure guarantee failed: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    emit(payload, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())

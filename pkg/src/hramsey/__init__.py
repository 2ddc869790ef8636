"""Ramsey numbers, extremal witnesses, and structure in hereditary graph classes.

Core layers: bitmask graphs and codecs (graph), canonical forms (canon),
induced-subgraph machinery (subgraph), invariants, a small catalog,
isomorph-free enumeration with exact Ramsey search (exhaustive), closed
forms with verified witnesses (formulas, witnesses), structural
decompositions and homogeneous-set finders (structure, blocks,
decompose), exhaustively checked structure lemmas (lemmas), and a random
construction with certified girth (randbip).  The cli module exposes all
of it as subcommands.
"""

from .cache import ENGINE_VERSION
from .exhaustive import (
    RamseyResult,
    bipartite_ramsey_exact,
    enumerate_bipartite_grid,
    enumerate_class,
    ramsey_exact,
)
from .formulas import (
    crosscheck_cell,
    formula_ids,
    formula_value,
    witness_lower,
)
from .graph import BipartiteGraph, Graph, from_bip_line, from_graph6
from .lemmas import lemma_ids, verify_structure_lemma
from .randbip import RandomParams, count_short_cycles, sample_girth_construction
from .subgraph import ClassSpec, contains_induced, in_class

__version__ = ENGINE_VERSION

__all__ = [
    "ENGINE_VERSION",
    "BipartiteGraph",
    "ClassSpec",
    "Graph",
    "RamseyResult",
    "RandomParams",
    "bipartite_ramsey_exact",
    "contains_induced",
    "count_short_cycles",
    "crosscheck_cell",
    "enumerate_bipartite_grid",
    "enumerate_class",
    "formula_ids",
    "formula_value",
    "from_bip_line",
    "from_graph6",
    "in_class",
    "lemma_ids",
    "ramsey_exact",
    "sample_girth_construction",
    "verify_structure_lemma",
    "witness_lower",
]

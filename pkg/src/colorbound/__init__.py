"""Graph coloring toolkit for 3K1-free graphs: exact invariants, graph6 I/O,
isomorph-free enumeration, constructive max-degree coloring, Kempe-chain
recoloring, and an exhaustive bound-verification harness."""

from .brooks import BrooksExceptionError, brooks_color, classify_brooks_exception
from .canon import canonical_form, corpus_3k1_free, enumerate_triangle_free
from .chromatic import Coloring, chromatic_number, greedy_dsatur, is_proper, k_colorable
from .graph import Graph, Graph6Error, GraphError, build, from_graph6, to_graph6
from .harness import VerificationRecord, report, summarize, verify_corpus, verify_graph
from .invariants import (
    CliqueWitness,
    check_statement_I,
    find_triangle,
    is_3k1_free,
    max_clique,
    max_degree,
    max_degree_vertex_in_clique,
)
from .kempe import (
    ExtensionOutcome,
    KempeComponent,
    Move,
    SearchConfig,
    color_3k1_free,
    extend_coloring,
    free_colors,
    ij_path_between,
    kempe_component,
    kempe_swap,
    rule_unique_color_swap,
)

__all__ = [
    "BrooksExceptionError",
    "CliqueWitness",
    "Coloring",
    "ExtensionOutcome",
    "Graph",
    "Graph6Error",
    "GraphError",
    "KempeComponent",
    "Move",
    "SearchConfig",
    "VerificationRecord",
    "brooks_color",
    "build",
    "canonical_form",
    "check_statement_I",
    "chromatic_number",
    "classify_brooks_exception",
    "color_3k1_free",
    "corpus_3k1_free",
    "enumerate_triangle_free",
    "extend_coloring",
    "find_triangle",
    "free_colors",
    "from_graph6",
    "greedy_dsatur",
    "ij_path_between",
    "is_3k1_free",
    "is_proper",
    "k_colorable",
    "kempe_component",
    "kempe_swap",
    "max_clique",
    "max_degree",
    "max_degree_vertex_in_clique",
    "report",
    "rule_unique_color_swap",
    "summarize",
    "to_graph6",
    "verify_corpus",
    "verify_graph",
]

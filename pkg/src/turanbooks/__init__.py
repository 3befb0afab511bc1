"""Exact tools for book-free and odd-cycle-free extremal graph problems."""

__version__ = "0.1.0"

from .graph import (
    Graph,
    GraphFormatError,
    emit_dot,
    emit_edgelist,
    emit_graph6,
    parse_dot,
    parse_edgelist,
    parse_graph6,
)
from .canon import are_isomorphic, canonical_certificate, canonical_form, canonical_labeling
from .constructions import (
    FamilySpec,
    enumerate_g0_c3,
    enumerate_g1_b2,
    g0_c3,
    g1_b2,
    krr_graph,
    turan_dot_c3,
    turan_graph,
)
from .properties import (
    CutPartition,
    booksize,
    is_b_free,
    is_bipartite,
    is_k_colorable,
    max_cut_exact,
    odd_girth,
    shortest_odd_cycle,
)
from .search import SearchOutcome, SearchProblem, naive_oracle, solve
from .theorems import TheoremReport, verify_theorem
from .diagnostics import (
    EpsilonParams,
    containment_report,
    epsilon_ok,
    extremal_structure_report,
    intersection_lower_bound,
)

__all__ = [
    "Graph", "GraphFormatError", "emit_dot", "emit_edgelist", "emit_graph6",
    "parse_dot", "parse_edgelist", "parse_graph6",
    "are_isomorphic", "canonical_certificate", "canonical_form", "canonical_labeling",
    "FamilySpec", "enumerate_g0_c3", "enumerate_g1_b2", "g0_c3", "g1_b2",
    "krr_graph", "turan_dot_c3", "turan_graph",
    "CutPartition", "booksize", "is_b_free", "is_bipartite", "is_k_colorable",
    "max_cut_exact", "odd_girth", "shortest_odd_cycle",
    "SearchOutcome", "SearchProblem", "naive_oracle", "solve",
    "TheoremReport", "verify_theorem",
    "EpsilonParams", "containment_report", "epsilon_ok",
    "extremal_structure_report", "intersection_lower_bound",
]

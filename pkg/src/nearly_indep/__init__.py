"""Exact 1-nearly vertex independence numbers, good graphs and extremal checks."""

from .errors import CapacityError, DomainError, GuardError, NearlyIndepError, ParseError
from .families import FamilySpec, closed_form_alpha1, generate
from .formats import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .goodness import (
    GoodnessReport,
    JoinDecomposition,
    build_h_member,
    is_good_definitional,
    is_good_edge,
    is_good_structural,
    parse_recipe,
    sample_h_member,
)
from .graph_core import (
    Graph,
    closed_neighborhood,
    complement,
    connected_components,
    delete_vertices,
    induced_edge_count,
    join,
)
from .solver import AlphaResult, alpha0_exact, alpha1_exact, alpha_k, alpha_k_oracle, validate_witness
from .verify import TheoremReport, check_theorem, enumerate_labeled, is_isomorphic

__all__ = [
    "AlphaResult", "CapacityError", "DomainError", "FamilySpec", "GoodnessReport", "Graph",
    "GuardError", "JoinDecomposition", "NearlyIndepError", "ParseError", "TheoremReport",
    "alpha0_exact", "alpha1_exact", "alpha_k", "alpha_k_oracle", "build_h_member",
    "check_theorem", "closed_form_alpha1", "closed_neighborhood", "complement",
    "connected_components", "delete_vertices", "emit_edge_list", "emit_graph6",
    "enumerate_labeled", "generate", "induced_edge_count", "is_good_definitional",
    "is_good_edge", "is_good_structural", "is_isomorphic", "join", "parse_edge_list",
    "parse_graph6", "parse_recipe", "sample_h_member", "validate_witness",
]

"""Homomorphism bounds for K4-minor-free graphs of given odd-girth."""
from .bound import (NO, ODD_GIRTH_MISMATCH, YES, BoundVerdict, PartialDistanceGraph, all_k_good_property,
                    check_bound, complete_distance_graph, minimality_lint, no_certificate, verify_certificate,
                    verify_for_graph)
from .colouring import (EdgeColouring, RotationSystem, cayley_edge_labels, icosahedron_rotation,
                        induced_colouring, super_proper_search)
from .errors import (BudgetExceeded, CapExceeded, Disconnected, DomainError, GirthBoundError, GraphFormatError,
                     NotEmbedding, NotPartial2Tree, PreconditionViolated)
from .families import FamilySpec, generate, named
from .graph import INF, Graph, all_pairs_distances, iso_check, odd_girth, parse_graph, format_graph
from .sp import hom_search, hom_via_certificate, is_hom, is_k4_minor_free, random_sp_instance, two_tree_completion
from .triples import GoodTriple, enumerate_k_good, is_k_good

__all__ = [
    "all_k_good_property", "all_pairs_distances", "BoundVerdict", "BudgetExceeded", "CapExceeded",
    "cayley_edge_labels", "check_bound", "complete_distance_graph", "Disconnected", "DomainError",
    "EdgeColouring", "enumerate_k_good", "FamilySpec", "format_graph", "generate", "GirthBoundError",
    "GoodTriple", "Graph", "GraphFormatError", "hom_search", "hom_via_certificate", "icosahedron_rotation",
    "induced_colouring", "INF", "is_hom", "is_k4_minor_free", "is_k_good", "iso_check", "minimality_lint",
    "named", "NO", "no_certificate", "NotEmbedding", "NotPartial2Tree", "odd_girth", "ODD_GIRTH_MISMATCH",
    "parse_graph", "PartialDistanceGraph", "PreconditionViolated", "random_sp_instance", "RotationSystem",
    "super_proper_search", "two_tree_completion", "verify_certificate", "verify_for_graph", "YES",
]

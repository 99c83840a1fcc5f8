"""Graph polynomials, their complex zeros, and zero-free disc constants."""

from .bounds import BoundSolution, k_infinity, solve_kg
from .certify import Certificate, certify_chromatic_disc, certify_forest_disc, certify_girth_disc
from .genfun import (
    bcf_polynomial,
    chromatic_polynomial,
    double_rooted_tree_polynomial,
    enumerate_bcf,
    forest_polynomial,
    path_polynomial,
    rooted_tree_polynomial,
)
from .graph import EdgeOrdering, GraphError, LimitError, Multigraph
from .poly import IntPolynomial, RootSet, find_roots, whitney_transform

__all__ = [
    "BoundSolution", "Certificate", "EdgeOrdering", "GraphError", "IntPolynomial", "LimitError",
    "Multigraph", "RootSet", "bcf_polynomial", "certify_chromatic_disc", "certify_forest_disc",
    "certify_girth_disc", "chromatic_polynomial", "double_rooted_tree_polynomial", "enumerate_bcf",
    "find_roots", "forest_polynomial", "k_infinity", "path_polynomial", "rooted_tree_polynomial",
    "solve_kg", "whitney_transform",
]

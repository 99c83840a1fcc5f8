"""Graph generating functions: chromatic, BCF forest, forest, tree and path."""

from .bcf import (
    BcfFamily,
    RatioSample,
    bcf_polynomial,
    bcf_polynomial_recursive,
    enumerate_bcf,
    induced_bcf_polynomial,
    is_bcf,
    ratio_R,
    recursion_rhs,
)
from .chromatic import chromatic_polynomial, chromatic_subgraph_expansion
from .forests import forest_polynomial, forest_polynomial_bruteforce, iter_paths, path_polynomial
from .trees import derivcount_lhs, double_rooted_tree_polynomial, iter_trees_containing, rooted_tree_polynomial

__all__ = [
    "BcfFamily",
    "RatioSample",
    "bcf_polynomial",
    "bcf_polynomial_recursive",
    "chromatic_polynomial",
    "chromatic_subgraph_expansion",
    "derivcount_lhs",
    "double_rooted_tree_polynomial",
    "enumerate_bcf",
    "forest_polynomial",
    "forest_polynomial_bruteforce",
    "induced_bcf_polynomial",
    "is_bcf",
    "iter_paths",
    "iter_trees_containing",
    "path_polynomial",
    "ratio_R",
    "recursion_rhs",
    "rooted_tree_polynomial",
]

"""Betweenness index and exact/greedy general position search"""

from .search import (
    LOWER_BOUND_ONLY,
    OPTIMAL,
    SolveOptions,
    SolveResult,
    branching_order,
    exhaustive_max_general_position,
    greedy_gp_lower_bound,
    max_general_position,
)
from .triples import BetweennessIndex, enumerate_collinear_triples

__all__ = [
    "LOWER_BOUND_ONLY",
    "OPTIMAL",
    "BetweennessIndex",
    "SolveOptions",
    "SolveResult",
    "branching_order",
    "enumerate_collinear_triples",
    "exhaustive_max_general_position",
    "greedy_gp_lower_bound",
    "max_general_position",
]

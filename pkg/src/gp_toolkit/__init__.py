"""
GP Toolkit
Generators, verifiers and exact search for general position sets in graphs
"""

__version__ = "0.1.0"
__author__ = "GP Toolkit Contributors"

from .core.distances import all_pairs_distances
from .geodesy.betweenness import verify_general_position
from .solver.search import SolveOptions, max_general_position

__all__ = [
    "SolveOptions",
    "all_pairs_distances",
    "max_general_position",
    "verify_general_position",
]

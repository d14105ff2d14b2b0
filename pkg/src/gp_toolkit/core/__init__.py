"""Graph representation, distances, isometry checks and clique number"""

from .cliques import clique_number
from .distances import DistanceMatrix, EmbeddingReport, all_pairs_distances, is_isometric_embedding
from .graph import Graph, Labeling, build_graph, connected_components
from .io import dump_graph, graph_from_edge_list, graph_from_json, graph_to_json, load_graph

__all__ = [
    "DistanceMatrix",
    "EmbeddingReport",
    "Graph",
    "Labeling",
    "all_pairs_distances",
    "build_graph",
    "clique_number",
    "connected_components",
    "dump_graph",
    "graph_from_edge_list",
    "graph_from_json",
    "graph_to_json",
    "is_isometric_embedding",
    "load_graph",
]

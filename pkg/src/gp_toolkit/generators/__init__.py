"""Graph generators: primitives, products, lattices, butterfly and Benes networks"""

from .lattices import (
    LATTICE_KINDS,
    LatticeSpec,
    attach_labeling,
    lattice,
    lattice_vertex,
    natural_labeling,
    primitive,
    product,
    rotated_labeling,
)
from .networks import (
    ButterflyNode,
    benes,
    benes_half_embedding,
    benes_node,
    benes_terminals,
    benes_vertex,
    butterfly,
    butterfly_node,
)

__all__ = [
    "LATTICE_KINDS",
    "ButterflyNode",
    "LatticeSpec",
    "attach_labeling",
    "benes",
    "benes_half_embedding",
    "benes_node",
    "benes_terminals",
    "benes_vertex",
    "butterfly",
    "butterfly_node",
    "lattice",
    "lattice_vertex",
    "natural_labeling",
    "primitive",
    "product",
    "rotated_labeling",
]

"""
Exact clique number by branch and bound with a greedy-coloring bound.
"""

from typing import List, Tuple

from ..constants import CLIQUE_VERTEX_CAP
from ..exceptions import SizeLimitError
from .graph import Graph


def _color_sort(candidates: int, masks: List[int]) -> Tuple[List[int], List[int]]:
    """Greedy coloring of ``candidates``; returns vertices and their color numbers"""
    order: List[int] = []
    colors: List[int] = []
    rest = candidates
    color = 0
    while rest:
        color += 1
        available = rest
        while available:
            low = available & -available
            v = low.bit_length() - 1
            available &= ~low
            available &= ~masks[v]
            rest &= ~low
            order.append(v)
            colors.append(color)
    return order, colors


def clique_number(g: Graph) -> int:
    """
    Exact size of a largest complete subgraph

    Args:
        g: Graph with at most CLIQUE_VERTEX_CAP vertices

    Returns:
        omega(g)

    Raises:
        SizeLimitError: If the graph is too large for exact search
    """
    if g.n > CLIQUE_VERTEX_CAP:
        raise SizeLimitError(
            f"clique_number is exact only up to {CLIQUE_VERTEX_CAP} vertices, got {g.n}"
        )
    masks = g.neighbor_masks()
    best = 0

    def expand(size: int, candidates: int) -> None:
        nonlocal best
        order, colors = _color_sort(candidates, masks)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best:
                return
            v = order[i]
            narrowed = candidates & masks[v]
            if narrowed:
                expand(size + 1, narrowed)
            elif size + 1 > best:
                best = size + 1
            candidates &= ~(1 << v)

    expand(0, (1 << g.n) - 1)
    return best

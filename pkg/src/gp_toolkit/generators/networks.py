"""
Butterfly and Benes networks.

Columns are r-bit words with bit positions 1..r counted from the most
significant bit. Butterfly levels run 1..r+1 and the gap between levels i and
i+1 flips bit i. Benes levels run 0..2r: the gap between levels i-1 and i
(i <= r) flips bit i and the gap between levels r+j and r+j+1 flips bit r-j,
so level r is the shared middle column and level l mirrors level 2r-l.
"""

from dataclasses import dataclass
from typing import List, Tuple

from ..core.graph import Graph, Labeling, build_graph
from ..exceptions import GraphError


@dataclass(frozen=True)
class ButterflyNode:
    """Node <w, i>: column word w and level i"""

    column: int
    level: int

    def word(self, r: int) -> str:
        return format(self.column, f"0{r}b")


def bit_mask(r: int, position: int) -> int:
    """Mask of bit ``position`` (1 = most significant) in an r-bit word"""
    return 1 << (r - position)


def _check_dimension(r: int) -> None:
    if r < 1:
        raise GraphError(f"Network dimension must be at least 1, got {r}")


def butterfly(r: int) -> Graph:
    """
    r-dim butterfly with 2^r (r + 1) nodes; node <w, i> has id (i - 1) * 2^r + w

    Raises:
        GraphError: If r < 1
    """
    _check_dimension(r)
    width = 1 << r
    edges: List[Tuple[int, int]] = []
    for level in range(1, r + 1):
        mask = bit_mask(r, level)
        base, upper = (level - 1) * width, level * width
        for w in range(width):
            edges.append((base + w, upper + w))
            edges.append((base + w, upper + (w ^ mask)))
    labels = Labeling(2, tuple((w, level) for level in range(1, r + 2) for w in range(width)))
    return build_graph(width * (r + 1), edges, name=f"BF({r})", labels=labels)


def butterfly_node(r: int, v: int) -> ButterflyNode:
    width = 1 << r
    return ButterflyNode(column=v % width, level=v // width + 1)


def benes(r: int) -> Graph:
    """
    r-dim Benes network with 2^r (2r + 1) nodes; node <w, l> has id l * 2^r + w

    Raises:
        GraphError: If r < 1
    """
    _check_dimension(r)
    width = 1 << r
    edges: List[Tuple[int, int]] = []
    for level in range(1, 2 * r + 1):
        position = level if level <= r else 2 * r + 1 - level
        mask = bit_mask(r, position)
        base, upper = (level - 1) * width, level * width
        for w in range(width):
            edges.append((base + w, upper + w))
            edges.append((base + w, upper + (w ^ mask)))
    labels = Labeling(2, tuple((w, level) for level in range(2 * r + 1) for w in range(width)))
    return build_graph(width * (2 * r + 1), edges, name=f"BN({r})", labels=labels)


def benes_node(r: int, v: int) -> ButterflyNode:
    width = 1 << r
    return ButterflyNode(column=v % width, level=v // width)


def benes_vertex(r: int, column: int, level: int) -> int:
    width = 1 << r
    if not (0 <= column < width and 0 <= level <= 2 * r):
        raise GraphError(f"<{column}, {level}> is not a node of BN({r})")
    return level * width + column


def benes_terminals(r: int) -> List[int]:
    """Ids of the degree-2 nodes: levels 0 and 2r"""
    _check_dimension(r)
    width = 1 << r
    return list(range(width)) + [2 * r * width + w for w in range(width)]


def benes_half_embedding(r: int, half: int) -> List[int]:
    """
    Map BN(r-1) onto the half of BN(r) minus its terminals whose columns have
    most significant bit ``half``: <c, l> -> <half.c, l + 1>

    Returns:
        List indexed by BN(r-1) vertex id giving the BN(r) vertex id
    """
    if r < 2:
        raise GraphError("BN(r) splits into two copies of BN(r-1) only for r >= 2")
    if half not in (0, 1):
        raise GraphError(f"half must be 0 or 1, got {half}")
    sub_width, width = 1 << (r - 1), 1 << r
    prefix = half << (r - 1)
    return [
        (level + 1) * width + (prefix | column)
        for level in range(2 * (r - 1) + 1)
        for column in range(sub_width)
    ]

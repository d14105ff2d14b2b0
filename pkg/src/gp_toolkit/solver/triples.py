"""
Collinear-triple store as pair-indexed bitsets.

For every pair (a, c) the index keeps two bitsets over the vertices:
``between`` (x strictly between a and c) and ``line`` (x such that {a, x, c}
lies on a common geodesic in any order). Adding x to a set containing a and c
is forbidden exactly when bit x of line[a][c] is set.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..constants import SOLVER_VERTEX_CAP
from ..core.distances import DistanceMatrix
from ..exceptions import SizeLimitError
from ..utils.logging import get_logger

logger = get_logger(__name__)


def _pack(rows: np.ndarray) -> List[int]:
    packed = np.packbits(rows, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _masks_from(dist: np.ndarray, a: int) -> Tuple[List[int], List[int]]:
    """between and line bitsets of every pair (a, c), rows indexed by c"""
    n = dist.shape[0]
    row = dist[a]
    d_ac = row[:, None]
    d_ax = row[None, :]
    # rows c, columns x
    x_between = d_ac == d_ax + dist
    a_between = dist == d_ax + d_ac
    c_between = d_ax == d_ac + dist

    keep = np.ones((n, n), dtype=bool)
    np.fill_diagonal(keep, False)
    keep[:, a] = False
    keep[a, :] = False
    between = x_between & keep
    line = (x_between | a_between | c_between) & keep
    return _pack(between), _pack(line)


@dataclass(frozen=True)
class BetweennessIndex:
    """Pair-indexed between-sets and collinear completions"""

    n: int
    between: Tuple[Tuple[int, ...], ...]
    line: Tuple[Tuple[int, ...], ...]

    def between_set(self, a: int, c: int) -> List[int]:
        """Vertices strictly between a and c, ascending"""
        mask = self.between[a][c]
        return [x for x in range(self.n) if mask >> x & 1]

    def forbidden(self, a: int, b: int, c: int) -> bool:
        """Whether {a, b, c} lies on a common geodesic"""
        return bool(self.line[a][c] >> b & 1)

    def triple_count(self) -> int:
        """Number of unordered collinear triples"""
        total = sum(
            self.line[a][c].bit_count() for a in range(self.n) for c in range(a + 1, self.n)
        )
        return total // 3


def build_index(dist: np.ndarray, threads: int = 1) -> BetweennessIndex:
    """
    Build the index from a raw distance array

    Rows for source a are computed independently; with ``threads`` > 1 they
    are spread over a pool and reassembled in source order.
    """
    dist = np.asarray(dist, dtype=np.int32)
    n = dist.shape[0]
    if threads > 1 and n > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda a: _masks_from(dist, a), range(n)))
    else:
        parts = [_masks_from(dist, a) for a in range(n)]
    return BetweennessIndex(
        n=n,
        between=tuple(tuple(b) for b, _ in parts),
        line=tuple(tuple(line) for _, line in parts),
    )


def enumerate_collinear_triples(
    d: DistanceMatrix,
    threads: int = 1,
    vertex_cap: int = SOLVER_VERTEX_CAP,
    order: Optional[Sequence[int]] = None,
) -> BetweennessIndex:
    """
    Betweenness index of a graph

    Args:
        d: Distances
        threads: Worker threads for the per-source rows
        vertex_cap: Largest vertex count accepted
        order: Optional relabeling; index position i then stands for vertex order[i]

    Returns:
        BetweennessIndex

    Raises:
        SizeLimitError: If the graph exceeds ``vertex_cap``
    """
    if d.n > vertex_cap:
        raise SizeLimitError(f"Triple store is capped at {vertex_cap} vertices, got {d.n}")
    dist = d.d if order is None else d.submatrix(order)
    index = build_index(dist, threads=threads)
    logger.debug(f"Built betweenness index on {d.n} vertices")
    return index

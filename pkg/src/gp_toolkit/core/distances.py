"""
All-pairs hop distances and the isometric-embedding check.

DistanceMatrix is the single source of geodesic truth for every other module.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.sparse.csgraph import shortest_path

from ..constants import MAX_DIAMETER
from ..exceptions import EmbeddingError, GraphError
from ..utils.logging import get_logger
from .graph import Graph

logger = get_logger(__name__)

VertexMap = Union[Sequence[int], Mapping[int, int]]


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Read-only n x n int16 hop-distance matrix"""

    n: int
    d: np.ndarray

    def __post_init__(self) -> None:
        if self.d.shape != (self.n, self.n):
            raise GraphError(f"Distance matrix shape {self.d.shape} does not match n={self.n}")
        self.d.setflags(write=False)

    def __call__(self, u: int, v: int) -> int:
        return int(self.d[u, v])

    @property
    def diameter(self) -> int:
        return int(self.d.max()) if self.n else 0

    def row(self, v: int) -> np.ndarray:
        return self.d[v]

    def submatrix(self, vertices: Sequence[int]) -> np.ndarray:
        idx = np.asarray(vertices, dtype=np.intp)
        return self.d[np.ix_(idx, idx)]


@dataclass(frozen=True)
class EmbeddingReport:
    """Outcome of an isometry check; witness is the first violating pair"""

    ok: bool
    witness: Optional[Tuple[int, int]] = None
    sub_distance: Optional[int] = None
    host_distance: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "witness": list(self.witness) if self.witness else None,
            "sub_distance": self.sub_distance,
            "host_distance": self.host_distance,
        }


def _bfs_rows(g: Graph, sources: Sequence[int]) -> np.ndarray:
    return shortest_path(
        g.to_csr(), method="D", directed=False, unweighted=True, indices=list(sources)
    )


def all_pairs_distances(g: Graph, threads: int = 1) -> DistanceMatrix:
    """
    BFS hop distance for every pair of vertices

    Sources are split into contiguous blocks when ``threads`` > 1; blocks are
    stacked in source order so the result does not depend on the thread count.

    Args:
        g: Connected graph
        threads: Worker threads

    Returns:
        DistanceMatrix

    Raises:
        GraphError: If the graph is disconnected or its diameter overflows int16
    """
    sources = list(range(g.n))
    if threads > 1 and g.n > 1:
        size = -(-g.n // threads)
        blocks = [sources[i : i + size] for i in range(0, g.n, size)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda block: _bfs_rows(g, block), blocks))
        raw = np.vstack(parts)
    else:
        raw = _bfs_rows(g, sources)

    if not np.isfinite(raw).all():
        raise GraphError(f"Graph {g.name!r} is disconnected; distances are undefined")
    if raw.max(initial=0) > MAX_DIAMETER:
        raise GraphError(f"Diameter of {g.name!r} exceeds {MAX_DIAMETER}")

    logger.debug(f"Computed distances for {g.name!r} ({g.n} vertices)")
    return DistanceMatrix(n=g.n, d=raw.astype(np.int16))


def _normalize_map(mapping: VertexMap, size: int) -> List[int]:
    if isinstance(mapping, Mapping):
        missing = [x for x in range(size) if x not in mapping]
        if missing:
            raise EmbeddingError(f"Vertex map does not cover sub vertex {missing[0]}")
        return [int(mapping[x]) for x in range(size)]
    image = [int(v) for v in mapping]
    if len(image) != size:
        raise EmbeddingError(f"Vertex map has {len(image)} entries, sub graph has {size} vertices")
    return image


def is_isometric_embedding(
    host: Graph,
    host_d: DistanceMatrix,
    sub: Graph,
    sub_d: DistanceMatrix,
    mapping: VertexMap,
) -> EmbeddingReport:
    """
    Check that ``mapping`` carries sub distances onto host distances

    Args:
        host: Host graph
        host_d: Host distances
        sub: Embedded graph
        sub_d: Embedded graph distances
        mapping: Image of each sub vertex (sequence indexed by sub id, or dict)

    Returns:
        EmbeddingReport with the lexicographically first violating pair

    Raises:
        EmbeddingError: If the map is not injective or drops an edge
    """
    image = _normalize_map(mapping, sub.n)
    for v in image:
        if not 0 <= v < host.n:
            raise EmbeddingError(f"Image vertex {v} outside host range [0, {host.n})")
    if len(set(image)) != len(image):
        raise EmbeddingError("Vertex map is not injective")
    for x, y in sub.edges():
        if not host.has_edge(image[x], image[y]):
            raise EmbeddingError(
                f"Edge ({x}, {y}) maps to non-edge ({image[x]}, {image[y]})"
            )

    mismatch = np.triu(host_d.submatrix(image) != sub_d.d, k=1)
    hits = np.argwhere(mismatch)
    if hits.size == 0:
        return EmbeddingReport(ok=True)
    x, y = (int(c) for c in hits[0])
    return EmbeddingReport(
        ok=False,
        witness=(x, y),
        sub_distance=sub_d(x, y),
        host_distance=host_d(image[x], image[y]),
    )

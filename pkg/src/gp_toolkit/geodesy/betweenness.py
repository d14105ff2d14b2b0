"""
Geodesic betweenness and general position certificates.

Vertex b lies between a and c when d(a, c) = d(a, b) + d(b, c); three
vertices lie on a common geodesic when one of them is between the other two.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

import numpy as np

from ..core.distances import DistanceMatrix
from ..exceptions import GraphError
from ..utils.logging import get_logger

logger = get_logger(__name__)

GENERAL_POSITION = "general_position"
VIOLATED = "violated"


@dataclass(frozen=True)
class GpCertificate:
    """
    Verdict on a vertex set

    violating_triple is (a, b, c) with b between a and c; separation_k is the
    k with k <= d(x, y) < 2k over all distinct pairs, when one exists.
    """

    verdict: str
    violating_triple: Optional[Tuple[int, int, int]] = None
    separation_k: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.verdict == GENERAL_POSITION

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "violating_triple": list(self.violating_triple) if self.violating_triple else None,
            "separation_k": self.separation_k,
        }


def _check_vertices(d: DistanceMatrix, vertices: Iterable[int]) -> List[int]:
    kept = sorted({int(v) for v in vertices})
    for v in kept:
        if not 0 <= v < d.n:
            raise GraphError(f"Vertex {v} out of range [0, {d.n})")
    return kept


def is_between(d: DistanceMatrix, a: int, b: int, c: int) -> bool:
    """True when b is strictly between a and c"""
    return b != a and b != c and d(a, c) == d(a, b) + d(b, c)


def lies_on_common_geodesic(d: DistanceMatrix, a: int, b: int, c: int) -> bool:
    """
    Whether some ordering (x, y, z) of the triple has d(x, z) = d(x, y) + d(y, z)

    Raises:
        GraphError: If the vertices are not pairwise distinct or out of range
    """
    if len({a, b, c}) != 3:
        raise GraphError(f"Triple ({a}, {b}, {c}) is not pairwise distinct")
    _check_vertices(d, (a, b, c))
    ab, bc, ac = d(a, b), d(b, c), d(a, c)
    return ac == ab + bc or ab == ac + bc or bc == ab + ac


def _orient(d: DistanceMatrix, p: int, q: int, r: int) -> Tuple[int, int, int]:
    """Write a collinear triple as (end, middle, end)"""
    if is_between(d, p, q, r):
        return (p, q, r)
    if is_between(d, q, p, r):
        return (q, p, r)
    return (p, r, q)


def first_collinear_triple(
    d: DistanceMatrix, vertices: List[int]
) -> Optional[Tuple[int, int, int]]:
    """
    Lexicographically first collinear triple (p < q < r) of sorted ``vertices``

    Scans one leading index at a time over the numpy submatrix.
    """
    m = len(vertices)
    if m < 3:
        return None
    sub = d.submatrix(vertices).astype(np.int32)
    upper = np.triu(np.ones((m, m), dtype=bool), k=1)
    for i in range(m - 2):
        row = sub[i]
        # pairs (j, k) with i < j < k
        dij = row[:, None]
        dik = row[None, :]
        djk = sub
        collinear = (dik == dij + djk) | (dij == dik + djk) | (djk == dij + dik)
        mask = collinear & upper
        mask[: i + 1, :] = False
        hits = np.argwhere(mask)
        if hits.size:
            j, k = (int(x) for x in hits[0])
            return vertices[i], vertices[j], vertices[k]
    return None


def separation_witness(d: DistanceMatrix, s: Iterable[int]) -> Optional[int]:
    """
    Smallest k with k <= d(x, y) < 2k for all distinct x, y in s

    Such a set is always in general position: a middle vertex would force
    d(x, z) >= 2k.

    Returns:
        k, or None when no k fits

    Raises:
        GraphError: If s has fewer than two vertices or a vertex is out of range
    """
    vertices = _check_vertices(d, s)
    if len(vertices) < 2:
        raise GraphError("Separation needs at least two vertices")
    sub = d.submatrix(vertices)
    pairs = sub[np.triu_indices(len(vertices), k=1)]
    low, high = int(pairs.min()), int(pairs.max())
    k = high // 2 + 1
    return k if k <= low else None


def verify_general_position(d: DistanceMatrix, s: Iterable[int]) -> GpCertificate:
    """
    Check that no three vertices of s lie on a common geodesic

    Args:
        d: Distances of the host graph
        s: Vertex set (duplicates ignored)

    Returns:
        GpCertificate with the lexicographically first violating triple, or
        with the separation k when the set is in general position

    Raises:
        GraphError: If s is empty or has a vertex out of range
    """
    vertices = _check_vertices(d, s)
    if not vertices:
        raise GraphError("Cannot verify an empty vertex set")

    triple = first_collinear_triple(d, vertices)
    if triple is not None:
        oriented = _orient(d, *triple)
        logger.debug(f"Set of {len(vertices)} vertices violated by {oriented}")
        return GpCertificate(verdict=VIOLATED, violating_triple=oriented)

    k = separation_witness(d, vertices) if len(vertices) >= 2 else None
    return GpCertificate(verdict=GENERAL_POSITION, separation_k=k)

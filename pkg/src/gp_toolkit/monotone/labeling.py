"""
Monotone-geodesic labeling checker.

A labeling into Z^2 is monotone-geodesic when every vertex triple whose labels
form a monotone sequence, in some order, lies on a common geodesic. Graphs with
such a labeling have no general position set of size 5 or more.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..constants import LABELING_VERTEX_CAP
from ..core.distances import DistanceMatrix
from ..core.graph import Graph, Labeling
from ..exceptions import LabelingError, SizeLimitError
from ..utils.logging import get_logger

logger = get_logger(__name__)

MONOTONE_GEODESIC = "monotone_geodesic"
VIOLATED = "violated"


@dataclass(frozen=True)
class LabelingCertificate:
    """Verdict plus the first label-monotone triple that is not collinear"""

    verdict: str
    counterexample: Optional[Tuple[int, int, int]] = None
    labels: Optional[Tuple[Tuple[int, ...], ...]] = None

    @property
    def ok(self) -> bool:
        return self.verdict == MONOTONE_GEODESIC

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "counterexample": list(self.counterexample) if self.counterexample else None,
            "labels": [list(p) for p in self.labels] if self.labels else None,
        }


def _inside(m, a, b):
    return (np.minimum(a, b) <= m) & (m <= np.maximum(a, b))


def check_monotone_triple(p: Sequence[int], q: Sequence[int], r: Sequence[int]) -> bool:
    """
    True iff some ordering of the three points is a monotone sequence

    Equivalently one point lies, coordinate by coordinate, within the closed
    range spanned by the other two.
    """
    for m, a, b in ((p, q, r), (q, p, r), (r, p, q)):
        if all(min(x, z) <= y <= max(x, z) for y, x, z in zip(m, a, b)):
            return True
    return False


def check_monotone_geodesic_labeling(
    g: Graph,
    d: DistanceMatrix,
    labeling: Optional[Labeling] = None,
    vertex_cap: int = LABELING_VERTEX_CAP,
) -> LabelingCertificate:
    """
    Scan every vertex triple for a label-monotone, non-collinear one

    Args:
        g: Graph
        d: Its distances
        labeling: Labeling to check (defaults to the graph's own labels)
        vertex_cap: Largest graph accepted for the cubic scan

    Returns:
        LabelingCertificate; the counterexample is the lexicographically first
        violating triple of vertex ids

    Raises:
        LabelingError: If there is no labeling, it is not 2-dimensional or does
            not cover the graph
        SizeLimitError: If the graph exceeds ``vertex_cap``
    """
    labeling = labeling if labeling is not None else g.labels
    if labeling is None:
        raise LabelingError(f"Graph {g.name!r} carries no labeling")
    if labeling.dim != 2:
        raise LabelingError(f"Monotone-geodesic labelings are 2-dimensional, got {labeling.dim}")
    if len(labeling) != g.n:
        raise LabelingError(f"Labeling covers {len(labeling)} vertices, graph has {g.n}")
    if g.n > vertex_cap:
        raise SizeLimitError(f"Labeling check is capped at {vertex_cap} vertices, got {g.n}")

    n = g.n
    coords = np.asarray(labeling.coords, dtype=np.int64).reshape(n, 2)
    xs, ys = coords[:, 0], coords[:, 1]
    dist = d.d.astype(np.int32)
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)

    for i in range(n - 2):
        # (j, k) grid for the triple (i, j, k)
        xi, yi = xs[i], ys[i]
        xj, yj = xs[:, None], ys[:, None]
        xk, yk = xs[None, :], ys[None, :]
        monotone = (
            (_inside(xj, xi, xk) & _inside(yj, yi, yk))
            | (_inside(xi, xj, xk) & _inside(yi, yj, yk))
            | (_inside(xk, xi, xj) & _inside(yk, yi, yj))
        )
        dij, dik, djk = dist[i][:, None], dist[i][None, :], dist
        collinear = (dik == dij + djk) | (dij == dik + djk) | (djk == dij + dik)
        mask = monotone & ~collinear & upper
        mask[: i + 1, :] = False
        hits = np.argwhere(mask)
        if hits.size:
            j, k = (int(x) for x in hits[0])
            triple = (i, j, k)
            logger.debug(f"Labeling of {g.name!r} violated at {triple}")
            return LabelingCertificate(
                verdict=VIOLATED,
                counterexample=triple,
                labels=tuple(labeling[v] for v in triple),
            )
    return LabelingCertificate(verdict=MONOTONE_GEODESIC)

"""
Isometric path covers and the cover-based upper bound on general position sets.

A general position set containing v meets every geodesic from v in at most one
further vertex, so any cover of V(G) by geodesics starting at v bounds such a
set by (number of paths) + 1.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..constants import EXHAUSTIVE_COVER_CAP
from ..core.distances import DistanceMatrix
from ..core.graph import Graph
from ..exceptions import CoverError, GraphError, SizeLimitError
from ..generators.networks import benes_vertex
from ..utils.logging import get_logger

logger = get_logger(__name__)

COVER_CONDITIONAL = "cover_conditional"
COVER_GLOBAL = "cover_global"

Path = Tuple[int, ...]


@dataclass(frozen=True)
class IsometricPathCover:
    """Geodesics all starting at ``root`` whose vertices cover the graph"""

    root: int
    paths: Tuple[Path, ...]

    @property
    def size(self) -> int:
        return len(self.paths)

    def covered(self) -> set:
        return {v for path in self.paths for v in path}

    def to_dict(self) -> dict:
        return {"root": self.root, "size": self.size, "paths": [list(p) for p in self.paths]}


@dataclass(frozen=True)
class BoundReport:
    """Upper bound on gp; cover_conditional only bounds sets containing ``root``"""

    kind: str
    value: int
    root: Optional[int] = None
    cover_size: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value,
            "root": self.root,
            "cover_size": self.cover_size,
        }


def _check_root(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"Root {v} out of range [0, {g.n})")


def _layers(g: Graph, d: DistanceMatrix, v: int) -> List[int]:
    """Vertices ordered by distance from v, then id"""
    row = d.row(v)
    return sorted(range(g.n), key=lambda u: (int(row[u]), u))


def _best_path(g: Graph, d: DistanceMatrix, v: int, uncovered: set) -> Tuple[int, Path]:
    """
    Geodesic from v with the most uncovered vertices

    Ties go to the smallest endpoint, then to the lexicographically smallest path.
    """
    row = d.row(v)
    order = _layers(g, d, v)
    gain = {u: 1 if u in uncovered else 0 for u in range(g.n)}

    best: Dict[int, int] = {v: gain[v]}
    for u in order[1:]:
        best[u] = gain[u] + max(best[p] for p in g.neighbors(u) if row[p] == row[u] - 1)
    top = max(best.values())
    end = min(u for u, value in best.items() if value == top)

    # suffix gains inside the interval between v and end
    span = int(d(v, end))
    suffix: Dict[int, int] = {end: 0}
    for u in reversed(order):
        if u == end or row[u] >= span or int(row[u]) + d(u, end) != span:
            continue
        suffix[u] = max(
            gain[y] + suffix[y]
            for y in g.neighbors(u)
            if y in suffix and row[y] == row[u] + 1
        )

    path = [v]
    while path[-1] != end:
        x = path[-1]
        path.append(
            min(
                y
                for y in g.neighbors(x)
                if y in suffix and row[y] == row[x] + 1 and gain[y] + suffix[y] == suffix[x]
            )
        )
    return top, tuple(path)


def greedy_isometric_cover_from(g: Graph, d: DistanceMatrix, v: int) -> IsometricPathCover:
    """
    Cover V(G) by geodesics from v, each time taking the one covering most new vertices

    The result bounds ip(v, G) from above; it need not be minimum.
    """
    _check_root(g, v)
    uncovered = set(range(g.n)) - {v}
    paths: List[Path] = []
    while uncovered:
        _, path = _best_path(g, d, v, uncovered)
        paths.append(path)
        uncovered.difference_update(path)
    if not paths:
        paths.append((v,))
    logger.debug(f"Greedy cover of {g.name!r} from {v}: {len(paths)} paths")
    return IsometricPathCover(root=v, paths=tuple(paths))


def verify_isometric_cover(g: Graph, d: DistanceMatrix, cover: IsometricPathCover) -> bool:
    """True iff every path is a geodesic from the root and the paths cover V(G)"""
    if not 0 <= cover.root < g.n or not cover.paths:
        return False
    for path in cover.paths:
        if not path or path[0] != cover.root:
            return False
        if any(not 0 <= u < g.n for u in path):
            return False
        if any(not g.has_edge(a, b) for a, b in zip(path, path[1:])):
            return False
        if len(path) - 1 != d(path[0], path[-1]):
            return False
    return cover.covered() == set(range(g.n))


def _geodesic_masks(g: Graph, d: DistanceMatrix, v: int) -> List[int]:
    """Bitsets of all maximal geodesics from v"""
    row = d.row(v)
    masks = set()
    stack = [(v, 1 << v)]
    while stack:
        x, mask = stack.pop()
        nxt = [y for y in g.neighbors(x) if row[y] == row[x] + 1]
        if not nxt:
            masks.add(mask)
        for y in nxt:
            stack.append((y, mask | (1 << y)))
    return sorted(masks)


def min_isometric_cover_size(g: Graph, d: DistanceMatrix, v: int) -> int:
    """
    Exact ip(v, G) by breadth-first search over covered-vertex sets

    Every geodesic from v extends to a maximal one, so only maximal geodesics
    are tried.

    Raises:
        SizeLimitError: Above EXHAUSTIVE_COVER_CAP vertices
    """
    _check_root(g, v)
    if g.n > EXHAUSTIVE_COVER_CAP:
        raise SizeLimitError(
            f"Exact cover size is limited to {EXHAUSTIVE_COVER_CAP} vertices, got {g.n}"
        )
    full = (1 << g.n) - 1
    masks = _geodesic_masks(g, d, v)
    frontier = {1 << v}
    for size in range(1, g.n + 1):
        frontier = {state | mask for state in frontier for mask in masks}
        if full in frontier:
            return size
    raise CoverError(f"No geodesic cover from {v} found")


def _benes_cover_level0(r: int, a: int) -> List[List[Tuple[int, int]]]:
    """Paths of (column, level) pairs from <a, 0> to every other terminal of BN(r)"""
    if r == 1:
        b = a ^ 1
        return [
            [(a, 0), (a, 1), (a, 2)],
            [(a, 0), (b, 1), (b, 2)],
            [(a, 0), (a, 1), (b, 0)],
        ]

    msb = 1 << (r - 1)
    last = 2 * r
    paths: List[List[Tuple[int, int]]] = []
    for start in (a, a ^ msb):
        prefix = start & msb
        for sub_path in _benes_cover_level0(r - 1, start & (msb - 1)):
            lifted = [(prefix | c, level + 1) for c, level in sub_path]
            end_column, end_level = lifted[-1]
            tail = (end_column, 0) if end_level == 1 else (end_column, last)
            paths.append([(a, 0)] + lifted + [tail])
    paths.append([(a, 0), (a, 1), (a ^ msb, 0)])
    return paths


def benes_cover(r: int, w: int) -> IsometricPathCover:
    """
    Recursive cover of BN(r) from the degree-2 vertex w with 2^(r+1) - 1 geodesics

    Each path ends at a different degree-2 vertex. For r >= 2 the covers of
    the two BN(r-1) halves, rooted at w's neighbors, are lifted and extended
    one level outward along the straight edge.

    Raises:
        CoverError: If w is not a degree-2 vertex of BN(r)
    """
    if r < 1:
        raise CoverError(f"Benes dimension must be at least 1, got {r}")
    width = 1 << r
    column, level = w % width, w // width
    if not 0 <= w < width * (2 * r + 1) or level not in (0, 2 * r):
        raise CoverError(f"Vertex {w} is not a degree-2 vertex of BN({r})")

    raw = _benes_cover_level0(r, column)
    if level == 2 * r:
        raw = [[(c, 2 * r - lv) for c, lv in path] for path in raw]
    paths = tuple(tuple(benes_vertex(r, c, lv) for c, lv in path) for path in raw)
    return IsometricPathCover(root=w, paths=paths)


def gp_upper_bound(
    g: Graph,
    d: DistanceMatrix,
    root: Optional[int] = None,
    cover: Optional[IsometricPathCover] = None,
) -> BoundReport:
    """
    Cover-based upper bound

    Args:
        g: Graph
        d: Its distances
        root: Bound sets containing this vertex (greedy cover from it)
        cover: Use this cover instead; bounds sets containing ``cover.root``

    Returns:
        cover_conditional report when ``root`` or ``cover`` is given, otherwise
        cover_global: the maximum conditional bound over all roots

    Raises:
        CoverError: If the supplied cover is not a valid isometric path cover
    """
    if cover is not None:
        if not verify_isometric_cover(g, d, cover):
            raise CoverError(f"Supplied cover from {cover.root} is not a valid isometric cover")
        return BoundReport(COVER_CONDITIONAL, cover.size + 1, cover.root, cover.size)
    if root is not None:
        greedy = greedy_isometric_cover_from(g, d, root)
        return BoundReport(COVER_CONDITIONAL, greedy.size + 1, root, greedy.size)

    sizes = [greedy_isometric_cover_from(g, d, v).size for v in range(g.n)]
    worst = max(range(g.n), key=lambda v: (sizes[v], -v))
    return BoundReport(COVER_GLOBAL, sizes[worst] + 1, worst, sizes[worst])


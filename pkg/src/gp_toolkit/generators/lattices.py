"""
Paths, cycles, complete graphs, graph products and finite lattice patches.

Product vertices are numbered a * |V(h)| + b, so an iterated product of paths
numbers its vertices in row-major order of their natural coordinates.
"""

import itertools
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..core.graph import Graph, Labeling, build_graph
from ..exceptions import GraphError, LabelingError

LATTICE_KINDS = ("cartesian", "strong", "triangular", "torus")
PRIMITIVE_KINDS = ("path", "cycle", "complete")
PRODUCT_KINDS = ("cartesian", "strong")
LABELING_SCHEMES = ("natural", "rotated")


@dataclass(frozen=True)
class LatticeSpec:
    """Finite lattice patch: kind plus per-axis extents"""

    kind: str
    dims: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if self.kind not in LATTICE_KINDS:
            raise GraphError(f"Unknown lattice kind {self.kind!r}; expected one of {LATTICE_KINDS}")
        if not self.dims or any(d < 1 for d in self.dims):
            raise GraphError(f"Lattice extents must be positive, got {list(self.dims)}")
        if self.kind != "cartesian" and len(self.dims) != 2:
            raise GraphError(f"{self.kind} lattices need exactly 2 extents, got {len(self.dims)}")
        if self.kind == "torus" and min(self.dims) < 3:
            raise GraphError("Torus extents must be at least 3")

    @property
    def label(self) -> str:
        return f"{self.kind}-{'x'.join(str(d) for d in self.dims)}"

    def coordinates(self) -> List[Tuple[int, ...]]:
        """Natural coordinates of every vertex, in vertex-id order"""
        return list(itertools.product(*(range(d) for d in self.dims)))


def primitive(kind: str, n: int) -> Graph:
    """
    Path, cycle or complete graph on n vertices with labeling i -> (i)

    Raises:
        GraphError: On unknown kind or n below the kind's minimum
    """
    if kind not in PRIMITIVE_KINDS:
        raise GraphError(f"Unknown primitive {kind!r}; expected one of {PRIMITIVE_KINDS}")
    minimum = 3 if kind == "cycle" else 1
    if n < minimum:
        raise GraphError(f"A {kind} needs at least {minimum} vertices, got {n}")

    if kind == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
        name = f"P{n}"
    elif kind == "cycle":
        edges = [(i, (i + 1) % n) for i in range(n)]
        name = f"C{n}"
    else:
        edges = list(itertools.combinations(range(n), 2))
        name = f"K{n}"
    labels = Labeling(1, tuple((i,) for i in range(n)))
    return build_graph(n, edges, name=name, labels=labels)


def product(kind: str, g: Graph, h: Graph) -> Graph:
    """
    Cartesian or strong product; vertex (a, b) gets id a * h.n + b

    Labels are concatenated when both factors carry them.
    """
    if kind not in PRODUCT_KINDS:
        raise GraphError(f"Unknown product {kind!r}; expected one of {PRODUCT_KINDS}")

    def vid(a: int, b: int) -> int:
        return a * h.n + b

    edges: List[Tuple[int, int]] = []
    for a in range(g.n):
        for b, b2 in h.edges():
            edges.append((vid(a, b), vid(a, b2)))
    for a, a2 in g.edges():
        for b in range(h.n):
            edges.append((vid(a, b), vid(a2, b)))
    if kind == "strong":
        for a, a2 in g.edges():
            for b, b2 in h.edges():
                edges.append((vid(a, b), vid(a2, b2)))
                edges.append((vid(a, b2), vid(a2, b)))

    labels = None
    if g.labels is not None and h.labels is not None:
        labels = Labeling(
            g.labels.dim + h.labels.dim,
            tuple(g.labels[a] + h.labels[b] for a in range(g.n) for b in range(h.n)),
        )
    symbol = "x" if kind == "cartesian" else "*"
    return build_graph(g.n * h.n, edges, name=f"({g.name}{symbol}{h.name})", labels=labels)


def _triangular(spec: LatticeSpec) -> List[Tuple[int, int]]:
    rows, cols = spec.dims
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if i + 1 < rows:
                edges.append((v, v + cols))
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows and j + 1 < cols:
                edges.append((v, v + cols + 1))
    return edges


def lattice(spec: LatticeSpec) -> Graph:
    """
    Finite patch of a lattice with its natural labeling attached

    cartesian -> iterated Cartesian product of paths (any number of axes),
    strong -> strong product of two paths, torus -> product of two cycles,
    triangular -> grid plus the (+1, +1) diagonal in every unit square.
    """
    if spec.kind == "cartesian":
        graph = primitive("path", spec.dims[0])
        for extent in spec.dims[1:]:
            graph = product("cartesian", graph, primitive("path", extent))
        edges = list(graph.edges())
    elif spec.kind == "strong":
        rows, cols = spec.dims
        edges = list(product("strong", primitive("path", rows), primitive("path", cols)).edges())
    elif spec.kind == "torus":
        edges = list(
            product(
                "cartesian", primitive("cycle", spec.dims[0]), primitive("cycle", spec.dims[1])
            ).edges()
        )
    else:
        edges = _triangular(spec)

    coords = spec.coordinates()
    return build_graph(
        len(coords),
        edges,
        name=spec.label,
        labels=Labeling(len(spec.dims), tuple(coords)),
        lattice=spec,
    )


def natural_labeling(spec: LatticeSpec) -> Labeling:
    """f(i, j, ...) = (i, j, ...)"""
    return Labeling(len(spec.dims), tuple(spec.coordinates()))


def rotated_labeling(spec: LatticeSpec) -> Labeling:
    """g(i, j) = (i + j, j - i): the 45 degree rotation scaled by sqrt(2)"""
    return Labeling(2, tuple((i + j, j - i) for i, j in spec.coordinates()))


def attach_labeling(g: Graph, scheme: str) -> Graph:
    """
    Attach the natural or rotated labeling to a lattice patch

    Args:
        g: Graph built by ``lattice``
        scheme: "natural" or "rotated"

    Returns:
        The same graph carrying the requested labels

    Raises:
        LabelingError: If the graph is not a lattice patch or the scheme does not fit it
    """
    if scheme not in LABELING_SCHEMES:
        raise LabelingError(
            f"Unknown labeling scheme {scheme!r}; expected one of {LABELING_SCHEMES}"
        )
    spec = g.lattice
    if spec is None:
        raise LabelingError(f"Graph {g.name!r} was not built by the lattice generator")
    if scheme == "natural":
        return g.with_labels(natural_labeling(spec))
    if spec.kind not in ("strong", "triangular"):
        raise LabelingError(
            f"Rotated labeling needs a strong or triangular lattice, got {spec.kind}"
        )
    return g.with_labels(rotated_labeling(spec))


def lattice_vertex(spec: LatticeSpec, coords: Sequence[int]) -> int:
    """Vertex id of natural coordinates inside the patch"""
    if len(coords) != len(spec.dims):
        raise GraphError(f"Expected {len(spec.dims)} coordinates, got {len(coords)}")
    vid = 0
    for c, extent in zip(coords, spec.dims):
        if not 0 <= c < extent:
            raise GraphError(f"Coordinate {tuple(coords)} lies outside {spec.label}")
        vid = vid * extent + c
    return vid

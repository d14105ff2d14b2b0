"""
Immutable undirected simple graphs with dense integer vertex ids.

Coordinates never live on the vertices themselves: a Graph may carry an
optional Labeling (vertex -> integer point) and, when it was produced by the
lattice generator, the LatticeSpec it came from.
"""

from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _cs_components

from ..exceptions import GraphError, LabelingError

if TYPE_CHECKING:
    from ..generators.lattices import LatticeSpec

Point = Tuple[int, ...]


@dataclass(frozen=True)
class Labeling:
    """Injective map vertex -> integer point in Z^dim"""

    dim: int
    coords: Tuple[Point, ...]
    _index: Dict[Point, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise LabelingError("Labeling dimension must be at least 1")
        coords = tuple(tuple(int(c) for c in point) for point in self.coords)
        for v, point in enumerate(coords):
            if len(point) != self.dim:
                raise LabelingError(
                    f"Vertex {v} has a {len(point)}-dim label, expected {self.dim}"
                )
        index: Dict[Point, int] = {}
        for v, point in enumerate(coords):
            if point in index:
                raise LabelingError(
                    f"Labeling is not injective: vertices {index[point]} and {v} share {point}"
                )
            index[point] = v
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, v: int) -> Point:
        return self.coords[v]

    def vertex_of(self, point: Sequence[int]) -> Optional[int]:
        """Return the vertex carrying ``point``, or None"""
        return self._index.get(tuple(int(c) for c in point))

    def restrict(self, vertices: Sequence[int]) -> "Labeling":
        """Labeling of an induced subgraph whose vertex i is ``vertices[i]``"""
        return Labeling(self.dim, tuple(self.coords[v] for v in vertices))


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1 with sorted adjacency lists"""

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    name: str = ""
    labels: Optional[Labeling] = None
    lattice: Optional["LatticeSpec"] = None

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in lexicographic order"""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def neighbor_masks(self) -> List[int]:
        """Adjacency rows as integer bitsets"""
        masks = []
        for nbrs in self.adjacency:
            mask = 0
            for v in nbrs:
                mask |= 1 << v
            masks.append(mask)
        return masks

    def to_csr(self) -> csr_matrix:
        """Sparse 0/1 adjacency matrix for scipy.sparse.csgraph routines"""
        rows = [u for u, nbrs in enumerate(self.adjacency) for _ in nbrs]
        cols = [v for nbrs in self.adjacency for v in nbrs]
        data = np.ones(len(rows), dtype=np.int8)
        return csr_matrix((data, (rows, cols)), shape=(self.n, self.n))

    def with_labels(self, labels: Optional[Labeling]) -> "Graph":
        """Return the same graph carrying ``labels``"""
        if labels is not None and len(labels) != self.n:
            raise LabelingError(f"Labeling covers {len(labels)} vertices, graph has {self.n}")
        return replace(self, labels=labels)

    def induced_subgraph(
        self,
        vertices: Iterable[int],
        name: Optional[str] = None,
        allow_disconnected: bool = False,
    ) -> "Graph":
        """
        Induced subgraph on ``vertices``; new vertex i is the i-th smallest kept id

        Args:
            vertices: Vertex ids to keep
            name: Name of the result (defaults to "<name>[sub]")
            allow_disconnected: Accept a disconnected result

        Returns:
            Induced subgraph with restricted labels
        """
        kept = sorted(set(vertices))
        for v in kept:
            if not 0 <= v < self.n:
                raise GraphError(f"Vertex {v} out of range [0, {self.n})")
        position = {v: i for i, v in enumerate(kept)}
        edges = [
            (position[u], position[v])
            for u, v in self.edges()
            if u in position and v in position
        ]
        labels = self.labels.restrict(kept) if self.labels is not None else None
        return build_graph(
            len(kept),
            edges,
            name=name if name is not None else f"{self.name}[sub]",
            labels=labels,
            allow_disconnected=allow_disconnected,
        )


def connected_components(g: Graph) -> List[List[int]]:
    """
    Connected components, each sorted, ordered by smallest vertex

    Args:
        g: Graph (may be disconnected)

    Returns:
        List of vertex lists
    """
    count, membership = _cs_components(g.to_csr(), directed=False)
    components: List[List[int]] = [[] for _ in range(count)]
    for v, comp in enumerate(membership.tolist()):
        components[comp].append(v)
    return sorted(components, key=lambda comp: comp[0])


def build_graph(
    n: int,
    edges: Iterable[Sequence[int]],
    name: str = "",
    labels: Optional[Labeling] = None,
    allow_disconnected: bool = False,
    lattice: Optional["LatticeSpec"] = None,
) -> Graph:
    """
    Build a canonical Graph from an edge list

    Args:
        n: Vertex count
        edges: Vertex id pairs
        name: Text tag
        labels: Optional labeling with one point per vertex
        allow_disconnected: Accept disconnected input
        lattice: Lattice description when built by the lattice generator

    Returns:
        Graph with sorted adjacency

    Raises:
        GraphError: On out-of-range ids, self-loops, duplicate edges, or
            disconnected input without ``allow_disconnected``
    """
    if n < 1:
        raise GraphError("A graph needs at least one vertex")
    neighbor_sets: List[set] = [set() for _ in range(n)]
    for edge in edges:
        if len(edge) != 2:
            raise GraphError(f"Edge {tuple(edge)} is not a pair")
        u, v = int(edge[0]), int(edge[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"Edge ({u}, {v}) has an id outside [0, {n})")
        if u == v:
            raise GraphError(f"Self-loop at vertex {u}")
        if v in neighbor_sets[u]:
            raise GraphError(f"Duplicate edge ({u}, {v})")
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)

    if labels is not None and len(labels) != n:
        raise LabelingError(f"Labeling covers {len(labels)} vertices, graph has {n}")

    graph = Graph(
        n=n,
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in neighbor_sets),
        name=name,
        labels=labels,
        lattice=lattice,
    )
    if not allow_disconnected and n > 1 and len(connected_components(graph)) > 1:
        raise GraphError(f"Graph {name!r} is disconnected")
    return graph

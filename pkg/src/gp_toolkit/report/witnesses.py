"""
Library of named general position sets stored by coordinates.

Entries tagged "published" reproduce explicitly published point sets; entries
tagged "derived" are stand-ins for figure-only sets, found by the solver and
checked here, and must never be presented as the published figures.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..core.distances import all_pairs_distances
from ..core.graph import Graph
from ..exceptions import WitnessError
from ..generators.lattices import LatticeSpec, lattice
from ..geodesy.betweenness import GpCertificate, verify_general_position
from ..utils.logging import get_logger

logger = get_logger(__name__)

SOURCE_PUBLISHED = "published"
SOURCE_DERIVED = "derived"

Point = Tuple[int, ...]

# Worked example for monotone extraction (not a vertex set of any patch)
ES_EXAMPLE: Tuple[Point, ...] = ((1, 4), (2, 3), (3, 5), (3, 2), (5, 3))


@dataclass(frozen=True)
class Witness:
    """A named coordinate set and the lattice patch it lives in"""

    name: str
    description: str
    host: LatticeSpec
    points: Tuple[Point, ...]
    source: str

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "description": self.description,
            "host": self.host.label,
            "points": [list(p) for p in self.points],
            "source": self.source,
        }


WITNESS_LIBRARY: Dict[str, Witness] = {
    w.name: w
    for w in (
        Witness(
            name="grid3-ten",
            description="10 points of the 3-dim grid with pairwise distances 3..5",
            host=LatticeSpec("cartesian", (5, 5, 5)),
            points=(
                (2, 2, 0),
                (3, 1, 1),
                (1, 3, 1),
                (2, 0, 2),
                (0, 2, 2),
                (4, 2, 2),
                (2, 4, 2),
                (1, 1, 3),
                (3, 3, 3),
                (2, 2, 4),
            ),
            source=SOURCE_PUBLISHED,
        ),
        Witness(
            name="grid-four",
            description="4-set of the 2-dim grid around (1, 1), all distances 2",
            host=LatticeSpec("cartesian", (6, 6)),
            points=((0, 1), (1, 0), (1, 2), (2, 1)),
            source=SOURCE_DERIVED,
        ),
        Witness(
            name="strong-corners",
            description="corners of the 3x3 strong grid, all distances 2",
            host=LatticeSpec("strong", (3, 3)),
            points=((0, 0), (0, 2), (2, 0), (2, 2)),
            source=SOURCE_DERIVED,
        ),
        Witness(
            name="boron-six",
            description="hexagon-shaped 6-set of the triangular grid, distances 2..4",
            host=LatticeSpec("triangular", (8, 8)),
            points=((4, 3), (3, 4), (1, 3), (0, 1), (1, 0), (3, 1)),
            source=SOURCE_DERIVED,
        ),
        Witness(
            name="torus-seven",
            description="{(i, 3i mod 7)} in C7 x C7, distances 3..5",
            host=LatticeSpec("torus", (7, 7)),
            points=tuple((i, 3 * i % 7) for i in range(7)),
            source=SOURCE_DERIVED,
        ),
        Witness(
            name="corner-three",
            description="3-set of the 4x4 grid containing a corner, all distances 4",
            host=LatticeSpec("cartesian", (4, 4)),
            points=((0, 0), (1, 3), (3, 1)),
            source=SOURCE_DERIVED,
        ),
    )
}


def get_witness(name: str) -> Witness:
    """
    Raises:
        WitnessError: If the name is unknown
    """
    try:
        return WITNESS_LIBRARY[name]
    except KeyError:
        known = ", ".join(sorted(WITNESS_LIBRARY))
        raise WitnessError(f"Unknown witness {name!r}; known witnesses: {known}") from None


def resolve_witness(name: str, patch: Graph) -> Tuple[int, ...]:
    """
    Map a witness's coordinates to vertex ids through the patch labeling

    Args:
        name: Library entry name
        patch: Graph whose labeling carries the witness coordinates

    Returns:
        Vertex ids in the witness's point order

    Raises:
        WitnessError: If the name is unknown, the patch is unlabeled, or a
            coordinate lies outside the patch
    """
    witness = get_witness(name)
    if patch.labels is None:
        raise WitnessError(f"Patch {patch.name!r} carries no labeling")
    ids: List[int] = []
    for point in witness.points:
        v = patch.labels.vertex_of(point)
        if v is None:
            raise WitnessError(f"Witness {name!r}: coordinate {point} outside patch {patch.name!r}")
        ids.append(v)
    return tuple(ids)


def witness_host(name: str) -> Graph:
    """Default patch of a library entry"""
    return lattice(get_witness(name).host)


def self_test() -> Dict[str, GpCertificate]:
    """Verify every library entry against its own host patch"""
    results: Dict[str, GpCertificate] = {}
    for name in WITNESS_LIBRARY:
        host = witness_host(name)
        cert = verify_general_position(all_pairs_distances(host), resolve_witness(name, host))
        if not cert.ok:
            logger.error(f"Witness {name!r} failed: {cert.violating_triple} is collinear")
        results[name] = cert
    return results

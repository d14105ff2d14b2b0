"""
Command-line interface for graph operations

Provides commands for:
- Generating graphs (gen)
- Verifying general position sets (verify)
- Exact search (solve)
- Monotone-geodesic labeling checks (label-check)
- Isometric path covers (cover)

Graphs are given either as a file (edge list, or JSON when the name ends in
.json) or as a generator expression such as ``cartesian:5x5x5``, ``benes:3``
or ``cycle:7``.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from .config import Config
from .constants import EXIT_LOWER_BOUND_ONLY, EXIT_OK
from .core.distances import all_pairs_distances
from .core.graph import Graph
from .core.io import dump_graph, load_graph
from .exceptions import ValidationError
from .generators.lattices import LATTICE_KINDS, LatticeSpec, attach_labeling, lattice, primitive
from .generators.networks import benes, butterfly
from .geodesy.betweenness import verify_general_position
from .geodesy.covers import (
    benes_cover,
    gp_upper_bound,
    greedy_isometric_cover_from,
    min_isometric_cover_size,
)
from .monotone.labeling import check_monotone_geodesic_labeling
from .report.witnesses import WITNESS_LIBRARY, resolve_witness
from .solver.search import SolveOptions, max_general_position
from .utils.logging import get_logger

logger = get_logger(__name__)

GENERATOR_FAMILIES = ("path", "cycle", "complete", "butterfly", "benes") + LATTICE_KINDS


def display_json(data, indent=2):
    """Pretty print JSON data"""
    print(json.dumps(data, indent=indent, ensure_ascii=False))


def display_table(title: str, data: Dict[str, Any]) -> None:
    """Print a flat key/value table"""
    print(f"\n{title}")
    print("-" * 60)
    for key, value in data.items():
        if isinstance(value, list) and value and isinstance(value[0], list):
            print(f"  {key}:")
            for item in value:
                print(f"    {item}")
        else:
            print(f"  {key:<22} {value}")


def _emit(title: str, data: Dict[str, Any], output_format: str) -> None:
    if output_format == "json":
        display_json(data)
    else:
        display_table(title, data)


def _parse_dims(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.lower().split("x"))
    except ValueError as e:
        raise ValidationError(f"Bad extents {text!r}; expected e.g. 5x5") from e


def generate(expression: str) -> Graph:
    """
    Build a graph from ``family:params``

    Raises:
        ValidationError: On unknown families or malformed parameters
    """
    family, _, params = expression.partition(":")
    if family not in GENERATOR_FAMILIES or not params:
        raise ValidationError(
            f"Bad generator {expression!r}; expected family:params with family in "
            f"{', '.join(GENERATOR_FAMILIES)}"
        )
    if family in LATTICE_KINDS:
        return lattice(LatticeSpec(family, _parse_dims(params)))
    dims = _parse_dims(params)
    if len(dims) != 1:
        raise ValidationError(f"{family} takes a single integer parameter, got {params!r}")
    size = dims[0]
    if family == "butterfly":
        return butterfly(size)
    if family == "benes":
        return benes(size)
    return primitive(family, size)


def graph_from_source(source: str) -> Graph:
    """A graph file when ``source`` exists on disk, otherwise a generator expression"""
    path = Path(source)
    if path.is_file():
        return load_graph(path)
    return generate(source)


def parse_vertex_set(text: str, g: Graph) -> Tuple[int, ...]:
    """
    Vertex ids from a JSON array of ids or of coordinates, or a witness library name

    Raises:
        ValidationError: On malformed input or coordinates missing from the labeling
    """
    if text in WITNESS_LIBRARY:
        return resolve_witness(text, g)
    try:
        items = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"Vertex set must be a JSON array: {e}") from e
    if not isinstance(items, list):
        raise ValidationError("Vertex set must be a JSON array")

    ids: List[int] = []
    for item in items:
        if isinstance(item, int):
            ids.append(item)
        elif isinstance(item, list):
            if g.labels is None:
                raise ValidationError(f"Graph {g.name!r} has no labeling to resolve {item}")
            v = g.labels.vertex_of(item)
            if v is None:
                raise ValidationError(f"No vertex of {g.name!r} is labeled {item}")
            ids.append(v)
        else:
            raise ValidationError(f"Unsupported vertex entry {item!r}")
    return tuple(ids)


def gen_command(expression: str, labeling: str = "natural", graph_format: str = "json") -> int:
    """
    Print a generated graph

    Args:
        expression: Generator expression
        labeling: natural, rotated or none
        graph_format: json or edges
    """
    g = generate(expression)
    if labeling == "none":
        g = g.with_labels(None)
    elif g.lattice is not None:
        g = attach_labeling(g, labeling)
    elif labeling == "rotated":
        raise ValidationError("Rotated labeling is only defined on lattice patches")
    print(dump_graph(g, graph_format), end="" if graph_format == "edges" else "\n")
    return EXIT_OK


def verify_command(config: Config, source: str, vertices: str, output_format: str = "table") -> int:
    """
    Check a vertex set for general position

    Args:
        config: Configuration object
        source: Graph file or generator expression
        vertices: JSON array of ids or coordinates, or a witness name
        output_format: Output format (table or json)
    """
    g = graph_from_source(source)
    s = parse_vertex_set(vertices, g)
    cert = verify_general_position(all_pairs_distances(g, config.threads), s)
    payload = {"graph": g.name, "vertices": sorted(set(s)), **cert.to_dict()}
    _emit("General position certificate", payload, output_format)
    return EXIT_OK


def solve_command(
    config: Config,
    source: str,
    forced: Optional[str] = None,
    hint: Optional[str] = None,
    time_limit: Optional[float] = None,
    known_upper: Optional[int] = None,
    output_format: str = "table",
) -> int:
    """
    Exact maximum general position set

    Returns:
        0 when optimal, EXIT_LOWER_BOUND_ONLY when the time limit cut the search
    """
    g = graph_from_source(source)
    opts = SolveOptions(
        forced=parse_vertex_set(forced, g) if forced else (),
        hint=parse_vertex_set(hint, g) if hint else (),
        time_limit=time_limit if time_limit is not None else config.time_limit,
        known_upper=known_upper,
    )
    result = max_general_position(
        g,
        all_pairs_distances(g, config.threads),
        opts,
        threads=config.threads,
        vertex_cap=config.solver_vertex_cap,
    )
    payload = {"graph": g.name, **result.to_dict()}
    if g.labels is not None:
        payload["witness_labels"] = [list(g.labels[v]) for v in result.witness]
    _emit("Maximum general position set", payload, output_format)
    return EXIT_OK if result.optimal else EXIT_LOWER_BOUND_ONLY


def label_check_command(
    config: Config, source: str, scheme: str = "natural", output_format: str = "table"
) -> int:
    """Check the natural or rotated labeling of a lattice patch"""
    g = attach_labeling(graph_from_source(source), scheme)
    cert = check_monotone_geodesic_labeling(
        g, all_pairs_distances(g, config.threads), vertex_cap=config.labeling_vertex_cap
    )
    payload = {"graph": g.name, "scheme": scheme, **cert.to_dict()}
    _emit("Labeling certificate", payload, output_format)
    return EXIT_OK


def cover_command(
    config: Config,
    source: Optional[str],
    root: int,
    benes_dim: Optional[int] = None,
    exact: bool = False,
    output_format: str = "table",
) -> int:
    """
    Isometric path cover from ``root`` and the resulting conditional bound

    With ``benes_dim`` the recursive Benes cover of BN(benes_dim) is used.
    """
    if benes_dim is not None:
        g = benes(benes_dim)
        cover = benes_cover(benes_dim, root)
    elif source:
        g = graph_from_source(source)
        cover = None
    else:
        raise ValidationError("cover needs a graph source or --benes")

    d = all_pairs_distances(g, config.threads)
    if cover is None:
        cover = greedy_isometric_cover_from(g, d, root)
    bound = gp_upper_bound(g, d, cover=cover)
    payload: Dict[str, Any] = {"graph": g.name, **cover.to_dict(), "bound": bound.to_dict()}
    if exact:
        payload["exact_size"] = min_isometric_cover_size(g, d, root)
    _emit("Isometric path cover", payload, output_format)
    return EXIT_OK

"""
Edge-list and JSON graph formats
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Union

from ..exceptions import GeneralPositionError, ValidationError
from ..utils.logging import get_logger
from .graph import Graph, Labeling, build_graph

logger = get_logger(__name__)


def graph_to_edge_list(g: Graph) -> str:
    """
    Serialize a graph as ``n m`` followed by one ``u v`` line per edge

    Args:
        g: Graph to serialize

    Returns:
        Edge-list text ending in a newline
    """
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def graph_from_edge_list(text: str, name: str = "") -> Graph:
    """
    Parse edge-list text

    Args:
        text: Edge-list content
        name: Name for the parsed graph

    Returns:
        Graph

    Raises:
        ValidationError: If the text is malformed
    """
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise ValidationError("Edge list must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(u), int(v)) for u, v in rows[1:]]
    except ValueError as e:
        raise ValidationError(f"Edge list contains a non-integer or malformed line: {e}") from e
    if len(edges) != m:
        raise ValidationError(f"Header announces {m} edges, found {len(edges)}")
    try:
        return build_graph(n, edges, name=name)
    except GeneralPositionError as e:
        raise ValidationError(f"Invalid edge list: {e}") from e


def graph_to_json(g: Graph) -> Dict[str, Any]:
    """JSON-ready dict: name, n, edges, labels (or null)"""
    return {
        "name": g.name,
        "n": g.n,
        "edges": [[u, v] for u, v in g.edges()],
        "labels": [list(p) for p in g.labels.coords] if g.labels is not None else None,
    }


def graph_from_json(payload: Dict[str, Any]) -> Graph:
    """
    Build a graph from its JSON form

    Args:
        payload: Dict with keys name, n, edges, labels

    Returns:
        Graph

    Raises:
        ValidationError: If required keys are missing or the graph is invalid
    """
    for key in ("n", "edges"):
        if key not in payload:
            raise ValidationError(f"JSON graph is missing key {key!r}")
    try:
        raw_labels: List[List[int]] | None = payload.get("labels")
        labels = None
        if raw_labels:
            labels = Labeling(len(raw_labels[0]), tuple(tuple(p) for p in raw_labels))
        return build_graph(
            int(payload["n"]),
            [tuple(e) for e in payload["edges"]],
            name=str(payload.get("name", "")),
            labels=labels,
        )
    except (GeneralPositionError, TypeError, ValueError) as e:
        raise ValidationError(f"Invalid JSON graph: {e}") from e


def load_graph(path: Union[str, Path]) -> Graph:
    """
    Read a graph file; ``.json`` files use the JSON format, anything else the edge list

    Raises:
        ValidationError: If the file cannot be read or parsed
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ValidationError(f"Failed to read graph file {path}: {e}") from e
    logger.debug(f"Loading graph from {path}")
    if path.suffix.lower() == ".json":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValidationError(f"Graph file {path} is not valid JSON: {e}") from e
        return graph_from_json(payload)
    return graph_from_edge_list(text, name=path.stem)


def dump_graph(g: Graph, fmt: str = "json") -> str:
    """Render a graph in ``json`` or ``edges`` format"""
    if fmt == "json":
        return json.dumps(graph_to_json(g), indent=2)
    if fmt == "edges":
        return graph_to_edge_list(g)
    raise ValidationError(f"Unknown graph format {fmt!r}")

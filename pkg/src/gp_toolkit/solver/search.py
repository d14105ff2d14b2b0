"""
Exact maximum general position set by branch and bound.

Vertices are ranked once (degree descending, id ascending, or a seeded
permutation) and the betweenness index is built in rank space, so the next
branching vertex is always the lowest set bit of the candidate bitset. Including v removes from the
candidates every vertex collinear with v and a chosen vertex.
"""

import itertools
import time
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..constants import ORACLE_VERTEX_CAP, SOLVER_VERTEX_CAP, TIME_CHECK_INTERVAL
from ..core.distances import DistanceMatrix
from ..core.graph import Graph
from ..exceptions import GraphError, SizeLimitError, SolverError
from ..geodesy.betweenness import verify_general_position
from ..utils.logging import get_logger
from .triples import enumerate_collinear_triples

logger = get_logger(__name__)

OPTIMAL = "optimal"
LOWER_BOUND_ONLY = "lower_bound_only"


@dataclass(frozen=True)
class SolveOptions:
    """
    Search options

    forced vertices must be in the solution; hint is a known general position
    set (containing forced) used as the starting incumbent; the search stops as
    soon as it reaches known_upper with a set that cannot be extended. With
    order_seed set, vertices are branched on in a seeded random order instead
    of by degree.
    """

    forced: Tuple[int, ...] = ()
    time_limit: Optional[float] = None
    initial_lower_bound: Optional[int] = None
    hint: Tuple[int, ...] = ()
    known_upper: Optional[int] = None
    order_seed: Optional[int] = None


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a search; witness is sorted"""

    status: str
    size: int
    witness: Tuple[int, ...]
    nodes_explored: int
    elapsed: float = 0.0
    upper_bound_source: Optional[str] = None
    forced: Tuple[int, ...] = field(default=())

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "size": self.size,
            "witness": list(self.witness),
            "forced": list(self.forced),
            "nodes_explored": self.nodes_explored,
            "elapsed": round(self.elapsed, 3),
            "upper_bound_source": self.upper_bound_source,
        }


class _Stop(Exception):
    pass


def _check_set(d: DistanceMatrix, vertices: Sequence[int], what: str) -> Tuple[int, ...]:
    kept = tuple(sorted({int(v) for v in vertices}))
    for v in kept:
        if not 0 <= v < d.n:
            raise SolverError(f"{what} vertex {v} out of range [0, {d.n})")
    if len(kept) >= 3:
        cert = verify_general_position(d, kept)
        if not cert.ok:
            raise SolverError(
                f"{what} set is not in general position: {cert.violating_triple} is collinear"
            )
    return kept


def branching_order(g: Graph, seed: Optional[int] = None) -> List[int]:
    """Degree descending, ties by id; a seeded permutation when ``seed`` is given"""
    if seed is not None:
        return [int(v) for v in np.random.default_rng(seed).permutation(g.n)]
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _extension(line: Sequence[Sequence[int]], members: Sequence[int], n: int) -> int:
    """Bitset of vertices that can join ``members`` without a collinear triple"""
    free = (1 << n) - 1
    for r in members:
        free &= ~(1 << r)
    for a, c in itertools.combinations(members, 2):
        free &= ~line[a][c]
    return free


def max_general_position(
    g: Graph,
    d: DistanceMatrix,
    opts: Optional[SolveOptions] = None,
    threads: int = 1,
    vertex_cap: int = SOLVER_VERTEX_CAP,
) -> SolveResult:
    """
    Largest general position set containing ``opts.forced``

    Args:
        g: Graph
        d: Its distances
        opts: Search options
        threads: Worker threads for building the betweenness index
        vertex_cap: Largest graph accepted

    Returns:
        SolveResult: optimal when the search space was exhausted (or
        known_upper was reached), lower_bound_only on timeout

    Raises:
        SolverError: If forced or hint is not in general position
        SizeLimitError: If the graph exceeds ``vertex_cap``
    """
    opts = opts or SolveOptions()
    if g.n > vertex_cap:
        raise SizeLimitError(f"Exact search is capped at {vertex_cap} vertices, got {g.n}")
    forced = _check_set(d, opts.forced, "Forced")
    hint = _check_set(d, opts.hint, "Hint") if opts.hint else ()
    if hint and not set(forced) <= set(hint):
        raise SolverError("Hint set must contain every forced vertex")

    order = branching_order(g, opts.order_seed)
    rank = {v: i for i, v in enumerate(order)}
    index = enumerate_collinear_triples(d, threads=threads, vertex_cap=vertex_cap, order=order)
    line = index.line

    chosen = [rank[v] for v in forced]
    cand = (1 << g.n) - 1
    for r in chosen:
        cand &= ~(1 << r)
    for a, c in itertools.combinations(chosen, 2):
        cand &= ~line[a][c]

    floor = (opts.initial_lower_bound or 0) - 1
    best_size = len(hint) if hint else -1
    best_set: List[int] = [rank[v] for v in hint]
    nodes = 0
    started = time.monotonic()
    stop_reason: Optional[str] = None
    upper = opts.known_upper

    def reached_upper(members: List[int]) -> bool:
        # a larger or extensible incumbent disproves the bound
        nonlocal upper
        if upper is None or best_size < upper:
            return False
        if best_size == upper and not _extension(line, members, g.n):
            return True
        logger.warning(
            f"known_upper {upper} is below a general position set of {g.name!r}; "
            "continuing without it"
        )
        upper = None
        return False

    def expand(current: List[int], candidates: int) -> None:
        nonlocal best_size, best_set, nodes
        nodes += 1
        if nodes % TIME_CHECK_INTERVAL == 0 and opts.time_limit is not None:
            if time.monotonic() - started > opts.time_limit:
                raise _Stop("time_limit")
        if len(current) > best_size:
            best_size = len(current)
            best_set = list(current)
            logger.debug(f"New incumbent of size {best_size} after {nodes} nodes")
            if reached_upper(current):
                raise _Stop("known_upper")
        while candidates:
            if len(current) + candidates.bit_count() <= max(best_size, floor):
                return
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates &= ~low
            narrowed = candidates
            for c in current:
                narrowed &= ~line[v][c]
            current.append(v)
            expand(current, narrowed)
            current.pop()

    if reached_upper(best_set):
        stop_reason = "known_upper"
    else:
        try:
            expand(chosen, cand)
        except _Stop as e:
            stop_reason = str(e)

    elapsed = time.monotonic() - started
    witness = tuple(sorted(order[i] for i in best_set))
    if stop_reason == "time_limit":
        logger.info(f"Time limit hit on {g.name!r}: best size {len(witness)} after {nodes} nodes")
        status, source = LOWER_BOUND_ONLY, None
    elif stop_reason == "known_upper":
        status, source = OPTIMAL, "hint"
    elif opts.initial_lower_bound is not None and len(witness) < opts.initial_lower_bound:
        logger.warning(
            f"No general position set of size {opts.initial_lower_bound} found on {g.name!r}; "
            "reporting the best set seen"
        )
        status, source = LOWER_BOUND_ONLY, None
    else:
        status, source = OPTIMAL, "search"

    logger.info(f"Solved {g.name!r}: {status}, size {len(witness)}, {nodes} nodes")
    return SolveResult(
        status=status,
        size=len(witness),
        witness=witness,
        nodes_explored=nodes,
        elapsed=elapsed,
        upper_bound_source=source,
        forced=forced,
    )


def greedy_gp_lower_bound(
    g: Graph, d: DistanceMatrix, seed_order: Optional[Sequence[int]] = None
) -> Tuple[int, ...]:
    """
    Scan ``seed_order`` and keep each vertex that leaves the set in general position

    Args:
        g: Graph
        d: Its distances
        seed_order: Distinct vertices to scan (defaults to 0..n-1)

    Returns:
        Sorted general position set
    """
    scan = list(range(g.n)) if seed_order is None else [int(v) for v in seed_order]
    if len(set(scan)) != len(scan):
        raise SolverError("Seed order repeats a vertex")
    if any(not 0 <= v < g.n for v in scan):
        raise GraphError(f"Seed order has a vertex outside [0, {g.n})")

    line = enumerate_collinear_triples(d).line
    kept: List[int] = []
    blocked = 0
    for v in scan:
        if blocked >> v & 1:
            continue
        for c in kept:
            blocked |= line[v][c]
        kept.append(v)
    return tuple(sorted(kept))


def exhaustive_max_general_position(
    g: Graph, d: DistanceMatrix, forced: Sequence[int] = ()
) -> SolveResult:
    """
    Subset-enumeration oracle over the sets containing ``forced``

    Sizes are scanned upwards, lexicographically within a size. Subsets of a
    general position set are in general position, so the first size with no
    such set ends the scan. Uses a plain triple loop over distances with no
    shared code path with the branch and bound.

    Raises:
        SizeLimitError: Above ORACLE_VERTEX_CAP vertices
        SolverError: If forced is out of range or not in general position
    """
    if g.n > ORACLE_VERTEX_CAP:
        raise SizeLimitError(f"Subset enumeration is capped at {ORACLE_VERTEX_CAP} vertices")
    fixed = tuple(sorted({int(v) for v in forced}))
    if any(not 0 <= v < g.n for v in fixed):
        raise SolverError(f"Forced vertex out of range [0, {g.n})")

    def collinear(a: int, b: int, c: int) -> bool:
        ab, bc, ac = d(a, b), d(b, c), d(a, c)
        return ac == ab + bc or ab == ac + bc or bc == ab + ac

    def general(subset: Tuple[int, ...]) -> bool:
        return not any(collinear(*t) for t in itertools.combinations(subset, 3))

    if not general(fixed):
        raise SolverError("Forced set is not in general position")

    rest = [v for v in range(g.n) if v not in set(fixed)]
    best = fixed
    checked = 0
    started = time.monotonic()
    for extra in range(1, len(rest) + 1):
        found = None
        for chosen in itertools.combinations(rest, extra):
            checked += 1
            subset = tuple(sorted(fixed + chosen))
            if general(subset):
                found = subset
                break
        if found is None:
            break
        best = found

    if not best:
        raise SolverError("Graph has no vertices")
    return SolveResult(
        status=OPTIMAL,
        size=len(best),
        witness=best,
        nodes_explored=checked,
        elapsed=time.monotonic() - started,
        upper_bound_source="enumeration",
        forced=fixed,
    )

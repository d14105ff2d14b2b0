"""
Erdős–Szekeres extraction of monotone subsequences.

Monotone means non-strict, with the direction chosen per coordinate.
"""

from bisect import bisect_right
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..exceptions import MonotoneError

NONDECREASING = "nondecreasing"
NONINCREASING = "nonincreasing"

Point = Sequence[int]


@dataclass(frozen=True)
class MonotoneWitness:
    """
    Positions of a monotone subsequence and the direction of each coordinate

    For integer sequences the positions are strictly increasing. For point
    sets they are listed in the order of the monotone sequence, i.e. by first
    coordinate with ties broken by position.
    """

    indices: Tuple[int, ...]
    directions: Tuple[str, ...]

    def __len__(self) -> int:
        return len(self.indices)

    def select(self, items: Sequence) -> List:
        return [items[i] for i in self.indices]

    def to_dict(self) -> dict:
        return {"indices": list(self.indices), "directions": list(self.directions)}


def _longest_nondecreasing(seq: Sequence[int]) -> Tuple[int, ...]:
    """Lexicographically smallest index set of a longest non-decreasing subsequence"""
    n = len(seq)
    # longest run starting at i, computed right to left on negated values
    starting = [0] * n
    tails: List[int] = []
    for i in range(n - 1, -1, -1):
        value = -seq[i]
        pos = bisect_right(tails, value)
        if pos == len(tails):
            tails.append(value)
        else:
            tails[pos] = value
        starting[i] = pos + 1

    need = len(tails)
    picked: List[int] = []
    for j in range(n):
        if need == 0:
            break
        if starting[j] >= need and (not picked or seq[j] >= seq[picked[-1]]):
            picked.append(j)
            need -= 1
    return tuple(picked)


def longest_monotone_subsequence(seq: Sequence[int]) -> MonotoneWitness:
    """
    Longer of the longest non-decreasing and non-increasing subsequences

    Ties between directions go to non-decreasing; within a direction the
    lexicographically smallest index set wins. O(N log N).

    Raises:
        MonotoneError: On empty input
    """
    if len(seq) == 0:
        raise MonotoneError("Cannot extract a monotone subsequence from an empty sequence")
    values = [int(x) for x in seq]
    up = _longest_nondecreasing(values)
    down = _longest_nondecreasing([-x for x in values])
    if len(down) > len(up):
        return MonotoneWitness(indices=down, directions=(NONINCREASING,))
    return MonotoneWitness(indices=up, directions=(NONDECREASING,))


def _direction(values: Sequence[int]) -> str:
    if all(a <= b for a, b in zip(values, values[1:])):
        return NONDECREASING
    if all(a >= b for a, b in zip(values, values[1:])):
        return NONINCREASING
    return ""


def is_monotone(points: Sequence[Point]) -> bool:
    """True iff every coordinate sequence is non-strictly monotone"""
    if len(points) <= 2:
        return True
    dim = len(points[0])
    return all(_direction([p[t] for p in points]) for t in range(dim))


def forcing_count(dim: int, length: int) -> int:
    """
    Number of points in Z^dim that forces a monotone subsequence of ``length``

    Sorting settles the first coordinate; every further coordinate costs one
    Erdős–Szekeres round, n -> (n - 1)^2 + 1.
    """
    if dim < 1 or length < 1:
        raise MonotoneError(f"dim and length must be positive, got {dim}, {length}")
    need = length
    for _ in range(dim - 1):
        need = (need - 1) ** 2 + 1
    return need


def _check_points(points: Sequence[Point]) -> int:
    if not points:
        raise MonotoneError("Point list is empty")
    dim = len(points[0])
    if dim < 1 or any(len(p) != dim for p in points):
        raise MonotoneError("Points must share one positive dimension")
    return dim


def monotone_point_subsequence(points: Sequence[Point], length: int) -> MonotoneWitness:
    """
    Iterated Erdős–Szekeres: a monotone subsequence of ``length`` points in Z^k

    Sort by the first coordinate (stable), then on each further coordinate keep
    the first n' elements of a longest monotone subsequence of the survivors,
    where n' is what the remaining coordinates still need.

    Raises:
        MonotoneError: If fewer than forcing_count(k, length) points are given
    """
    dim = _check_points(points)
    required = forcing_count(dim, length)
    if len(points) < required:
        raise MonotoneError(
            f"{dim}-dim extraction of {length} points needs at least {required} points, "
            f"got {len(points)}"
        )

    needs = [length]
    for _ in range(dim - 2):
        needs.append((needs[-1] - 1) ** 2 + 1)
    needs.reverse()

    survivors = sorted(range(len(points)), key=lambda i: (points[i][0], i))
    directions = [NONDECREASING]
    for t, keep in zip(range(1, dim), needs):
        witness = longest_monotone_subsequence([points[i][t] for i in survivors])
        survivors = [survivors[j] for j in witness.indices[:keep]]
        directions.append(witness.directions[0])
    if dim == 1:
        survivors = survivors[:length]

    return MonotoneWitness(indices=tuple(survivors), directions=tuple(directions))


def monotone_point_triple(points: Sequence[Point]) -> MonotoneWitness:
    """
    Monotone triple among at least 5 points of Z^2 or 17 points of Z^3

    Raises:
        MonotoneError: On other dimensions or too few points
    """
    dim = _check_points(points)
    if dim not in (2, 3):
        raise MonotoneError(f"Triple extraction handles 2 or 3 dimensions, got {dim}")
    return monotone_point_subsequence(points, 3)

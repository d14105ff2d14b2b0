"""
Tests for geodesic betweenness and general position certificates
"""

import itertools

import numpy as np
import pytest

from gp_toolkit.core.distances import all_pairs_distances
from gp_toolkit.exceptions import GraphError
from gp_toolkit.generators.lattices import LatticeSpec, lattice, lattice_vertex, primitive
from gp_toolkit.geodesy.betweenness import (
    GENERAL_POSITION,
    VIOLATED,
    is_between,
    lies_on_common_geodesic,
    separation_witness,
    verify_general_position,
)
from gp_toolkit.report.witnesses import resolve_witness


def _oracle_first_triple(d, vertices):
    for a, b, c in itertools.combinations(sorted(vertices), 3):
        ab, bc, ac = d(a, b), d(b, c), d(a, c)
        if ac == ab + bc or ab == ac + bc or bc == ab + ac:
            return (a, b, c)
    return None


def test_common_geodesic_on_path():
    """Test three vertices of a path are collinear"""
    d = all_pairs_distances(primitive("path", 5))
    assert lies_on_common_geodesic(d, 0, 2, 4)


def test_common_geodesic_strong_grid_triple():
    """Test (0,0), (2,1), (3,4) is not collinear in the strong grid"""
    spec = LatticeSpec("strong", (6, 6))
    d = all_pairs_distances(lattice(spec))
    triple = [lattice_vertex(spec, p) for p in ((0, 0), (2, 1), (3, 4))]
    assert not lies_on_common_geodesic(d, *triple)


def test_common_geodesic_even_cycle():
    """Test alternate vertices of C6 are pairwise at distance 2 and not collinear"""
    d = all_pairs_distances(primitive("cycle", 6))
    assert not lies_on_common_geodesic(d, 0, 2, 4)


def test_common_geodesic_permutation_invariant(zoo):
    """Test the predicate ignores the order of the triple"""
    for g in zoo[:6]:
        d = all_pairs_distances(g)
        for triple in itertools.combinations(range(g.n), 3):
            verdicts = {lies_on_common_geodesic(d, *p) for p in itertools.permutations(triple)}
            assert len(verdicts) == 1


def test_common_geodesic_rejects_repeats():
    """Test non-distinct triples are rejected"""
    d = all_pairs_distances(primitive("path", 3))
    with pytest.raises(GraphError, match="pairwise distinct"):
        lies_on_common_geodesic(d, 0, 0, 2)
    with pytest.raises(GraphError, match="out of range"):
        lies_on_common_geodesic(d, 0, 1, 7)


def test_is_between_strict():
    """Test endpoints are never strictly between"""
    d = all_pairs_distances(primitive("path", 4))
    assert is_between(d, 0, 1, 3)
    assert not is_between(d, 0, 0, 3)
    assert not is_between(d, 1, 0, 3)


def test_verify_ten_point_set():
    """Test the 10-point set of the 5x5x5 grid with separation k = 3"""
    g = lattice(LatticeSpec("cartesian", (5, 5, 5)))
    d = all_pairs_distances(g)
    cert = verify_general_position(d, resolve_witness("grid3-ten", g))
    assert cert.verdict == GENERAL_POSITION
    assert cert.ok
    assert cert.separation_k == 3


def test_verify_path_triple_violated():
    """Test every triple of a path is violated with the middle vertex in the middle"""
    d = all_pairs_distances(primitive("path", 5))
    cert = verify_general_position(d, [4, 0, 2])
    assert cert.verdict == VIOLATED
    assert cert.violating_triple == (0, 2, 4)
    assert cert.separation_k is None

    for triple in itertools.combinations(range(5), 3):
        assert not verify_general_position(d, triple).ok


def test_verify_strong_corners():
    """Test the corners of the 3x3 strong grid"""
    g = lattice(LatticeSpec("strong", (3, 3)))
    cert = verify_general_position(all_pairs_distances(g), [0, 2, 6, 8])
    assert cert.ok
    assert cert.separation_k == 2


def test_verify_orientation_puts_middle_second():
    """Test the reported triple satisfies d(a, c) = d(a, b) + d(b, c)"""
    d = all_pairs_distances(primitive("path", 6))
    a, b, c = verify_general_position(d, [5, 1, 3]).violating_triple
    assert d(a, c) == d(a, b) + d(b, c)
    assert b == 3


def test_verify_small_sets():
    """Test sets of one or two vertices are vacuously in general position"""
    d = all_pairs_distances(primitive("path", 5))
    single = verify_general_position(d, [3])
    assert single.ok
    assert single.separation_k is None
    pair = verify_general_position(d, [0, 4, 4])
    assert pair.ok
    assert pair.separation_k == 3


def test_verify_rejects_bad_input():
    """Test empty and out-of-range sets"""
    d = all_pairs_distances(primitive("path", 3))
    with pytest.raises(GraphError, match="empty"):
        verify_general_position(d, [])
    with pytest.raises(GraphError, match="out of range"):
        verify_general_position(d, [0, 3])


def test_separation_examples():
    """Test separation k on complete graphs and collinear sets"""
    k4 = all_pairs_distances(primitive("complete", 4))
    assert separation_witness(k4, range(4)) == 1

    p5 = all_pairs_distances(primitive("path", 5))
    assert separation_witness(p5, [0, 2, 4]) is None
    with pytest.raises(GraphError):
        separation_witness(p5, [1])


def test_certificate_to_dict():
    """Test certificate serialization"""
    d = all_pairs_distances(primitive("path", 3))
    payload = verify_general_position(d, [0, 1, 2]).to_dict()
    assert payload == {"verdict": VIOLATED, "violating_triple": [0, 1, 2], "separation_k": None}


def test_verify_matches_brute_force(zoo):
    """Test verdicts and first triples against an independent triple loop"""
    rng = np.random.default_rng(11)
    for g in zoo:
        d = all_pairs_distances(g)
        for _ in range(1000):
            size = int(rng.integers(1, min(g.n, 8) + 1))
            s = rng.choice(g.n, size=size, replace=False).tolist()
            cert = verify_general_position(d, s)
            expected = _oracle_first_triple(d, s)
            assert cert.ok == (expected is None)
            if expected is not None:
                assert tuple(sorted(cert.violating_triple)) == expected


def test_separation_implies_general_position(zoo):
    """Test a separation k always comes with a general position verdict"""
    rng = np.random.default_rng(5)
    for g in zoo:
        d = all_pairs_distances(g)
        for _ in range(300):
            s = rng.choice(g.n, size=int(rng.integers(2, min(g.n, 6) + 1)), replace=False)
            k = separation_witness(d, s.tolist())
            if k is not None:
                assert verify_general_position(d, s.tolist()).ok
                pairs = [d(x, y) for x, y in itertools.combinations(s.tolist(), 2)]
                assert k <= min(pairs) and max(pairs) < 2 * k

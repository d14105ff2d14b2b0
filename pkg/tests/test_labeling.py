"""
Tests for the monotone-geodesic labeling checker
"""

import pytest

from gp_toolkit.core.cliques import clique_number
from gp_toolkit.core.distances import all_pairs_distances
from gp_toolkit.core.graph import Labeling
from gp_toolkit.exceptions import LabelingError, SizeLimitError
from gp_toolkit.generators.lattices import LatticeSpec, attach_labeling, lattice, primitive
from gp_toolkit.geodesy.betweenness import lies_on_common_geodesic
from gp_toolkit.monotone.labeling import (
    MONOTONE_GEODESIC,
    VIOLATED,
    check_monotone_geodesic_labeling,
    check_monotone_triple,
)
from gp_toolkit.solver.search import max_general_position


def _check(spec, scheme):
    g = attach_labeling(lattice(spec), scheme)
    return check_monotone_geodesic_labeling(g, all_pairs_distances(g))


@pytest.mark.parametrize(
    "p, q, r, expected",
    [
        ((0, 0), (2, 1), (3, 4), True),
        ((0, 0), (1, 2), (2, 1), False),
        ((3, 4), (0, 0), (2, 1), True),
        ((0, 0), (0, 1), (1, 0), True),
        ((0, 0), (0, 0), (5, -5), True),
    ],
)
def test_check_monotone_triple(p, q, r, expected):
    """Test some point lies coordinatewise between the other two"""
    assert check_monotone_triple(p, q, r) is expected


def test_grid_natural_labeling_passes():
    """Test the natural labeling of the 2-dim grid is monotone-geodesic"""
    cert = _check(LatticeSpec("cartesian", (6, 6)), "natural")
    assert cert.verdict == MONOTONE_GEODESIC
    assert cert.ok
    assert cert.counterexample is None


def test_strong_natural_labeling_fails():
    """Test the natural labeling of the strong grid fails on a unit triangle"""
    cert = _check(LatticeSpec("strong", (6, 6)), "natural")
    assert cert.verdict == VIOLATED
    assert cert.counterexample == (0, 1, 6)
    assert cert.labels == ((0, 0), (0, 1), (1, 0))


def test_strong_rotated_labeling_passes():
    """Test the rotated labeling (i + j, j - i) of the strong grid"""
    assert _check(LatticeSpec("strong", (6, 6)), "rotated").ok


@pytest.mark.parametrize("scheme", ["natural", "rotated"])
def test_triangular_labelings_fail(scheme):
    """Test neither labeling of the triangular grid is monotone-geodesic"""
    spec = LatticeSpec("triangular", (5, 5))
    g = attach_labeling(lattice(spec), scheme)
    d = all_pairs_distances(g)
    cert = check_monotone_geodesic_labeling(g, d)
    assert cert.verdict == VIOLATED
    a, b, c = cert.counterexample
    assert a < b < c
    assert check_monotone_triple(*cert.labels)
    assert not lies_on_common_geodesic(d, a, b, c)


def test_counterexample_is_lexicographically_first():
    """Test no earlier triple of the strong grid is a counterexample"""
    spec = LatticeSpec("strong", (4, 4))
    g = lattice(spec)
    d = all_pairs_distances(g)
    cert = check_monotone_geodesic_labeling(g, d)
    first = None
    for a in range(g.n):
        for b in range(a + 1, g.n):
            for c in range(b + 1, g.n):
                labels = (g.labels[a], g.labels[b], g.labels[c])
                if check_monotone_triple(*labels) and not lies_on_common_geodesic(d, a, b, c):
                    first = (a, b, c)
                    break
            if first:
                break
        if first:
            break
    assert cert.counterexample == first


def test_certificate_to_dict():
    """Test certificate serialization"""
    payload = _check(LatticeSpec("strong", (3, 3)), "natural").to_dict()
    assert payload["verdict"] == VIOLATED
    assert payload["counterexample"] == [0, 1, 3]
    assert payload["labels"] == [[0, 0], [0, 1], [1, 0]]


def test_explicit_labeling_argument(star):
    """Test an explicit labeling overrides the graph's own"""
    d = all_pairs_distances(star)
    spread = Labeling(2, ((0, 0), (1, 0), (0, 1), (-1, -1)))
    assert check_monotone_geodesic_labeling(star, d, spread).ok

    in_a_row = Labeling(2, ((0, 0), (1, 0), (2, 0), (3, 0)))
    cert = check_monotone_geodesic_labeling(star, d, in_a_row)
    assert cert.verdict == VIOLATED
    assert cert.counterexample == (1, 2, 3)


def test_missing_labeling():
    """Test an unlabeled graph is rejected"""
    g = lattice(LatticeSpec("cartesian", (3, 3))).with_labels(None)
    with pytest.raises(LabelingError, match="no labeling"):
        check_monotone_geodesic_labeling(g, all_pairs_distances(g))


def test_wrong_dimension():
    """Test 3-dim labels are rejected"""
    g = lattice(LatticeSpec("cartesian", (2, 2, 2)))
    with pytest.raises(LabelingError, match="2-dimensional"):
        check_monotone_geodesic_labeling(g, all_pairs_distances(g))


def test_wrong_length():
    """Test labelings must cover every vertex"""
    g = primitive("path", 3)
    short = Labeling(2, ((0, 0), (1, 0)))
    with pytest.raises(LabelingError, match="covers 2"):
        check_monotone_geodesic_labeling(g, all_pairs_distances(g), short)


def test_size_cap():
    """Test the cubic scan refuses patches above the cap"""
    g = lattice(LatticeSpec("strong", (11, 11)))
    with pytest.raises(SizeLimitError):
        check_monotone_geodesic_labeling(g, all_pairs_distances(g))


@pytest.mark.parametrize(
    "spec, scheme",
    [
        (LatticeSpec("cartesian", (4, 4)), "natural"),
        (LatticeSpec("strong", (4, 4)), "rotated"),
    ],
)
def test_passing_labeling_bounds_gp_and_clique(spec, scheme):
    """Test patches with a monotone-geodesic labeling have gp and omega at most 4"""
    g = attach_labeling(lattice(spec), scheme)
    d = all_pairs_distances(g)
    assert check_monotone_geodesic_labeling(g, d).ok
    assert max_general_position(g, d).size <= 4
    assert clique_number(g) <= 4

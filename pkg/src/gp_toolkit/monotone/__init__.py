"""Monotone subsequences, monotone point triples and the labeling checker"""

from .labeling import (
    MONOTONE_GEODESIC,
    LabelingCertificate,
    check_monotone_geodesic_labeling,
    check_monotone_triple,
)
from .sequences import (
    NONDECREASING,
    NONINCREASING,
    MonotoneWitness,
    forcing_count,
    is_monotone,
    longest_monotone_subsequence,
    monotone_point_subsequence,
    monotone_point_triple,
)

__all__ = [
    "MONOTONE_GEODESIC",
    "NONDECREASING",
    "NONINCREASING",
    "LabelingCertificate",
    "MonotoneWitness",
    "check_monotone_geodesic_labeling",
    "check_monotone_triple",
    "forcing_count",
    "is_monotone",
    "longest_monotone_subsequence",
    "monotone_point_subsequence",
    "monotone_point_triple",
]

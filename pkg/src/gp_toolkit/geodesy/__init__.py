"""Geodesic betweenness, general position certificates and isometric path covers"""

from .betweenness import (
    GENERAL_POSITION,
    VIOLATED,
    GpCertificate,
    is_between,
    lies_on_common_geodesic,
    separation_witness,
    verify_general_position,
)
from .covers import (
    COVER_CONDITIONAL,
    COVER_GLOBAL,
    BoundReport,
    IsometricPathCover,
    benes_cover,
    gp_upper_bound,
    greedy_isometric_cover_from,
    min_isometric_cover_size,
    verify_isometric_cover,
)

__all__ = [
    "COVER_CONDITIONAL",
    "COVER_GLOBAL",
    "GENERAL_POSITION",
    "VIOLATED",
    "BoundReport",
    "GpCertificate",
    "IsometricPathCover",
    "benes_cover",
    "gp_upper_bound",
    "greedy_isometric_cover_from",
    "is_between",
    "lies_on_common_geodesic",
    "min_isometric_cover_size",
    "separation_witness",
    "verify_general_position",
    "verify_isometric_cover",
]

"""Witness library and the reproduction report"""

from .claims import (
    MATCH,
    MISMATCH,
    SCOPES,
    SKIPPED,
    WITHIN_BOUNDS,
    ReportRow,
    run_report,
)
from .witnesses import (
    ES_EXAMPLE,
    WITNESS_LIBRARY,
    Witness,
    get_witness,
    resolve_witness,
    self_test,
    witness_host,
)

__all__ = [
    "ES_EXAMPLE",
    "MATCH",
    "MISMATCH",
    "SCOPES",
    "SKIPPED",
    "WITHIN_BOUNDS",
    "WITNESS_LIBRARY",
    "ReportRow",
    "Witness",
    "get_witness",
    "resolve_witness",
    "run_report",
    "self_test",
    "witness_host",
]

"""
Custom exceptions for GP Toolkit
"""


class GeneralPositionError(Exception):
    """Base exception for GP Toolkit"""

    pass


class ConfigurationError(GeneralPositionError):
    """Raised when configuration is invalid"""

    pass


class GraphError(GeneralPositionError):
    """Raised when a graph cannot be built or queried"""

    pass


class EmbeddingError(GraphError):
    """Raised when a vertex map is not an injective, edge-preserving map"""

    pass


class SizeLimitError(GeneralPositionError):
    """Raised when an exact computation is asked for a graph that is too large"""

    pass


class LabelingError(GeneralPositionError):
    """Raised when a labeling is invalid for the requested operation"""

    pass


class MonotoneError(GeneralPositionError):
    """Raised when a monotone extraction gets too little input"""

    pass


class CoverError(GeneralPositionError):
    """Raised when an isometric path cover cannot be built"""

    pass


class SolverError(GeneralPositionError):
    """Raised when solver options are inconsistent"""

    pass


class WitnessError(GeneralPositionError):
    """Raised when a library witness cannot be resolved"""

    pass


class ValidationError(GeneralPositionError):
    """Raised when input data validation fails"""

    pass

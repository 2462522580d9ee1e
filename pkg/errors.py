"""
Exception hierarchy shared by every package
"""

from typing import Optional

from config import EXIT_DEGENERATE, EXIT_INPUT, EXIT_RESOURCE

__all__ = [
    "FriezeError",
    "ParseError",
    "ModelMismatch",
    "ConfigMismatch",
    "DomainError",
    "MalformedTriangulation",
    "MalformedPath",
    "DegenerateDiagonal",
    "HeronViolation",
    "AntipodalOrCoincident",
    "ExactSqrtUnavailable",
    "CoherencePivotZero",
    "InterlockMismatch",
    "PreconditionViolation",
    "IndexOutsideWindow",
    "ResourceLimitExceeded",
]


class FriezeError(Exception):
    """Base class; `exit_code` is the CLI status the error maps to."""

    exit_code = EXIT_DEGENERATE

    def __init__(self, message: str, index: Optional[object] = None):
        self.index = index
        if index is not None:
            message = f"{message} at {index}"
        super().__init__(message)


# Input problems (exit 2)


class ParseError(FriezeError):
    exit_code = EXIT_INPUT


class ModelMismatch(FriezeError):
    """Exact and float scalars mixed in one operation."""

    exit_code = EXIT_INPUT


class ConfigMismatch(FriezeError):
    exit_code = EXIT_INPUT


class DomainError(FriezeError):
    exit_code = EXIT_INPUT


class MalformedTriangulation(FriezeError):
    exit_code = EXIT_INPUT


class MalformedPath(FriezeError):
    exit_code = EXIT_INPUT


class IndexOutsideWindow(FriezeError):
    exit_code = EXIT_INPUT


# Mathematical degeneracy (exit 3)


class DegenerateDiagonal(FriezeError):
    pass


class HeronViolation(FriezeError):
    pass


class AntipodalOrCoincident(FriezeError):
    pass


class ExactSqrtUnavailable(FriezeError):
    pass


class CoherencePivotZero(FriezeError):
    pass


class InterlockMismatch(FriezeError):
    pass


class PreconditionViolation(FriezeError):
    pass


# Resource caps (exit 4)


class ResourceLimitExceeded(FriezeError):
    exit_code = EXIT_RESOURCE

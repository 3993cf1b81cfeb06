"""
Base exceptions and errors for orthogoval.
"""

__all__ = [
    "OrthogovalException",
    "OrthogovalError",
    "FieldError",
    "UnsupportedOrderError",
    "UndefinedPointError",
    "IncidenceError",
    "VerificationError",
    "FormatError",
    "SearchExhaustedError",
]


class OrthogovalException(Exception):
    """Base class for exceptions in orthogoval."""


class OrthogovalError(OrthogovalException, ValueError):
    """Exception for a serious error in orthogoval, usually invalid input."""


class FieldError(OrthogovalError):
    """Raised for an invalid field description or an illegal field operation."""


class UnsupportedOrderError(OrthogovalError):
    """Raised when a field or plane order is outside the supported range."""


class UndefinedPointError(OrthogovalError):
    """Raised when a partial map is evaluated where it is undefined."""


class IncidenceError(OrthogovalError):
    """Raised when planes, spreads or arrays are structurally incompatible."""


class VerificationError(OrthogovalException):
    """Raised when a constructed object fails its own verification."""


class FormatError(OrthogovalError):
    """Raised when a plane, CPHF, covering array or matrix file cannot be read."""


class SearchExhaustedError(OrthogovalException):
    """Raised when a bounded search ends without the requested result.

    The partial result, when there is one, is available as ``partial``.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial

"""
Custom exceptions for collineate.

This module defines a hierarchy of exceptions used throughout the engine
to provide clear and actionable error messages.
"""

from typing import Optional


class CollineateError(Exception):
    """
    Base exception for all collineate errors.

    All custom exceptions should inherit from this class.
    """

    def __init__(self, message: str, details: str = ""):
        self.message = message
        self.details = details
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.details:
            return f"{self.message}\n  Details: {self.details}"
        return self.message


class ConfigError(CollineateError):
    """Raised when there's a configuration error."""
    pass


class ValidationError(CollineateError):
    """Raised when a problem file fails validation."""
    pass


class ExprError(CollineateError):
    """Raised for errors in the expression kernel."""
    pass


class ParseError(ExprError):
    """
    Raised when an expression string does not conform to the grammar.

    The byte offset of the offending token is kept so callers can point
    at the exact location inside a problem file.
    """

    def __init__(self, message: str, offset: int, text: str = ""):
        self.offset = offset
        self.text = text
        details = ""
        if text:
            details = f"{text}\n  {' ' * offset}^ (offset {offset})"
        super().__init__(message, details)


class EvaluationError(ExprError):
    """Raised on a pole or domain error during floating evaluation."""
    pass


class UndecidableSampleError(ExprError):
    """Raised when every random sample point of a zero test hits a pole."""
    pass


class GeometryError(CollineateError):
    """Raised for invalid geometric input."""
    pass


class DegenerateMetricError(GeometryError):
    """Raised when a metric has vanishing determinant."""
    pass


class SolverError(CollineateError):
    """Raised when a determining-equation solve fails."""
    pass


class AnsatzError(SolverError):
    """Raised for an empty or malformed ansatz basis."""
    pass


class MatchingError(SolverError):
    """
    Raised when coefficient matching meets a function product that is not
    a polynomial in the basis generators.
    """

    def __init__(self, message: str, product: Optional[str] = None):
        self.product = product
        super().__init__(message, f"Offending product: {product}" if product else "")


class SymmetryError(CollineateError):
    """Raised when a symmetry check cannot be carried out."""
    pass


class AssemblerError(CollineateError):
    """Raised when the symmetry assembly fails."""
    pass


class CaseError(CollineateError):
    """Raised for invalid parameters of a built-in case."""
    pass


class SpecialFunctionError(CollineateError):
    """Raised when a special function is evaluated outside its domain."""
    pass


class VerificationError(CollineateError):
    """Raised when an independent verification cannot be completed."""
    pass

"""Validators for collineate input."""

from collineate.validators.problem import (
    Problem,
    ProblemOptions,
    is_valid_matrix,
    load_problem,
    validate_metric,
    validate_options,
    validate_problem,
)

__all__ = [
    "Problem",
    "ProblemOptions",
    "is_valid_matrix",
    "load_problem",
    "validate_metric",
    "validate_options",
    "validate_problem",
]

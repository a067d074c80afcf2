"""Built-in systems, closed-form solutions and residual verification."""

from collineate.cases.solutions import (
    EvaluationMode,
    FieldSolution,
    SolutionMode,
    solution_from_strings,
    zero_solution,
)
from collineate.cases.special import bessel_i, bessel_k, ferrers_p, hyp2f1
from collineate.cases.verify import ResidualReport, SolutionVerifier, sample_points, verify_solution
from collineate.cases.base import BaseCase
from collineate.cases.registry import CaseRegistry, get_case, list_cases
from collineate.cases.laplace import euclidean_metric, flat_laplace, make_laplace_system
from collineate.cases.sigma import check_sigma_connection, make_sigma_model, sigma_metric
from collineate.cases.gup import (
    GupParameters,
    check_transform,
    gup_fourth_order,
    gup_hyperbolic_solution,
    gup_minkowski_solution,
    gup_transform_solution,
    hyperbolic_metric,
    make_gup_system,
    minkowski_metric,
)

__all__ = [
    "BaseCase",
    "CaseRegistry",
    "EvaluationMode",
    "FieldSolution",
    "GupParameters",
    "ResidualReport",
    "SolutionMode",
    "SolutionVerifier",
    "bessel_i",
    "bessel_k",
    "check_sigma_connection",
    "check_transform",
    "euclidean_metric",
    "ferrers_p",
    "flat_laplace",
    "get_case",
    "gup_fourth_order",
    "gup_hyperbolic_solution",
    "gup_minkowski_solution",
    "gup_transform_solution",
    "hyp2f1",
    "hyperbolic_metric",
    "list_cases",
    "make_gup_system",
    "make_laplace_system",
    "make_sigma_model",
    "minkowski_metric",
    "sample_points",
    "sigma_metric",
    "solution_from_strings",
    "verify_solution",
]

"""Differential geometry over symbolic metrics."""

from collineate.geometry.metric import Connection, Metric, MetricRole, VField
from collineate.geometry.tensors import (
    christoffel,
    contracted_christoffel,
    divergence,
    gradient,
    hessian,
    inverse_metric,
    killing_tensor_defect,
    laplacian,
    lie_bracket,
    lie_derivative_connection,
    lie_derivative_metric,
    lie_derivative_scalar,
    lower,
    metric_covariant_derivative,
    ricci_scalar,
    ricci_tensor,
    riemann,
    vector_laplacian,
)

__all__ = [
    "Connection",
    "Metric",
    "MetricRole",
    "VField",
    "christoffel",
    "contracted_christoffel",
    "divergence",
    "gradient",
    "hessian",
    "inverse_metric",
    "killing_tensor_defect",
    "laplacian",
    "lie_bracket",
    "lie_derivative_connection",
    "lie_derivative_metric",
    "lie_derivative_scalar",
    "lower",
    "metric_covariant_derivative",
    "ricci_scalar",
    "ricci_tensor",
    "riemann",
    "vector_laplacian",
]

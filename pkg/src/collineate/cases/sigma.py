"""
Nonlinear sigma model on a space of constant curvature K.

The target metric is conformally flat, H_AB = U delta_AB with
U = (1 + K/4 u.u)^-2, so the system is

    g^ij u^A_ij + g^ij C^A_BC u^B_i u^C_j - Gamma^i u^A_i = 0

with C^A_BC = -(K sqrt(U)/2) (u_C delta^A_B + u_B delta^A_C - u^A delta_BC).
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import sympy as sp

from collineate.cases.base import BaseCase
from collineate.cases.laplace import euclidean_metric, field_coordinates, make_laplace_system
from collineate.cases.registry import CaseRegistry
from collineate.cases.solutions import FieldSolution, zero_solution
from collineate.collineations import CollineationSolver
from collineate.core.exceptions import CaseError
from collineate.core.utils import EngineContext
from collineate.expr import is_zero, parse, simplify
from collineate.geometry import Connection, Metric, MetricRole, christoffel
from collineate.symmetry import Generator, QuasilinearSystem


def conformal_factor(K: sp.Expr, u) -> sp.Expr:
    return (1 + sp.sympify(K) / 4 * sum(c ** 2 for c in u)) ** -2


def sigma_metric(K: sp.Expr, m: int) -> Metric:
    """H = U delta on u1..um."""
    u = field_coordinates(m)
    return Metric.diagonal(u, [conformal_factor(K, u)] * m, MetricRole.DEPENDENT)


def sigma_connection(K: sp.Expr, m: int, factor: Optional[sp.Expr] = None) -> Connection:
    """
    -(K f/2) (u_C delta^A_B + u_B delta^A_C - u^A delta_BC) with f = sqrt(U)
    unless ``factor`` is given.
    """
    u = field_coordinates(m)
    K = sp.sympify(K)
    f = sp.sqrt(conformal_factor(K, u)) if factor is None else factor
    delta = sp.eye(m)

    def coefficient(A: int, B: int, C: int) -> sp.Expr:
        bracket = u[C] * delta[A, B] + u[B] * delta[A, C] - u[A] * delta[B, C]
        return simplify(-K * f / 2 * bracket)

    return Connection(
        tuple(u),
        tuple(tuple(tuple(coefficient(A, B, C) for C in range(m)) for B in range(m)) for A in range(m)),
    )


@dataclass(frozen=True)
class ConnectionCheck:
    """Whether christoffel(H) equals the closed form (derived) and the form with factor U (printed)."""

    derived: bool
    printed: bool

    def to_dict(self):
        return {"derived": self.derived, "printed": self.printed}


def check_sigma_connection(K: sp.Expr, m: int, ctx: Optional[EngineContext] = None) -> ConnectionCheck:
    ctx = ctx or EngineContext()
    H = sigma_metric(K, m)
    actual = christoffel(H)
    u = H.coords

    def agrees(expected: Connection) -> bool:
        return all(
            is_zero(actual[A, B, C] - expected[A, B, C], ctx)
            for A in range(m)
            for B in range(m)
            for C in range(m)
        )

    return ConnectionCheck(
        derived=agrees(sigma_connection(K, m)),
        printed=agrees(sigma_connection(K, m, factor=conformal_factor(K, u))),
    )


def make_sigma_model(
    K: sp.Expr,
    m: int,
    g: Optional[Metric] = None,
    name: str = "sigma-model",
    ctx: Optional[EngineContext] = None,
) -> QuasilinearSystem:
    """
    Sigma model over ``g`` (flat three-dimensional by default).

    Raises:
        CaseError: For K = 0 (use the Laplace system) or a connection that
            does not match its closed form.
    """
    ctx = ctx or EngineContext()
    K = sp.sympify(K)
    if simplify(K) == 0:
        raise CaseError("K = 0 gives the flat Laplace system", "use make_laplace_system")
    if m < 1:
        raise CaseError(f"m must be positive, got {m}")
    g = g or euclidean_metric(3)
    if not check_sigma_connection(K, m, ctx).derived:
        raise CaseError("connection of the sigma-model metric differs from its closed form")
    return make_laplace_system(g, sigma_metric(K, m), name=name, ctx=ctx)


class SigmaModelCase(BaseCase):
    """Sigma model with constant-curvature target over flat n-space."""

    NAME = "sigma-model"
    DISPLAY_NAME = "Nonlinear sigma model"
    DESCRIPTION = "H = (1 + K/4 u.u)^-2 delta over Euclidean g"
    BOUND_CASE = "sigma-model"
    OPTIONS = {"n": 3, "m": 2, "K": 1}

    @property
    def curvature(self) -> sp.Expr:
        return parse(str(self.options["K"]))

    def build(self) -> QuasilinearSystem:
        return make_sigma_model(
            self.curvature, int(self.options["m"]), euclidean_metric(int(self.options["n"])), ctx=self.ctx
        )

    def solutions(self) -> List[FieldSolution]:
        return [zero_solution(self.system.x, self.system.m)]

    def generators(self) -> Dict[str, Generator]:
        x, u = self.system.x, self.system.u
        if len(u) < 2:
            return {}
        eta = [-u[1], u[0]] + [0] * (len(u) - 2)
        return {"rotation": Generator(x, u, [0] * len(x), eta, "rotation")}

    def checks(self) -> Dict[str, Any]:
        connection = check_sigma_connection(self.curvature, int(self.options["m"]), self.ctx)
        if not connection.printed:
            self.logger.warning("connection with factor K U/2 does not match christoffel(H); K sqrt(U)/2 does")
        kv = CollineationSolver(verbose=self.verbose, ctx=self.ctx).solve_kv(self.system.H)
        return {"connection": connection.to_dict(), "kv_H": kv.dimension}


CaseRegistry.register(SigmaModelCase)

"""
Quasilinear Laplace systems g^ij u^A_ij - Gamma^i u^A_i = 0.
"""

from typing import Dict, List, Optional, Sequence

import sympy as sp

from collineate.cases.base import BaseCase
from collineate.cases.registry import CaseRegistry
from collineate.cases.solutions import FieldSolution, zero_solution
from collineate.core.exceptions import CaseError
from collineate.core.utils import EngineContext
from collineate.geometry import Metric, MetricRole
from collineate.symmetry import Generator, QuasilinearSystem, euler_lagrange


def euclidean_metric(dim: int, prefix: str = "x", role: MetricRole = MetricRole.INDEPENDENT) -> Metric:
    """delta on coordinates prefix1..prefix<dim>."""
    if dim < 1:
        raise CaseError(f"dimension must be positive, got {dim}")
    coords = sp.symbols(f"{prefix}1:{dim + 1}")
    return Metric.diagonal(coords, [1] * dim, role)


def field_coordinates(m: int, prefix: str = "u") -> Sequence[sp.Symbol]:
    return sp.symbols(f"{prefix}1:{m + 1}")


def make_laplace_system(
    g: Metric,
    H: Metric,
    name: str = "laplace",
    ctx: Optional[EngineContext] = None,
) -> QuasilinearSystem:
    """
    The Euler-Lagrange system of L = 1/2 sqrt|g| g^ij H_AB u^A_i u^B_j, i.e.
    the quasilinear Laplace system with zero sources.

    Raises:
        CaseError: If g has fewer than two coordinates.
    """
    if g.dim < 2:
        raise CaseError(f"the Laplace system needs n >= 2, got {g.dim}")
    return euler_lagrange(g, H, sp.S.Zero, name=name, ctx=ctx or EngineContext())


def flat_laplace(n: int, m: int, ctx: Optional[EngineContext] = None) -> QuasilinearSystem:
    """delta^ij u^A_ij = 0 for n independent and m dependent variables."""
    return make_laplace_system(
        euclidean_metric(n),
        euclidean_metric(m, "u", MetricRole.DEPENDENT),
        name=f"laplace-flat-{n}x{m}",
        ctx=ctx,
    )


class LaplaceFlatCase(BaseCase):
    """delta^ij u^A_ij = 0 on flat n-space with a flat m-dimensional target."""

    NAME = "laplace-flat"
    DISPLAY_NAME = "Flat quasilinear Laplace system"
    DESCRIPTION = "n independent, m dependent variables, g and H Euclidean"
    BOUND_CASE = "laplace-flat"
    OPTIONS = {"n": 3, "m": 2}

    def build(self) -> QuasilinearSystem:
        return flat_laplace(int(self.options["n"]), int(self.options["m"]), self.ctx)

    def solutions(self) -> List[FieldSolution]:
        x = self.system.x
        harmonic = tuple(x[0] * x[1] + A * (x[0] ** 2 - x[1] ** 2) for A in range(self.system.m))
        return [
            zero_solution(x, self.system.m),
            FieldSolution("harmonic-polynomial", x, harmonic),
        ]

    def generators(self) -> Dict[str, Generator]:
        x, u = self.system.x, self.system.u
        zeros_x, zeros_u = [0] * len(x), [0] * len(u)
        return {
            "dilation": Generator(x, u, x, zeros_u, "dilation"),
            "scaling": Generator(x, u, zeros_x, u, "scaling"),
        }


CaseRegistry.register(LaplaceFlatCase)

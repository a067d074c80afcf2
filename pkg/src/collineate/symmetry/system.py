"""
Quasilinear second-order systems that follow from a Lagrangian

    L = 1/2 sqrt|g| g^ij H_AB u^A_i u^B_j - sqrt|g| V(x, u)

and their Euler-Lagrange equations

    P^A = g^ij u^A_ij + g^ij C^A_BC u^B_i u^C_j - Gamma^i u^A_i + F^A = 0.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Optional, Sequence, Tuple

import sympy as sp

from collineate.core.exceptions import SymmetryError
from collineate.core.utils import EngineContext
from collineate.expr import differentiate, eval_float, is_zero, simplify, to_string
from collineate.geometry import Connection, Metric, VField, christoffel, contracted_christoffel
from collineate.symmetry.jets import JetSpace


def volume_element(g: Metric, ctx: Optional[EngineContext] = None) -> sp.Expr:
    """
    sqrt|det g|.

    The sign of the determinant is read off at one sample point, so the
    determinant must not change sign on the chart.
    """
    ctx = ctx or EngineContext()
    det = g.determinant
    if det.free_symbols:
        rng = ctx.rng("volume", sp.srepr(det))
        point = {s.name: sp.Rational(rng.randint(1, 40), 17) for s in det.free_symbols}
        sign = 1 if eval_float(det, point, ctx.precision) > 0 else -1
    else:
        sign = 1 if det > 0 else -1
    return simplify(sp.powdenest(sp.sqrt(sign * det), force=True))


def lagrangian(g: Metric, H: Metric, V: sp.Expr, jets: JetSpace, ctx: Optional[EngineContext] = None) -> sp.Expr:
    sqrt_g = volume_element(g, ctx)
    ginv = g.inverse_components
    kinetic = sum(
        ginv[i, j] * H[A, B] * jets.first(A, i) * jets.first(B, j)
        for i in range(jets.n)
        for j in range(jets.n)
        for A in range(jets.m)
        for B in range(jets.m)
    )
    return simplify(sqrt_g * (kinetic / 2 - V))


def potential_sources(H: Metric, V: sp.Expr) -> Tuple[sp.Expr, ...]:
    """F^A = H^AB V_,B"""
    Hinv = H.inverse_components
    dV = [differentiate(V, u) for u in H.coords]
    return tuple(simplify(sum(Hinv[A, B] * dV[B] for B in range(H.dim))) for A in range(H.dim))


@dataclass
class QuasilinearSystem:
    """
    Data of a quasilinear n x m system: g, H and the sources F^A.

    ``V`` is kept when the sources derive from a potential, F^A = H^AB V_,B.
    """

    g: Metric
    H: Metric
    F: Tuple[sp.Expr, ...]
    V: Optional[sp.Expr] = None
    name: str = ""
    ctx: EngineContext = field(default_factory=EngineContext)

    def __post_init__(self) -> None:
        if self.g.dim < 2:
            raise SymmetryError("systems with a single independent variable are not supported (n >= 2)")
        self.F = tuple(simplify(f) for f in self.F)
        if len(self.F) != self.H.dim:
            raise SymmetryError(f"expected {self.H.dim} sources, got {len(self.F)}")
        JetSpace(self.g.coords, self.H.coords)
        if self.V is not None:
            self.V = simplify(self.V)
            for A, expected in enumerate(potential_sources(self.H, self.V)):
                if not is_zero(self.F[A] - expected, self.ctx):
                    raise SymmetryError(
                        "sources do not derive from the potential",
                        f"F^{A} = {to_string(self.F[A])}, H^AB V_,B = {to_string(expected)}",
                    )

    @property
    def n(self) -> int:
        return self.g.dim

    @property
    def m(self) -> int:
        return self.H.dim

    @property
    def x(self) -> Tuple[sp.Symbol, ...]:
        return self.g.coords

    @property
    def u(self) -> Tuple[sp.Symbol, ...]:
        return self.H.coords

    @cached_property
    def jets(self) -> JetSpace:
        return JetSpace(self.g.coords, self.H.coords)

    @cached_property
    def gamma(self) -> VField:
        return contracted_christoffel(self.g)

    @cached_property
    def connection(self) -> Connection:
        return christoffel(self.H)

    def trace_coefficient(self, i: int, j: int) -> sp.Expr:
        """Coefficient of the stored jet u^A_ij in P^A."""
        ginv = self.g.inverse_components
        return ginv[i, j] if i == j else 2 * ginv[i, j]

    def pivot(self) -> Tuple[int, int]:
        """Second-jet slot (i, j) used to eliminate the trace; the first nonzero g^ij."""
        for i in range(self.n):
            if self.g.inverse_components[i, i] != 0:
                return i, i
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.g.inverse_components[i, j] != 0:
                    return i, j
        raise SymmetryError("inverse metric has no nonzero component")

    @cached_property
    def equations(self) -> Tuple[sp.Expr, ...]:
        """P^A in the jet symbols."""
        jets = self.jets
        ginv = self.g.inverse_components
        C = self.connection
        result = []
        for A in range(self.m):
            total = sum(
                self.trace_coefficient(i, j) * jets.second(A, i, j)
                for i in range(self.n)
                for j in range(i, self.n)
            )
            total += sum(
                ginv[i, j] * C[A, B, D] * jets.first(B, i) * jets.first(D, j)
                for i in range(self.n)
                for j in range(self.n)
                for B in range(self.m)
                for D in range(self.m)
            )
            total -= sum(self.gamma[i] * jets.first(A, i) for i in range(self.n))
            total += self.F[A]
            result.append(simplify(total))
        return tuple(result)

    @cached_property
    def lagrangian(self) -> sp.Expr:
        if self.V is None:
            raise SymmetryError("system has no potential, so no Lagrangian of the standard form")
        return lagrangian(self.g, self.H, self.V, self.jets, self.ctx)

    def residuals(self, fields: Sequence[sp.Expr]) -> Tuple[sp.Expr, ...]:
        """
        P^A with u^A replaced by ``fields`` and the jets by their derivatives.

        The result is not brought to canonical form; fields may contain
        special-function terms that only evaluate numerically.
        """
        if len(fields) != self.m:
            raise SymmetryError(f"expected {self.m} fields, got {len(fields)}")
        jets = self.jets
        fields = [sp.sympify(f) for f in fields]
        replacement: Dict[sp.Symbol, sp.Expr] = dict(zip(self.u, fields))
        for A, f in enumerate(fields):
            for i in range(self.n):
                first = sp.diff(f, self.x[i])
                replacement[jets.first(A, i)] = first
                for j in range(i, self.n):
                    replacement[jets.second(A, i, j)] = sp.diff(first, self.x[j])
        return tuple(p.xreplace(replacement) for p in self.equations)

    def describe(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "n": self.n,
            "m": self.m,
            "g": self.g.to_strings(),
            "H": self.H.to_strings(),
            "F": [to_string(f) for f in self.F],
            "V": to_string(self.V) if self.V is not None else None,
            "equations": [to_string(p) for p in self.equations],
        }


def variational_derivative(L: sp.Expr, jets: JetSpace) -> Tuple[sp.Expr, ...]:
    """E_A = dL/du^A - D_i(dL/du^A_i)."""
    result = []
    for A in range(jets.m):
        total = differentiate(L, jets.u[A])
        for i in range(jets.n):
            total -= jets.total_derivative(differentiate(L, jets.first(A, i)), i)
        result.append(simplify(total))
    return tuple(result)


def euler_lagrange(
    g: Metric,
    H: Metric,
    V: sp.Expr,
    name: str = "",
    ctx: Optional[EngineContext] = None,
) -> QuasilinearSystem:
    """
    Build the Euler-Lagrange system of the standard Lagrangian.

    The quasilinear form is checked against the direct variational derivative:
    E_A + sqrt|g| H_AB P^B must vanish identically.
    """
    ctx = ctx or EngineContext()
    jets = JetSpace(g.coords, H.coords)
    system = QuasilinearSystem(g, H, potential_sources(H, V), V=V, name=name, ctx=ctx)

    sqrt_g = volume_element(g, ctx)
    variational = variational_derivative(system.lagrangian, jets)
    for A in range(H.dim):
        lowered = sum(H[A, B] * system.equations[B] for B in range(H.dim))
        if not is_zero(variational[A] + sqrt_g * lowered, ctx):
            raise SymmetryError(
                "quasilinear form disagrees with the variational derivative",
                f"field {H.coords[A].name}",
            )
    return system


def make_system(
    g: Metric,
    H: Metric,
    sources: Sequence[sp.Expr],
    name: str = "",
    ctx: Optional[EngineContext] = None,
) -> QuasilinearSystem:
    """System with explicit sources F^A (no Lagrangian assumed)."""
    return QuasilinearSystem(g, H, tuple(sources), name=name, ctx=ctx or EngineContext())

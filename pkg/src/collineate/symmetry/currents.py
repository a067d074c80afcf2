"""
Conservation currents of Noether point symmetries.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import sympy as sp

from collineate.core.exceptions import SymmetryError
from collineate.core.utils import EngineContext
from collineate.expr import differentiate, is_zero, simplify, to_string
from collineate.geometry import Metric
from collineate.symmetry.generator import Generator
from collineate.symmetry.jets import JetSpace
from collineate.symmetry.system import QuasilinearSystem, lagrangian, volume_element


@dataclass(frozen=True)
class Current:
    """I^i in (x, u, first jets) with the gauge it was built from."""

    x: Tuple[sp.Symbol, ...]
    components: Tuple[sp.Expr, ...]
    gauge: Tuple[sp.Expr, ...] = field(default=())
    label: str = ""

    def scale_component(self, i: int, factor: sp.Expr) -> "Current":
        components = list(self.components)
        components[i] = simplify(factor * components[i])
        return Current(self.x, tuple(components), self.gauge, self.label)

    def to_dict(self) -> Dict[str, object]:
        return {
            "label": self.label,
            "components": [to_string(c) for c in self.components],
            "gauge": [to_string(a) for a in self.gauge],
        }


def _gauge(A: Optional[Sequence[sp.Expr]], n: int) -> Tuple[sp.Expr, ...]:
    if A is None:
        return tuple(sp.S.Zero for _ in range(n))
    if len(A) != n:
        raise SymmetryError(f"gauge needs {n} components, got {len(A)}")
    return tuple(simplify(a) for a in A)


def conservation_current(
    g: Metric,
    H: Metric,
    V: sp.Expr,
    X: Generator,
    A: Optional[Sequence[sp.Expr]] = None,
    ctx: Optional[EngineContext] = None,
) -> Current:
    """I^i = xi^k (u^A_k dL/du^A_i - delta^i_k L) - eta^A dL/du^A_i + A^i"""
    jets = JetSpace(g.coords, H.coords)
    L = lagrangian(g, H, V, jets, ctx)
    gauge = _gauge(A, jets.n)
    momenta = [[differentiate(L, jets.first(B, i)) for i in range(jets.n)] for B in range(jets.m)]

    components = []
    for i in range(jets.n):
        total = sum(
            X.xi[k] * jets.first(B, k) * momenta[B][i] for k in range(jets.n) for B in range(jets.m)
        )
        total -= X.xi[i] * L
        total -= sum(X.eta[B] * momenta[B][i] for B in range(jets.m))
        total += gauge[i]
        components.append(simplify(total))
    return Current(jets.x, tuple(components), gauge, X.label)


def hamiltonian_tensor(
    g: Metric, H: Metric, V: sp.Expr, ctx: Optional[EngineContext] = None
) -> sp.ImmutableMatrix:
    """
    H^i_k = 1/2 sqrt|g| H_AB (2 g^ij u^A_k u^B_j - delta^i_k g^rs u^A_r u^B_s) + delta^i_k sqrt|g| V
    """
    jets = JetSpace(g.coords, H.coords)
    n, m = jets.n, jets.m
    sqrt_g = volume_element(g, ctx)
    ginv = g.inverse_components
    contracted = sum(
        ginv[r, s] * H[A, B] * jets.first(A, r) * jets.first(B, s)
        for r in range(n) for s in range(n) for A in range(m) for B in range(m)
    )

    def entry(i: int, k: int) -> sp.Expr:
        value = 2 * sum(
            ginv[i, j] * H[A, B] * jets.first(A, k) * jets.first(B, j)
            for j in range(n) for A in range(m) for B in range(m)
        )
        if i == k:
            value -= contracted
        value = sqrt_g * value / 2
        if i == k:
            value += sqrt_g * V
        return simplify(value)

    return sp.ImmutableMatrix(n, n, entry)


def theorem_current(
    g: Metric,
    H: Metric,
    V: sp.Expr,
    X: Generator,
    A: Optional[Sequence[sp.Expr]] = None,
    ctx: Optional[EngineContext] = None,
) -> Current:
    """I^i = xi^k H^i_k - sqrt|g| g^ij H_AB eta^A u^B_j + A^i"""
    jets = JetSpace(g.coords, H.coords)
    n, m = jets.n, jets.m
    tensor = hamiltonian_tensor(g, H, V, ctx)
    sqrt_g = volume_element(g, ctx)
    ginv = g.inverse_components
    gauge = _gauge(A, n)

    components = []
    for i in range(n):
        total = sum(X.xi[k] * tensor[i, k] for k in range(n))
        total -= sqrt_g * sum(
            ginv[i, j] * H[C, B] * X.eta[C] * jets.first(B, j)
            for j in range(n) for B in range(m) for C in range(m)
        )
        components.append(simplify(total + gauge[i]))
    return Current(jets.x, tuple(components), gauge, X.label)


def currents_agree(first: Current, second: Current, ctx: Optional[EngineContext] = None) -> bool:
    return all(is_zero(a - b, ctx) for a, b in zip(first.components, second.components))


@dataclass(frozen=True)
class OnShellResult:
    verdict: bool
    residual: Tuple[sp.Expr, ...] = ()
    probabilistic: bool = False
    reason: str = ""

    def __bool__(self) -> bool:
        return self.verdict


def on_shell(system: QuasilinearSystem, e: sp.Expr) -> sp.Expr:
    """Eliminate the pivot second jet of every field using P^A = 0."""
    jets = system.jets
    p, q = system.pivot()
    coefficient = system.trace_coefficient(p, q)
    replacement = {
        jets.second(A, p, q): jets.second(A, p, q) - system.equations[A] / coefficient
        for A in range(system.m)
    }
    return simplify(sp.sympify(e).xreplace(replacement))


def check_on_shell_divergence(
    system: QuasilinearSystem, current: Current, ctx: Optional[EngineContext] = None
) -> OnShellResult:
    """
    D_i I^i = 0 once the trace g^ij u^A_ij is eliminated through the system.

    Any surviving second-jet dependence is a genuine failure.
    """
    ctx = ctx or system.ctx
    jets = system.jets
    if any(c.free_symbols & set(jets.second_jets) for c in current.components):
        raise SymmetryError("current components must be free of second jets")

    divergence = sum(jets.total_derivative(current.components[i], i) for i in range(system.n))
    reduced = on_shell(system, divergence)

    residual: List[sp.Expr] = []
    probabilistic = False
    second_order = False
    for monomial, coefficient in jets.coefficients(reduced).items():
        verdict = is_zero(coefficient, ctx)
        probabilistic |= verdict.probabilistic
        if not verdict:
            residual.append(simplify(coefficient))
            second_order |= any(monomial[len(jets.first_jets):])
    if not residual:
        return OnShellResult(True, probabilistic=probabilistic)
    reason = (
        "trace-free second-jet dependence survives" if second_order
        else "divergence does not vanish on shell"
    )
    return OnShellResult(False, tuple(residual), probabilistic, reason)

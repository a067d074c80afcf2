"""
Noether point symmetry condition

    X^[1]L + L D_i xi^i = D_i A^i(x, u)

for the standard Lagrangian of a (g, H, V) system.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import sympy as sp

from collineate.collineations.gradient import integrate_closed
from collineate.core.exceptions import SymmetryError
from collineate.core.utils import EngineContext
from collineate.expr import differentiate, is_zero, simplify, to_string
from collineate.geometry import Metric
from collineate.symmetry.generator import Generator
from collineate.symmetry.jets import JetSpace
from collineate.symmetry.prolongation import prolong
from collineate.symmetry.system import lagrangian


@dataclass(frozen=True)
class NoetherCheckResult:
    """
    ``closed_form`` is False when the gauge exists but its potential could not
    be integrated within the expression grammar; ``gauge`` is then None.
    """

    verdict: bool
    gauge: Optional[Tuple[sp.Expr, ...]] = None
    closed_form: bool = True
    residual: Tuple[sp.Expr, ...] = ()
    probabilistic: bool = False
    reason: str = ""

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {
            "verdict": self.verdict,
            "closed_form": self.closed_form,
            "probabilistic": self.probabilistic,
            "gauge": [to_string(a) for a in self.gauge] if self.gauge is not None else None,
            "residual": [sp.sstr(r) for r in self.residual[:5]],
        }
        if self.reason:
            data["reason"] = self.reason
        return data


class _Tally:
    def __init__(self, ctx: EngineContext):
        self.ctx = ctx
        self.probabilistic = False
        self.residual: List[sp.Expr] = []

    def vanishes(self, e: sp.Expr) -> bool:
        verdict = is_zero(e, self.ctx)
        self.probabilistic |= verdict.probabilistic
        if not verdict:
            self.residual.append(simplify(e))
        return verdict.zero

    def fail(self, reason: str) -> NoetherCheckResult:
        return NoetherCheckResult(False, residual=tuple(self.residual),
                                  probabilistic=self.probabilistic, reason=reason)


def noether_defect(L: sp.Expr, X: Generator, jets: JetSpace) -> sp.Expr:
    """X^[1]L + L D_i xi^i, a polynomial in the first jets."""
    prolongation = prolong(X, jets, order=1)
    total = prolongation.apply(L, jets)
    total += L * sum(jets.total_derivative(X.xi[i], i) for i in range(jets.n))
    return simplify(total)


def total_divergence(A: Sequence[sp.Expr], jets: JetSpace) -> sp.Expr:
    return simplify(sum(jets.total_derivative(A[i], i) for i in range(jets.n)))


def _verify_gauge(defect: sp.Expr, gauge: Sequence[sp.Expr], jets: JetSpace, tally: _Tally) -> bool:
    remainder = simplify(defect - total_divergence(gauge, jets))
    coefficients = jets.coefficients(remainder, jets.first_jets)
    return all([tally.vanishes(c) for c in coefficients.values()])


def check_noether_condition(
    g: Metric,
    H: Metric,
    V: sp.Expr,
    X: Generator,
    gauge: Optional[Sequence[sp.Expr]] = None,
    ctx: Optional[EngineContext] = None,
) -> NoetherCheckResult:
    """
    Decide whether ``X`` is a Noether point symmetry and find its gauge.

    With ``gauge`` given it is only verified. Otherwise the quadratic part of
    the defect must vanish, the linear part gives A^i_,B (integrated over the
    fields), and the jet-free remainder, which must not depend on the fields,
    is absorbed into A^1 by integration along the first coordinate.
    """
    ctx = ctx or EngineContext()
    tally = _Tally(ctx)
    if X.depends_on_fields:
        return tally.fail("xi depends on the fields (xi^i_,B must vanish)")

    jets = JetSpace(g.coords, H.coords)
    L = lagrangian(g, H, V, jets, ctx)
    defect = noether_defect(L, X, jets)

    if gauge is not None:
        gauge = tuple(simplify(a) for a in gauge)
        if len(gauge) != jets.n:
            raise SymmetryError(f"gauge needs {jets.n} components, got {len(gauge)}")
        if _verify_gauge(defect, gauge, jets, tally):
            return NoetherCheckResult(True, gauge, probabilistic=tally.probabilistic)
        return tally.fail("supplied gauge does not balance the Noether condition")

    coefficients = jets.coefficients(defect, jets.first_jets)
    linear: Dict[Tuple[int, int], sp.Expr] = {}
    constant = sp.S.Zero
    for monomial, coefficient in coefficients.items():
        degree = sum(monomial)
        if degree == 0:
            constant = coefficient
        elif degree == 1:
            index = monomial.index(1)
            A, i = divmod(index, jets.n)
            linear[(A, i)] = coefficient
        elif not tally.vanishes(coefficient):
            return tally.fail("terms quadratic in the first jets do not vanish")

    potentials: List[Optional[sp.Expr]] = []
    for i in range(jets.n):
        covector = [linear.get((A, i), sp.S.Zero) for A in range(jets.m)]
        for B in range(jets.m):
            for C in range(B + 1, jets.m):
                curl = differentiate(covector[C], jets.u[B]) - differentiate(covector[B], jets.u[C])
                if not tally.vanishes(curl):
                    return tally.fail(f"A^{i}_,B is not a gradient in the fields")
        potentials.append(integrate_closed(covector, jets.u))

    if any(p is None for p in potentials):
        return NoetherCheckResult(True, None, closed_form=False, probabilistic=tally.probabilistic,
                                  reason="gauge exists but has no closed form")

    remainder = simplify(constant - sum(differentiate(potentials[i], jets.x[i]) for i in range(jets.n)))
    for u in jets.u:
        if not tally.vanishes(differentiate(remainder, u)):
            return tally.fail("field-dependent remainder cannot be absorbed into the gauge")
    if remainder != 0:
        correction = sp.integrate(remainder, jets.x[0], conds="none")
        if correction.has(sp.Integral):
            return NoetherCheckResult(True, None, closed_form=False, probabilistic=tally.probabilistic,
                                      reason="gauge exists but has no closed form")
        potentials[0] = simplify(potentials[0] + correction)

    gauge = tuple(potentials)
    if not _verify_gauge(defect, gauge, jets, tally):
        return tally.fail("reconstructed gauge does not balance the Noether condition")
    return NoetherCheckResult(True, gauge, probabilistic=tally.probabilistic)

"""
Lie point symmetry condition X^[2]P^A = kappa^A_D P^D.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import sympy as sp

from collineate.core.utils import EngineContext
from collineate.expr import is_zero, simplify, to_string
from collineate.symmetry.generator import Generator
from collineate.symmetry.prolongation import prolong
from collineate.symmetry.system import QuasilinearSystem


@dataclass(frozen=True)
class LieCheckResult:
    verdict: bool
    kappa: Optional[sp.ImmutableMatrix] = None
    residual: Tuple[sp.Expr, ...] = ()
    probabilistic: bool = False
    reason: str = ""

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {
            "verdict": self.verdict,
            "probabilistic": self.probabilistic,
            "residual": [sp.sstr(r) for r in self.residual[:5]],
        }
        if self.kappa is not None:
            data["kappa"] = [[to_string(k) for k in row] for row in self.kappa.tolist()]
        if self.reason:
            data["reason"] = self.reason
        return data


def lie_residual(system: QuasilinearSystem, X: Generator) -> Tuple[sp.ImmutableMatrix, Tuple[sp.Expr, ...]]:
    """
    kappa^A_D and the remainders E^A - kappa^A_D P^D, with E^A = X^[2]P^A.

    kappa is read off the pivot second jet of every field; both are linear in X.
    """
    jets = system.jets
    P = system.equations
    prolongation = prolong(X, system)
    E = [prolongation.apply(P[A], jets) for A in range(system.m)]

    p, q = system.pivot()
    pivot_coeff = system.trace_coefficient(p, q)
    kappa = sp.ImmutableMatrix(
        system.m,
        system.m,
        lambda A, D: simplify(sp.diff(E[A], jets.second(D, p, q)) / pivot_coeff),
    )
    remainders = tuple(
        simplify(E[A] - sum(kappa[A, D] * P[D] for D in range(system.m))) for A in range(system.m)
    )
    return kappa, remainders


def check_lie_condition(
    system: QuasilinearSystem, X: Generator, ctx: Optional[EngineContext] = None
) -> LieCheckResult:
    """
    Decide whether ``X`` is a Lie point symmetry of ``system``.

    The remainders of :func:`lie_residual` must vanish coefficient by
    coefficient in the jet monomials.
    """
    ctx = ctx or system.ctx
    if X.depends_on_fields:
        return LieCheckResult(False, reason="xi depends on the fields (xi^i_,B must vanish)")

    kappa, remainders = lie_residual(system, X)
    residual: List[sp.Expr] = []
    probabilistic = False
    for remainder in remainders:
        for coefficient in system.jets.coefficients(remainder).values():
            verdict = is_zero(coefficient, ctx)
            probabilistic |= verdict.probabilistic
            if not verdict:
                residual.append(simplify(coefficient))
    if residual:
        return LieCheckResult(False, kappa, tuple(residual), probabilistic, "residual coefficients do not vanish")
    return LieCheckResult(True, kappa, (), probabilistic)

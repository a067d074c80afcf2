"""
Gradient classification of vector fields.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Sequence

import sympy as sp

from collineate.core.exceptions import ExprError
from collineate.core.utils import EngineContext
from collineate.expr import differentiate, is_zero, simplify, to_string
from collineate.geometry import Metric, VField, lower


@dataclass(frozen=True)
class GradientInfo:
    """
    Result of :func:`classify_gradient`.

    ``gradient`` with ``potential`` None means the field is closed but its
    potential could not be written in the expression grammar.
    """

    gradient: bool
    potential: Optional[sp.Expr] = None

    @property
    def available(self) -> bool:
        return self.potential is not None

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {"gradient": self.gradient}
        if self.gradient:
            data["potential"] = to_string(self.potential) if self.available else None
        return data

    def __str__(self) -> str:
        if not self.gradient:
            return "non-gradient"
        if not self.available:
            return "gradient, potential unavailable"
        return f"gradient, potential {to_string(self.potential)}"


def integrate_closed(covector: Sequence[sp.Expr], coords: Sequence[sp.Symbol]) -> Optional[sp.Expr]:
    """
    Potential P with P_,a = covector_a, integrating coordinates in the given
    order. None when sympy returns an unevaluated integral.
    """
    potential = sp.S.Zero
    for a, x in enumerate(coords):
        remainder = simplify(covector[a] - differentiate(potential, x))
        if remainder == 0:
            continue
        piece = sp.integrate(remainder, x, conds="none")
        if piece.has(sp.Integral):
            return None
        potential = simplify(potential + piece)
    return potential


def classify_gradient(m: Metric, v: VField, ctx: Optional[EngineContext] = None) -> GradientInfo:
    """
    Decide whether v_a = g_ab v^b is a gradient and find its potential.

    Coordinates are integrated in declared order; the potential is accepted
    only if its gradient reproduces v_a.
    """
    ctx = ctx or EngineContext()
    covector = lower(m, v)
    n = m.dim
    for a in range(n):
        for b in range(a + 1, n):
            curl = differentiate(covector[b], m.coords[a]) - differentiate(covector[a], m.coords[b])
            if not is_zero(curl, ctx):
                return GradientInfo(False)

    potential = integrate_closed(covector, m.coords)
    if potential is None:
        return GradientInfo(True)
    try:
        to_string(potential)
    except ExprError:
        return GradientInfo(True)
    if not all(is_zero(differentiate(potential, x) - covector[a], ctx)
               for a, x in enumerate(m.coords)):
        return GradientInfo(True)
    return GradientInfo(True, potential)

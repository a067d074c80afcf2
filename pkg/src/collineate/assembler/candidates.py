"""
Candidate generators built from collineation bases, and the pieces shared by
the Lie and Noether assembly: branch selection, linear combination, the
solution-addition family and Killing tensor records.
"""

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import sympy as sp

from collineate.assembler.report import Branch, ReportEntry, SolutionFamily
from collineate.collineations import CollineationSet, combine
from collineate.core.exceptions import AssemblerError
from collineate.core.utils import EngineContext
from collineate.expr import differentiate, is_zero, simplify, substitute, to_string
from collineate.geometry import Metric, VField, killing_tensor_defect, lie_derivative_metric
from collineate.symmetry import Generator, QuasilinearSystem


@dataclass(frozen=True)
class Candidate:
    generator: Generator
    label: str
    # part of eta coming from a collineation of H
    h_part: Optional[VField] = None


def proper_gradient_homothety(hv_H: Optional[CollineationSet]) -> Optional[VField]:
    """The proper HV with psi = 1 when it is a gradient, else None."""
    if hv_H is None:
        return None
    for element in hv_H.proper():
        if element.gradient is not None and element.gradient.gradient and element.psi == 1:
            return element.field
    return None


def select_branch(n: int, homothety: Optional[VField]) -> Branch:
    if n == 2:
        return Branch.PLANAR
    if n < 2:
        raise AssemblerError("symmetry assembly needs n >= 2")
    return Branch.WITH_HOMOTHETY if homothety is not None else Branch.WITHOUT_HOMOTHETY


def conformal_candidates(
    g: Metric, H: Metric, ckv_g: CollineationSet, branch: Branch, homothety: Optional[VField]
) -> List[Candidate]:
    """xi_p d_x, plus (2-n)/2 psi_p Y d_u in the homothety branch."""
    n = g.dim
    candidates = []
    for p, element in enumerate(ckv_g.elements, 1):
        eta = [sp.S.Zero] * H.dim
        label = f"ckv[{p}]"
        if branch == Branch.WITH_HOMOTHETY and element.psi != 0:
            factor = sp.Rational(2 - n, 2) * element.psi
            eta = [factor * c for c in homothety.components]
            label += "+psi*Y"
        candidates.append(
            Candidate(Generator(g.coords, H.coords, element.field.components, tuple(eta)), label)
        )
    return candidates


def field_candidates(g: Metric, H: Metric, fields: Sequence[VField], prefix: str) -> List[Candidate]:
    zero = tuple(sp.S.Zero for _ in g.coords)
    return [
        Candidate(Generator(g.coords, H.coords, zero, f.components), f"{prefix}[{q}]", f)
        for q, f in enumerate(fields, 1)
    ]


def combine_candidates(
    vector: Sequence[sp.Expr], candidates: Sequence[Candidate], label: str
) -> Tuple[Generator, Tuple[str, ...], Optional[VField]]:
    first = candidates[0].generator
    xi = tuple(combine(vector, [c.generator.xi[i] for c in candidates]) for i in range(len(first.x)))
    eta = tuple(combine(vector, [c.generator.eta[A] for c in candidates]) for A in range(len(first.u)))
    provenance = tuple(
        c.label if coeff == 1 else f"({to_string(coeff)})*{c.label}"
        for coeff, c in zip(vector, candidates)
        if coeff != 0
    )
    h_pieces = [(coeff, c.h_part) for coeff, c in zip(vector, candidates) if c.h_part is not None]
    h_part = None
    if any(coeff != 0 for coeff, _ in h_pieces):
        coords = h_pieces[0][1].coords
        h_part = VField(coords, tuple(
            combine([coeff for coeff, _ in h_pieces], [f[A] for _, f in h_pieces])
            for A in range(len(coords))
        ))
    return Generator(first.x, first.u, xi, eta, label), provenance, h_part


def is_linear(system: QuasilinearSystem) -> bool:
    """H flat in its coordinates (vanishing connection) and F affine in the fields."""
    if not system.connection.is_zero():
        return False
    return all(
        differentiate(differentiate(f, a), b) == 0
        for f in system.F
        for a in system.u
        for b in system.u
    )


def solution_family(
    system: QuasilinearSystem,
    kv_H: Optional[CollineationSet],
    passes: Callable[[Generator], bool],
) -> Optional[SolutionFamily]:
    """
    b^A(x) K_A for a linear system, K_A its gradient KVs.

    Not counted when one of the constant members K_A already passes, since
    it then sits in the finite basis.
    """
    if kv_H is None or not is_linear(system):
        return None
    directions = [
        e.field for e in kv_H.elements
        if e.psi == 0 and e.gradient is not None and e.gradient.gradient
    ]
    if not directions:
        return None

    at_origin = {u: sp.S.Zero for u in system.u}
    equations = tuple(
        to_string(simplify(P - substitute(F, at_origin)))
        for P, F in zip(system.equations, system.F)
    )
    zero = tuple(sp.S.Zero for _ in system.x)
    constant_members = [
        k for k in directions if passes(Generator(system.x, system.u, zero, k.components))
    ]
    if constant_members:
        return SolutionFamily(
            tuple(d.components for d in directions), equations, counted=False,
            reason="constant members appear in the finite basis",
        )
    return SolutionFamily(tuple(d.components for d in directions), equations, counted=True,
                          reason="b^A(x) solving the linear system")


def record_killing_tensor(
    entry: ReportEntry,
    H: Metric,
    h_part: Optional[VField],
    kt2_H: Optional[CollineationSet],
    ctx: EngineContext,
) -> None:
    """Lambda_AB = symmetric part of Z_A|B, checked to be a Killing tensor of H."""
    if h_part is None or h_part.is_zero():
        return
    tensor = sp.ImmutableMatrix(lie_derivative_metric(H, h_part) / 2).applyfunc(simplify)
    entry.killing_tensor = tensor
    entry.killing_tensor_ok = all(is_zero(d, ctx) for d in killing_tensor_defect(H, tensor.tolist()))
    if kt2_H is not None:
        entry.killing_tensor_in_span = kt2_H.contains(tensor)

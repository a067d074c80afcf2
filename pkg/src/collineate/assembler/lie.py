"""
Lie point symmetries from collineations.

The generic generator is xi^i d_i + [(2-n)/2 psi Y^A + Z^A] d_A in the
homothety branch and xi^i d_i + Z^A d_A otherwise, with xi a CKV of g and Z
an AC of H. The remaining condition on the combination coefficients is
imposed by coefficient matching of the full prolonged condition in
(x, u, jets), which is linear in the generator.
"""

from typing import List, Optional

from collineate.assembler.bounds import DimensionBound
from collineate.assembler.candidates import (
    Candidate,
    combine_candidates,
    conformal_candidates,
    field_candidates,
    proper_gradient_homothety,
    record_killing_tensor,
    select_branch,
    solution_family,
)
from collineate.assembler.report import Branch, ReportEntry, ReportKind, SymmetryReport
from collineate.collineations import CollineationSet, CollineationSolver, match_rows, nullspace
from collineate.core.exceptions import AssemblerError
from collineate.core.logger import Logger
from collineate.core.utils import EngineContext
from collineate.symmetry import QuasilinearSystem, check_lie_condition, lie_residual


def lie_candidates(
    system: QuasilinearSystem,
    ckv_g: CollineationSet,
    ac_H: CollineationSet,
    branch: Branch,
    homothety,
) -> List[Candidate]:
    return conformal_candidates(system.g, system.H, ckv_g, branch, homothety) + field_candidates(
        system.g, system.H, ac_H.basis, "ac"
    )


def assemble_lie(
    system: QuasilinearSystem,
    ckv_g: CollineationSet,
    ac_H: CollineationSet,
    kt2_H: Optional[CollineationSet] = None,
    hv_H: Optional[CollineationSet] = None,
    branch: Optional[Branch] = None,
    bound: Optional[DimensionBound] = None,
    reference: Optional[int] = None,
    ctx: Optional[EngineContext] = None,
    logger: Optional[Logger] = None,
) -> SymmetryReport:
    """
    Lie point symmetries of ``system`` within the collineation bases.

    Args:
        system: The quasilinear system.
        ckv_g: CKVs of g.
        ac_H: ACs of H.
        kt2_H: Killing tensors of H; when given, the Killing tensor of every
            AC part is checked for membership.
        hv_H: HVs of H with gradient classification (solved when omitted).
        branch: Force a branch; the homothety branch needs a proper gradient HV.
        bound: Dimension bound to report against.
        reference: Published dimension to report alongside.

    Raises:
        AssemblerError: If the homothety branch is forced without a proper
            gradient HV, or an assembled generator fails re-verification.
    """
    ctx = ctx or system.ctx
    logger = logger or Logger()
    if hv_H is None:
        hv_H = CollineationSolver(ctx=ctx).solve_hv(system.H, ac_H.ansatz)

    homothety = proper_gradient_homothety(hv_H)
    selected = select_branch(system.n, homothety)
    if branch is not None and Branch(branch) != selected:
        if Branch(branch) == Branch.WITH_HOMOTHETY and homothety is None:
            raise AssemblerError("branch a requested but H has no proper gradient HV")
        raise AssemblerError(f"branch {Branch(branch).value} does not apply, expected {selected.value}")
    logger.debug(f"Lie assembly: branch {selected.value}")

    candidates = lie_candidates(system, ckv_g, ac_H, selected, homothety)
    report = SymmetryReport(
        kind=ReportKind.LIE,
        system=system.describe(),
        branch=selected,
        bound=bound,
        reference=reference,
    )
    if ckv_g.infinite_conformal:
        report.notes.append("n = 2: the conformal algebra of g is infinite, CKVs are truncated to the ansatz")

    vectors = []
    if candidates:
        residuals = [lie_residual(system, c.generator)[1] for c in candidates]
        equations = [
            {j: residuals[j][A] for j in range(len(candidates))} for A in range(system.m)
        ]
        rows = match_rows(equations, len(candidates), system.jets.variables)
        logger.debug(f"Lie assembly: {rows.rows} rows x {len(candidates)} candidates")
        vectors = nullspace(rows, len(candidates))

    for k, vector in enumerate(vectors, 1):
        generator, provenance, h_part = combine_candidates(vector, candidates, f"X{k}")
        entry = ReportEntry(generator, provenance, lie=check_lie_condition(system, generator, ctx))
        if not entry.lie:
            raise AssemblerError(f"assembled generator {generator} fails the Lie condition")
        record_killing_tensor(entry, system.H, h_part, kt2_H, ctx)
        report.entries.append(entry)
        report.transcript.append(f"{generator.label}: Lie condition holds ({', '.join(provenance)})")

    report.family = solution_family(system, hv_H, lambda X: bool(check_lie_condition(system, X, ctx)))
    if report.family is not None:
        report.transcript.append(
            "solution family b^A(x) K_A: "
            + ("counted as one entry" if report.family.counted else report.family.reason)
        )

    if report.dimension == 0:
        raise AssemblerError("no Lie point symmetries found within the candidate space")
    if report.within_bound is False:
        report.notes.append(
            f"computed dimension {report.dimension} exceeds the stated bound {bound.lie_upper}"
        )
    if reference is not None and reference != report.dimension:
        report.notes.append(f"reference dimension {reference}, computed {report.dimension}")
    return report

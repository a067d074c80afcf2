"""
Noether point symmetries of the standard Lagrangian.

Candidates are the CKVs of g (with the psi Y term in the homothety branch),
the KVs of H and, where a proper gradient HV Y exists, Y on its own. The
defect X^[1]L + L D_i xi^i is linear in the combination coefficients, and a
gauge A^i(x, u) exists exactly when

* every coefficient quadratic in the first jets vanishes,
* the linear coefficients a_iB are curl-free in the fields,
* d_B Q0 - d_i a_iB = 0 for the jet-free part Q0.

These rows are matched over (x, u); the gauge of each basis element is then
reconstructed by the Noether check itself.
"""

from typing import Dict, List, Optional, Tuple

import sympy as sp

from collineate.assembler.bounds import DimensionBound
from collineate.assembler.candidates import (
    Candidate,
    combine_candidates,
    conformal_candidates,
    field_candidates,
    proper_gradient_homothety,
    select_branch,
    solution_family,
)
from collineate.assembler.report import Branch, ReportEntry, ReportKind, SymmetryReport
from collineate.collineations import CollineationSet, CollineationSolver, match_rows, nullspace
from collineate.core.exceptions import AssemblerError
from collineate.core.logger import Logger
from collineate.core.utils import EngineContext
from collineate.expr import differentiate
from collineate.symmetry import (
    Generator,
    QuasilinearSystem,
    check_lie_condition,
    check_noether_condition,
    check_on_shell_divergence,
    conservation_current,
    currents_agree,
    noether_defect,
    theorem_current,
)


def noether_candidates(
    system: QuasilinearSystem,
    ckv_g: CollineationSet,
    hv_H: CollineationSet,
    branch: Branch,
    homothety,
) -> List[Candidate]:
    g, H = system.g, system.H
    kvs = [e.field for e in hv_H.elements if e.psi == 0]
    candidates = conformal_candidates(g, H, ckv_g, branch, homothety)
    candidates += field_candidates(g, H, kvs, "kv")
    if homothety is not None and branch in (Branch.WITH_HOMOTHETY, Branch.PLANAR):
        candidates += field_candidates(g, H, [homothety], "hv")
    return candidates


def _defect_pieces(
    system: QuasilinearSystem, generator: Generator
) -> Tuple[Dict[Tuple[int, ...], sp.Expr], Dict[Tuple[int, int], sp.Expr], sp.Expr]:
    """Split a defect into quadratic, linear (by (A, i)) and jet-free parts."""
    jets = system.jets
    coefficients = jets.coefficients(noether_defect(system.lagrangian, generator, jets), jets.first_jets)
    quadratic: Dict[Tuple[int, ...], sp.Expr] = {}
    linear: Dict[Tuple[int, int], sp.Expr] = {}
    constant = sp.S.Zero
    for monomial, coefficient in coefficients.items():
        degree = sum(monomial)
        if degree == 0:
            constant = coefficient
        elif degree == 1:
            linear[divmod(monomial.index(1), jets.n)] = coefficient
        else:
            quadratic[monomial] = coefficient
    return quadratic, linear, constant


def noether_rows(system: QuasilinearSystem, candidates: List[Candidate]) -> sp.Matrix:
    jets = system.jets
    pieces = [_defect_pieces(system, c.generator) for c in candidates]
    columns = range(len(candidates))
    equations: List[Dict[int, sp.Expr]] = []

    monomials = sorted({mono for quadratic, _, _ in pieces for mono in quadratic})
    for mono in monomials:
        equations.append({j: pieces[j][0].get(mono, sp.S.Zero) for j in columns})

    def a(j: int, B: int, i: int) -> sp.Expr:
        return pieces[j][1].get((B, i), sp.S.Zero)

    for i in range(jets.n):
        for B in range(jets.m):
            for C in range(B + 1, jets.m):
                equations.append({
                    j: differentiate(a(j, C, i), jets.u[B]) - differentiate(a(j, B, i), jets.u[C])
                    for j in columns
                })
    for B in range(jets.m):
        equations.append({
            j: differentiate(pieces[j][2], jets.u[B])
            - sum(differentiate(a(j, B, i), jets.x[i]) for i in range(jets.n))
            for j in columns
        })
    return match_rows(equations, len(candidates), tuple(jets.x) + tuple(jets.u))


def assemble_noether(
    system: QuasilinearSystem,
    ckv_g: CollineationSet,
    hv_H: Optional[CollineationSet] = None,
    branch: Optional[Branch] = None,
    bound: Optional[DimensionBound] = None,
    reference: Optional[int] = None,
    ctx: Optional[EngineContext] = None,
    logger: Optional[Logger] = None,
) -> SymmetryReport:
    """
    Noether point symmetries of a Lagrangian system with their gauges and
    conservation currents.

    Every basis element carries its Noether check (with gauge), the Lie
    check, the current I^i, the on-shell divergence check and the
    comparison with the closed-form current xi^k H^i_k - sqrt|g| eta_A u^A_j g^ij + A^i.

    Raises:
        AssemblerError: If the system has no potential, the requested branch
            does not apply, or a basis element fails re-verification.
    """
    if system.V is None:
        raise AssemblerError("Noether assembly needs a system with a potential V")
    ctx = ctx or system.ctx
    logger = logger or Logger()
    g, H, V = system.g, system.H, system.V
    if hv_H is None:
        hv_H = CollineationSolver(ctx=ctx).solve_hv(H)

    homothety = proper_gradient_homothety(hv_H)
    selected = select_branch(system.n, homothety)
    if branch is not None and Branch(branch) != selected:
        raise AssemblerError(f"branch {Branch(branch).value} does not apply, expected {selected.value}")

    candidates = noether_candidates(system, ckv_g, hv_H, selected, homothety)
    report = SymmetryReport(
        kind=ReportKind.NOETHER,
        system=system.describe(),
        branch=selected,
        bound=bound,
        reference=reference,
    )

    vectors = []
    if candidates:
        rows = noether_rows(system, candidates)
        logger.debug(f"Noether assembly: {rows.rows} rows x {len(candidates)} candidates")
        vectors = nullspace(rows, len(candidates))

    for k, vector in enumerate(vectors, 1):
        generator, provenance, _ = combine_candidates(vector, candidates, f"X{k}")
        noether = check_noether_condition(g, H, V, generator, ctx=ctx)
        if not noether:
            raise AssemblerError(f"assembled generator {generator} fails the Noether condition",
                                 noether.reason)
        entry = ReportEntry(generator, provenance, lie=check_lie_condition(system, generator, ctx),
                            noether=noether)
        if noether.gauge is not None:
            entry.current = conservation_current(g, H, V, generator, noether.gauge, ctx)
            entry.on_shell = check_on_shell_divergence(system, entry.current, ctx)
            entry.current_cross_check = currents_agree(
                entry.current, theorem_current(g, H, V, generator, noether.gauge, ctx), ctx
            )
        else:
            report.notes.append(f"{generator.label}: gauge has no closed form, current not built")
        report.entries.append(entry)
        report.transcript.append(f"{generator.label}: Noether condition holds ({', '.join(provenance)})")

    if homothety is not None and not any("hv" in p or "psi*Y" in p for e in report.entries for p in e.provenance):
        report.notes.append("the proper gradient HV of H does not survive the Noether condition")

    report.family = solution_family(
        system, hv_H, lambda X: bool(check_noether_condition(g, H, V, X, ctx=ctx))
    )
    if report.family is not None:
        report.transcript.append(
            "solution family b^A(x) K_A: "
            + ("counted as one entry" if report.family.counted else report.family.reason)
        )

    if report.within_bound is False:
        report.notes.append(
            f"computed dimension {report.dimension} exceeds the stated bound {bound.noether_upper}"
        )
    if reference is not None and reference != report.dimension:
        report.notes.append(f"reference dimension {reference}, computed {report.dimension}")
    return report

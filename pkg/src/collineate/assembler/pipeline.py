"""
End-to-end symmetry pipeline: collineations of g and H, then the Lie and
Noether assemblies.
"""

from dataclasses import dataclass
from typing import Dict, Optional

from collineate.assembler.bounds import DimensionBound, dimension_bounds
from collineate.assembler.lie import assemble_lie
from collineate.assembler.noether import assemble_noether
from collineate.assembler.report import SymmetryReport
from collineate.collineations import AnsatzSpec, CollineationSet, CollineationSolver
from collineate.core.logger import Logger
from collineate.core.exceptions import AssemblerError
from collineate.core.utils import EngineContext, library_errors
from collineate.symmetry import QuasilinearSystem


@dataclass
class AssemblyResult:
    system: QuasilinearSystem
    collineations: Dict[str, CollineationSet]
    lie: Optional[SymmetryReport] = None
    noether: Optional[SymmetryReport] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            "schema": 1,
            "system": self.system.describe(),
            "collineations": {name: s.to_dict() for name, s in self.collineations.items()},
            "lie": self.lie.to_dict() if self.lie else None,
            "noether": self.noether.to_dict() if self.noether else None,
        }


class SymmetryAssembler:
    """
    Runs the collineation solves and both assemblies for one system.

    Collineation sets can be supplied up front to skip the corresponding
    solve; this is how cached or hand-built bases are fed in.
    """

    def __init__(self, verbose: bool = False, ctx: Optional[EngineContext] = None):
        self.verbose = verbose
        self.ctx = ctx or EngineContext.from_config()
        self.logger = Logger(verbose=verbose)
        self.solver = CollineationSolver(verbose=verbose, ctx=self.ctx)

    def collineations(
        self,
        system: QuasilinearSystem,
        g_ansatz: Optional[AnsatzSpec] = None,
        H_ansatz: Optional[AnsatzSpec] = None,
        killing_tensors: bool = True,
    ) -> Dict[str, CollineationSet]:
        sets = {
            "ckv_g": self.solver.solve_ckv(system.g, g_ansatz),
            "hv_H": self.solver.solve_hv(system.H, H_ansatz),
            "ac_H": self.solver.solve_affine(system.H, H_ansatz),
        }
        if killing_tensors:
            sets["kt2_H"] = self.solver.solve_killing_tensor2(system.H, H_ansatz)
        for name, found in sets.items():
            self.logger.substep(f"{name}: dimension {found.dimension} (maximum {found.maximum})")
            if found.infinite_conformal:
                self.logger.warning(f"{name} is infinite-dimensional, truncated to the ansatz")
        return sets

    def run(
        self,
        system: QuasilinearSystem,
        lie: bool = True,
        noether: bool = True,
        g_ansatz: Optional[AnsatzSpec] = None,
        H_ansatz: Optional[AnsatzSpec] = None,
        bound_case: Optional[str] = None,
        lie_reference: Optional[int] = None,
        noether_reference: Optional[int] = None,
        collineations: Optional[Dict[str, CollineationSet]] = None,
    ) -> AssemblyResult:
        """
        Solve for the collineations and assemble the requested reports.

        Noether assembly is skipped with a warning when the system has no
        potential.
        """
        noether = noether and system.V is not None
        total = 1 + int(lie) + int(noether)
        step = 1

        self.logger.step(step, total, "Solving collineations")
        sets = collineations or self.collineations(system, g_ansatz, H_ansatz, killing_tensors=lie)
        bound: Optional[DimensionBound] = None
        if bound_case:
            bound = dimension_bounds(system.n, system.m, bound_case)

        result = AssemblyResult(system, sets)
        if lie:
            step += 1
            self.logger.step(step, total, "Assembling Lie point symmetries")
            with library_errors(AssemblerError, "Lie assembly"):
                result.lie = assemble_lie(
                    system, sets["ckv_g"], sets["ac_H"], sets.get("kt2_H"), hv_H=sets["hv_H"],
                    bound=bound, reference=lie_reference, ctx=self.ctx, logger=self.logger,
                )
        if noether:
            step += 1
            self.logger.step(step, total, "Assembling Noether point symmetries")
            with library_errors(AssemblerError, "Noether assembly"):
                result.noether = assemble_noether(
                    system, sets["ckv_g"], sets["hv_H"], bound=bound, reference=noether_reference,
                    ctx=self.ctx, logger=self.logger,
                )
        elif system.V is None:
            self.logger.warning("system has no potential, Noether symmetries skipped")
        if result.lie is not None and result.noether is not None:
            self._check_subspace(result.lie, result.noether)
        return result

    def _check_subspace(self, lie: SymmetryReport, noether: SymmetryReport) -> None:
        outside = [e.generator.label for e in noether.entries if not lie.contains(e.generator)]
        if outside:
            noether.notes.append(f"outside the Lie span: {', '.join(outside)}")
            self.logger.warning(f"Noether generators outside the Lie span: {', '.join(outside)}")
        else:
            noether.transcript.append("Noether basis lies in the span of the Lie basis")

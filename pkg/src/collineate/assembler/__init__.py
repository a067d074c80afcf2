"""Lie and Noether symmetry assembly from collineations."""

from collineate.assembler.bounds import BOUND_CASES, DimensionBound, dimension_bounds
from collineate.assembler.candidates import (
    Candidate,
    is_linear,
    proper_gradient_homothety,
    select_branch,
    solution_family,
)
from collineate.assembler.lie import assemble_lie
from collineate.assembler.noether import assemble_noether
from collineate.assembler.pipeline import AssemblyResult, SymmetryAssembler
from collineate.assembler.report import Branch, ReportEntry, ReportKind, SolutionFamily, SymmetryReport

__all__ = [
    "BOUND_CASES",
    "AssemblyResult",
    "Branch",
    "Candidate",
    "DimensionBound",
    "ReportEntry",
    "ReportKind",
    "SolutionFamily",
    "SymmetryAssembler",
    "SymmetryReport",
    "assemble_lie",
    "assemble_noether",
    "dimension_bounds",
    "is_linear",
    "proper_gradient_homothety",
    "select_branch",
    "solution_family",
]

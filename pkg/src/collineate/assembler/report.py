"""
Symmetry report value types.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import sympy as sp

from collineate.assembler.bounds import DimensionBound
from collineate.collineations import match_rows, nullspace
from collineate.expr import to_string
from collineate.symmetry import Current, Generator, LieCheckResult, NoetherCheckResult, OnShellResult


class Branch(str, Enum):
    """Which generic generator shape applies."""

    WITH_HOMOTHETY = "a"  # n > 2, H has a proper gradient HV
    WITHOUT_HOMOTHETY = "b"  # n > 2, no proper gradient HV
    PLANAR = "c"  # n = 2


class ReportKind(str, Enum):
    LIE = "lie"
    NOETHER = "noether"


@dataclass
class ReportEntry:
    """One basis generator with its provenance and verification record."""

    generator: Generator
    provenance: Tuple[str, ...]
    lie: Optional[LieCheckResult] = None
    noether: Optional[NoetherCheckResult] = None
    current: Optional[Current] = None
    on_shell: Optional[OnShellResult] = None
    current_cross_check: Optional[bool] = None
    killing_tensor: Optional[sp.ImmutableMatrix] = None
    killing_tensor_ok: Optional[bool] = None
    killing_tensor_in_span: Optional[bool] = None

    @property
    def verified(self) -> bool:
        checks = [self.lie, self.noether, self.on_shell]
        return all(bool(c) for c in checks if c is not None)

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {
            "generator": self.generator.to_dict(),
            "provenance": list(self.provenance),
            "verified": self.verified,
        }
        if self.lie is not None:
            data["lie"] = self.lie.to_dict()
        if self.noether is not None:
            data["noether"] = self.noether.to_dict()
        if self.current is not None:
            data["current"] = self.current.to_dict()
        if self.on_shell is not None:
            data["on_shell"] = {"verdict": self.on_shell.verdict, "reason": self.on_shell.reason}
        if self.current_cross_check is not None:
            data["current_cross_check"] = self.current_cross_check
        if self.killing_tensor is not None:
            data["killing_tensor"] = {
                "components": [[to_string(c) for c in row] for row in self.killing_tensor.tolist()],
                "killing": self.killing_tensor_ok,
                "in_span": self.killing_tensor_in_span,
            }
        return data


@dataclass
class SolutionFamily:
    """
    b^A(x) K_A with K_A the gradient KVs of H and b^A solving the linear system.

    ``counted`` is False when constant members already appear in the finite
    basis and stand for the family.
    """

    directions: Tuple[Tuple[sp.Expr, ...], ...]
    equations: Tuple[str, ...]
    counted: bool
    reason: str = ""

    def to_dict(self) -> Dict[str, object]:
        return {
            "directions": [[to_string(c) for c in d] for d in self.directions],
            "defining_equations": list(self.equations),
            "counted": self.counted,
            "reason": self.reason,
            "infinite_dimensional": True,
        }


@dataclass
class SymmetryReport:
    kind: ReportKind
    system: Dict[str, object]
    branch: Branch
    entries: List[ReportEntry] = field(default_factory=list)
    family: Optional[SolutionFamily] = None
    bound: Optional[DimensionBound] = None
    reference: Optional[int] = None
    notes: List[str] = field(default_factory=list)
    transcript: List[str] = field(default_factory=list)

    @property
    def finite_dimension(self) -> int:
        return len(self.entries)

    @property
    def dimension(self) -> int:
        """Finite basis plus one entry for a counted solution family."""
        return self.finite_dimension + (1 if self.family is not None and self.family.counted else 0)

    @property
    def generators(self) -> List[Generator]:
        return [e.generator for e in self.entries]

    def contains(self, generator: Generator) -> bool:
        """Whether ``generator`` is a constant combination of the finite basis."""
        target = generator.xi + generator.eta
        if all(c == 0 for c in target):
            return True
        if not self.entries:
            return False
        members = [e.generator.xi + e.generator.eta for e in self.entries]
        columns = len(members) + 1
        equations = []
        for index, value in enumerate(target):
            equation = {j: member[index] for j, member in enumerate(members)}
            equation[columns - 1] = -value
            equations.append(equation)
        rows = match_rows(equations, columns, tuple(generator.x) + tuple(generator.u))
        return any(vector[-1] != 0 for vector in nullspace(rows, columns))

    @property
    def verified(self) -> bool:
        return all(e.verified for e in self.entries)

    @property
    def within_bound(self) -> Optional[bool]:
        if self.bound is None:
            return None
        upper = self.bound.lie_upper if self.kind == ReportKind.LIE else self.bound.noether_upper
        return self.dimension <= upper

    def to_dict(self) -> Dict[str, object]:
        return {
            "schema": 1,
            "kind": self.kind.value,
            "system": self.system,
            "branch": self.branch.value,
            "dimension": self.dimension,
            "finite_dimension": self.finite_dimension,
            "reference": self.reference,
            "bound": self.bound.to_dict() if self.bound else None,
            "within_bound": self.within_bound,
            "verified": self.verified,
            "family": self.family.to_dict() if self.family else None,
            "entries": [e.to_dict() for e in self.entries],
            "notes": list(self.notes),
            "transcript": list(self.transcript),
        }

"""
Closed-form field solutions.
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, Mapping, Optional, Sequence, Tuple

import sympy as sp

from collineate.core.exceptions import CaseError
from collineate.expr import parse, symbol, to_string


class EvaluationMode(str, Enum):
    SYMBOLIC = "symbolic"
    NUMERIC = "numeric-special-function"


@dataclass(frozen=True)
class SolutionMode:
    """
    One term c * profile of the wave function.

    ``eigenvalue`` is s with Delta_g profile = s profile, so the auxiliary
    field carries the same term times s.
    """

    constant: sp.Symbol
    profile: sp.Expr
    eigenvalue: sp.Expr


@dataclass(frozen=True)
class FieldSolution:
    """
    Field expressions in the coordinates with free parameters.

    ``fixture`` binds parameters to sample values for numeric checks and
    ``domain`` gives the coordinate box sample points are drawn from.
    """

    name: str
    x: Tuple[sp.Symbol, ...]
    fields: Tuple[sp.Expr, ...]
    mode: EvaluationMode = EvaluationMode.SYMBOLIC
    modes: Tuple[SolutionMode, ...] = ()
    fixture: Dict[sp.Symbol, sp.Expr] = field(default_factory=dict)
    domain: Dict[sp.Symbol, Tuple[sp.Rational, sp.Rational]] = field(default_factory=dict)
    variant: str = ""
    notes: Tuple[str, ...] = ()

    @property
    def m(self) -> int:
        return len(self.fields)

    @property
    def parameters(self) -> Tuple[sp.Symbol, ...]:
        free = set().union(*(sp.sympify(f).free_symbols for f in self.fields)) - set(self.x)
        return tuple(sorted(free, key=lambda s: s.name))

    @property
    def constants(self) -> Tuple[sp.Symbol, ...]:
        return tuple(mode.constant for mode in self.modes)

    def check_fields(self, m: int) -> None:
        if self.m != m:
            raise CaseError(f"solution '{self.name}' has {self.m} fields, the system needs {m}")

    def substitute(self, mapping: Mapping[sp.Symbol, sp.Expr]) -> "FieldSolution":
        """Replace parameters (for example the integration constants) everywhere."""
        mapping = {k: sp.sympify(v) for k, v in mapping.items()}
        return replace(
            self,
            fields=tuple(sp.sympify(f).xreplace(mapping) for f in self.fields),
            modes=tuple(
                SolutionMode(m.constant, m.profile.xreplace(mapping), m.eigenvalue.xreplace(mapping))
                for m in self.modes
            ),
        )

    def with_fixture(self, fixture: Mapping[sp.Symbol, sp.Expr]) -> "FieldSolution":
        return replace(self, fixture={**self.fixture, **{k: sp.sympify(v) for k, v in fixture.items()}})

    def to_dict(self) -> Dict[str, object]:
        def show(e: sp.Expr) -> str:
            try:
                return to_string(e)
            except Exception:
                return sp.sstr(e)

        return {
            "name": self.name,
            "variant": self.variant,
            "mode": self.mode.value,
            "coordinates": [s.name for s in self.x],
            "fields": [show(f) for f in self.fields],
            "fixture": {k.name: show(v) for k, v in sorted(self.fixture.items(), key=lambda kv: kv[0].name)},
            "notes": list(self.notes),
        }


def from_modes(
    name: str,
    x: Sequence[sp.Symbol],
    modes: Sequence[SolutionMode],
    mode: EvaluationMode = EvaluationMode.SYMBOLIC,
    **extra,
) -> FieldSolution:
    """Wave function sum_k c_k p_k with auxiliary field sum_k s_k c_k p_k."""
    psi = sum((m.constant * m.profile for m in modes), sp.S.Zero)
    phi = sum((m.eigenvalue * m.constant * m.profile for m in modes), sp.S.Zero)
    return FieldSolution(name, tuple(x), (psi, phi), mode=mode, modes=tuple(modes), **extra)


def zero_solution(x: Sequence[sp.Symbol], m: int, name: str = "zero") -> FieldSolution:
    return FieldSolution(name, tuple(x), tuple(sp.S.Zero for _ in range(m)))


def solution_from_strings(
    name: str, x: Sequence[sp.Symbol], fields: Sequence[str], fixture: Optional[Mapping[str, str]] = None
) -> FieldSolution:
    """Symbolic solution read from expression strings (problem files, the CLI)."""
    return FieldSolution(
        name,
        tuple(x),
        tuple(parse(f) for f in fields),
        fixture={symbol(k): parse(v) for k, v in (fixture or {}).items()},
    )

"""
Point-symmetry generators X = xi^i(x) d_i + eta^A(x, u) d_A.
"""

from dataclasses import dataclass, field
from typing import Dict, Sequence, Tuple

import sympy as sp

from collineate.core.exceptions import SymmetryError
from collineate.expr import is_zero, parse, simplify, symbols, to_string


@dataclass(frozen=True)
class Generator:
    x: Tuple[sp.Symbol, ...]
    u: Tuple[sp.Symbol, ...]
    xi: Tuple[sp.Expr, ...]
    eta: Tuple[sp.Expr, ...]
    label: str = ""
    allow_fields_in_xi: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        for name in ("x", "u"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        xi = tuple(simplify(c) for c in self.xi)
        eta = tuple(simplify(c) for c in self.eta)
        if len(xi) != len(self.x) or len(eta) != len(self.u):
            raise SymmetryError(
                f"generator needs {len(self.x)} xi and {len(self.u)} eta components, "
                f"got {len(xi)} and {len(eta)}"
            )
        if not self.allow_fields_in_xi and any(c.free_symbols & set(self.u) for c in xi):
            raise SymmetryError("xi components must not depend on the fields", ", ".join(map(str, xi)))
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "eta", eta)

    @classmethod
    def with_field_dependent_xi(
        cls, x: Sequence[sp.Symbol], u: Sequence[sp.Symbol], xi: Sequence[sp.Expr],
        eta: Sequence[sp.Expr], label: str = "",
    ) -> "Generator":
        """Unchecked variant; the symmetry checks reject such generators."""
        return cls(tuple(x), tuple(u), tuple(xi), tuple(eta), label, allow_fields_in_xi=True)

    @classmethod
    def from_strings(
        cls, x: Sequence[str], u: Sequence[str], xi: Sequence[str], eta: Sequence[str], label: str = ""
    ) -> "Generator":
        return cls(symbols(x), symbols(u), tuple(parse(c) for c in xi), tuple(parse(c) for c in eta), label)

    @classmethod
    def zero(cls, x: Sequence[sp.Symbol], u: Sequence[sp.Symbol], label: str = "0") -> "Generator":
        return cls(tuple(x), tuple(u), tuple(sp.S.Zero for _ in x), tuple(sp.S.Zero for _ in u), label)

    @property
    def depends_on_fields(self) -> bool:
        return any(c.free_symbols & set(self.u) for c in self.xi)

    def scale(self, factor: sp.Expr, label: str = "") -> "Generator":
        return Generator(
            self.x, self.u, tuple(factor * c for c in self.xi), tuple(factor * c for c in self.eta),
            label or self.label, self.allow_fields_in_xi,
        )

    def __add__(self, other: "Generator") -> "Generator":
        if (self.x, self.u) != (other.x, other.u):
            raise SymmetryError("generators live on different spaces")
        return Generator(
            self.x, self.u,
            tuple(a + b for a, b in zip(self.xi, other.xi)),
            tuple(a + b for a, b in zip(self.eta, other.eta)),
            f"{self.label}+{other.label}",
            self.allow_fields_in_xi or other.allow_fields_in_xi,
        )

    def is_zero(self) -> bool:
        return all(is_zero(c) for c in self.xi + self.eta)

    def to_dict(self) -> Dict[str, object]:
        return {
            "label": self.label,
            "xi": [to_string(c) for c in self.xi],
            "eta": [to_string(c) for c in self.eta],
        }

    def __str__(self) -> str:
        terms = [f"({to_string(c)})*d_{s.name}" for c, s in zip(self.xi + self.eta, self.x + self.u) if c != 0]
        return " + ".join(terms) if terms else "0"

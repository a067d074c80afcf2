"""
Second-order jet space over independent variables x and fields u.

Jets are plain symbols named ``{u}_{x}`` and ``{u}_{xi}_{xj}`` (i <= j in the
declared coordinate order), so mixed partials are symmetric by construction.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Sequence, Tuple

import sympy as sp

from collineate.core.exceptions import SymmetryError
from collineate.expr import SymbolKind, differentiate, simplify


@dataclass(frozen=True)
class JetSpace:
    x: Tuple[sp.Symbol, ...]
    u: Tuple[sp.Symbol, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", tuple(self.x))
        object.__setattr__(self, "u", tuple(self.u))
        names = [s.name for s in self.x + self.u]
        if len(set(names)) != len(names):
            raise SymmetryError("coordinate and field names must be distinct", ", ".join(names))

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def m(self) -> int:
        return len(self.u)

    def first(self, A: int, i: int) -> sp.Symbol:
        """u^A_{,i}"""
        return sp.Symbol(f"{self.u[A].name}_{self.x[i].name}")

    def second(self, A: int, i: int, j: int) -> sp.Symbol:
        """u^A_{,ij}, stored with i <= j."""
        i, j = min(i, j), max(i, j)
        return sp.Symbol(f"{self.u[A].name}_{self.x[i].name}_{self.x[j].name}")

    @cached_property
    def first_jets(self) -> Tuple[sp.Symbol, ...]:
        return tuple(self.first(A, i) for A in range(self.m) for i in range(self.n))

    @cached_property
    def second_jets(self) -> Tuple[sp.Symbol, ...]:
        return tuple(
            self.second(A, i, j) for A in range(self.m) for i in range(self.n) for j in range(i, self.n)
        )

    @property
    def jets(self) -> Tuple[sp.Symbol, ...]:
        return self.first_jets + self.second_jets

    @property
    def variables(self) -> Tuple[sp.Symbol, ...]:
        return self.x + self.u + self.jets

    def kind(self, s: sp.Symbol) -> SymbolKind:
        if s in self.x:
            return SymbolKind.COORDINATE_X
        if s in self.u:
            return SymbolKind.COORDINATE_U
        if s in self.first_jets or s in self.second_jets:
            return SymbolKind.JET
        return SymbolKind.PARAMETER

    def depends_on_fields(self, e: sp.Expr) -> bool:
        return bool(sp.sympify(e).free_symbols & set(self.u))

    def total_derivative(self, e: sp.Expr, i: int) -> sp.Expr:
        """
        D_i = d_i + u^A_i d_{u^A} + u^A_ij d_{u^A_j}

        Raises:
            SymmetryError: If ``e`` already depends on second jets.
        """
        e = sp.sympify(e)
        if e.free_symbols & set(self.second_jets):
            raise SymmetryError("total derivative of a second-order expression needs third jets")
        total = sp.diff(e, self.x[i])
        for A in range(self.m):
            total += self.first(A, i) * sp.diff(e, self.u[A])
            for j in range(self.n):
                total += self.second(A, i, j) * sp.diff(e, self.first(A, j))
        return simplify(total)

    def coefficients(self, e: sp.Expr, jets: Sequence[sp.Symbol] = ()) -> Dict[Tuple[int, ...], sp.Expr]:
        """
        Coefficients of ``e`` as a polynomial in the jets, keyed by exponent tuple.

        The coefficients are functions of x, u and the parameters.
        """
        jets = tuple(jets) or self.jets
        numerator, denominator = sp.fraction(simplify(e))
        if denominator.free_symbols & set(jets):
            raise SymmetryError("expression is not polynomial in the jets", sp.sstr(e))
        if numerator == 0:
            return {}
        poly = sp.Poly(sp.expand(numerator), *jets)
        return {monomial: coefficient / denominator for monomial, coefficient in poly.terms()}

    def differentiate_jet(self, e: sp.Expr, jet: sp.Symbol) -> sp.Expr:
        return differentiate(e, jet)

"""
Second prolongation of a point generator.

    eta^A_i  = D_i eta^A - u^A_j D_i xi^j
    eta^A_ij = D_j eta^A_i - u^A_ik D_j xi^k
"""

from dataclasses import dataclass
from typing import Dict, Tuple, Union

import sympy as sp

from collineate.expr import simplify
from collineate.symmetry.generator import Generator
from collineate.symmetry.jets import JetSpace
from collineate.symmetry.system import QuasilinearSystem


@dataclass(frozen=True)
class Prolongation:
    generator: Generator
    first: Dict[Tuple[int, int], sp.Expr]
    second: Dict[Tuple[int, int, int], sp.Expr]

    def apply(self, e: sp.Expr, jets: JetSpace) -> sp.Expr:
        """X^[2] e"""
        X = self.generator
        total = sum(X.xi[i] * sp.diff(e, jets.x[i]) for i in range(jets.n))
        total += sum(X.eta[A] * sp.diff(e, jets.u[A]) for A in range(jets.m))
        total += sum(coeff * sp.diff(e, jets.first(A, i)) for (A, i), coeff in self.first.items())
        total += sum(
            coeff * sp.diff(e, jets.second(A, i, j)) for (A, i, j), coeff in self.second.items()
        )
        return simplify(total)


def prolong(X: Generator, space: Union[QuasilinearSystem, JetSpace], order: int = 2) -> Prolongation:
    """Prolongation coefficients eta^A_i and, for order 2, eta^A_ij (i <= j)."""
    jets = space.jets if isinstance(space, QuasilinearSystem) else space
    n, m = jets.n, jets.m

    d_xi = [[jets.total_derivative(X.xi[j], i) for j in range(n)] for i in range(n)]
    first: Dict[Tuple[int, int], sp.Expr] = {}
    for A in range(m):
        for i in range(n):
            value = jets.total_derivative(X.eta[A], i)
            value -= sum(jets.first(A, j) * d_xi[i][j] for j in range(n))
            first[(A, i)] = simplify(value)

    second: Dict[Tuple[int, int, int], sp.Expr] = {}
    if order < 2:
        return Prolongation(X, first, second)
    for A in range(m):
        for i in range(n):
            for j in range(i, n):
                value = jets.total_derivative(first[(A, i)], j)
                value -= sum(jets.second(A, i, k) * d_xi[j][k] for k in range(n))
                second[(A, i, j)] = simplify(value)
    return Prolongation(X, first, second)

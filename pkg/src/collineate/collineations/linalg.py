"""
Exact linear algebra for the determining equations.

Matrices are converted to sympy ``DomainMatrix`` over QQ, or over the field of
rational functions in the parameters when entries carry parameters, and
reduced without floating pivots.
"""

from typing import List, Sequence

import sympy as sp
from sympy.polys.matrices import DomainMatrix


def _reduced_row_echelon(matrix: sp.Matrix):
    """Return (rref as sympy Matrix, pivot columns)."""
    dm = DomainMatrix.from_Matrix(matrix)
    if hasattr(dm, "rref_den"):
        # fraction-free elimination, one division at the end
        numerators, denominator, pivots = dm.rref_den()
        scale = numerators.domain.to_sympy(denominator)
        reduced = numerators.to_Matrix().applyfunc(lambda entry: sp.cancel(entry / scale))
        return reduced, tuple(pivots)
    reduced, pivots = dm.to_field().rref()
    return reduced.to_Matrix(), tuple(pivots)


def nullspace(matrix: sp.Matrix, columns: int) -> List[List[sp.Expr]]:
    """
    Basis of the right nullspace in reduced row echelon normal form.

    Each basis vector has a 1 in one free column, zeros in the other free
    columns, so the basis is unique for a given column order.

    Args:
        matrix: Coefficient rows (may have zero rows).
        columns: Number of unknowns.
    """
    if matrix.rows == 0:
        return [[sp.S.One if i == j else sp.S.Zero for i in range(columns)] for j in range(columns)]

    reduced, pivots = _reduced_row_echelon(matrix)
    free = [c for c in range(columns) if c not in pivots]

    basis: List[List[sp.Expr]] = []
    for f in free:
        vector = [sp.S.Zero] * columns
        vector[f] = sp.S.One
        for row, p in enumerate(pivots):
            vector[p] = sp.cancel(-reduced[row, f])
        basis.append(vector)
    return basis


def rank(matrix: sp.Matrix) -> int:
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return len(_reduced_row_echelon(matrix)[1])


def stack(blocks: Sequence[sp.Matrix], columns: int) -> sp.Matrix:
    """Vertically stack row blocks that share a column count."""
    rows = [list(block.row(i)) for block in blocks for i in range(block.rows)]
    return sp.Matrix(len(rows), columns, [entry for row in rows for entry in row])

"""
Differential operators over a Metric.

All functions are pure; derivatives are taken with respect to the metric's
coordinates only, so fields on a product space treat the other symbols as
constants.
"""

from typing import List, Sequence, Tuple

import sympy as sp

from collineate.expr import differentiate, simplify
from collineate.geometry.metric import Array3, Connection, Metric, VField


def inverse_metric(m: Metric) -> Metric:
    """Exact inverse by cofactor expansion, returned as a Metric."""
    return Metric(m.coords, m.inverse_components, m.role)


def christoffel(m: Metric) -> Connection:
    """Levi-Civita connection of ``m``."""
    return Connection(m.coords, m.christoffel_array)


def contracted_christoffel(m: Metric) -> VField:
    """Gamma^a = g^bc Gamma^a_bc."""
    n = m.dim
    ginv = m.inverse_components
    gamma = m.christoffel_array
    return VField(
        m.coords,
        tuple(
            simplify(sum(ginv[b, c] * gamma[a][b][c] for b in range(n) for c in range(n)))
            for a in range(n)
        ),
    )


def gradient(m: Metric, f: sp.Expr) -> Tuple[sp.Expr, ...]:
    """Partial derivatives f_,a."""
    return tuple(differentiate(f, x) for x in m.coords)


def lower(m: Metric, v: VField) -> Tuple[sp.Expr, ...]:
    """v_a = g_ab v^b."""
    return tuple(
        simplify(sum(m[a, b] * v[b] for b in range(m.dim))) for a in range(m.dim)
    )


def divergence(m: Metric, v: VField) -> sp.Expr:
    """Covariant divergence v^a_;a = v^a_,a + Gamma^a_ab v^b."""
    gamma = m.christoffel_array
    n = m.dim
    total = sum(differentiate(v[a], m.coords[a]) for a in range(n))
    total += sum(gamma[a][a][b] * v[b] for a in range(n) for b in range(n))
    return simplify(total)


def lie_derivative_metric(m: Metric, v: VField) -> sp.ImmutableMatrix:
    """(L_v g)_ab = v^c g_ab,c + g_cb v^c_,a + g_ac v^c_,b."""
    n = m.dim
    dv = [[differentiate(v[c], m.coords[a]) for a in range(n)] for c in range(n)]
    entries = [[sp.S.Zero] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            total = sum(v[c] * differentiate(m[a, b], m.coords[c]) for c in range(n))
            total += sum(m[c, b] * dv[c][a] + m[a, c] * dv[c][b] for c in range(n))
            entries[a][b] = entries[b][a] = simplify(total)
    return sp.ImmutableMatrix(entries)


def lie_derivative_connection(m: Metric, v: VField) -> Array3:
    """
    L_v Gamma^a_bc
        = v^a_,bc + v^d Gamma^a_bc,d + Gamma^a_dc v^d_,b + Gamma^a_bd v^d_,c
          - Gamma^d_bc v^a_,d
    """
    n = m.dim
    x = m.coords
    gamma = m.christoffel_array
    dv = [[differentiate(v[d], x[b]) for b in range(n)] for d in range(n)]

    result: List[List[List[sp.Expr]]] = [[[sp.S.Zero] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            for c in range(b, n):
                total = differentiate(dv[a][b], x[c])
                total += sum(v[d] * differentiate(gamma[a][b][c], x[d]) for d in range(n))
                total += sum(gamma[a][d][c] * dv[d][b] + gamma[a][b][d] * dv[d][c]
                             for d in range(n))
                total -= sum(gamma[d][b][c] * dv[a][d] for d in range(n))
                result[a][b][c] = result[a][c][b] = simplify(total)
    return tuple(tuple(tuple(row) for row in block) for block in result)


def lie_derivative_scalar(v: VField, f: sp.Expr) -> sp.Expr:
    """L_v f = v^a f_,a."""
    return simplify(sum(c * differentiate(f, x) for c, x in zip(v.components, v.coords)))


def lie_bracket(u: VField, v: VField) -> VField:
    """[u, v]^a = u^b v^a_,b - v^b u^a_,b (equivalently L_u v)."""
    x = u.coords
    return VField(
        x,
        tuple(
            sum(u[b] * differentiate(v[a], x[b]) - v[b] * differentiate(u[a], x[b])
                for b in range(len(x)))
            for a in range(len(x))
        ),
    )


def hessian(m: Metric, f: sp.Expr) -> sp.ImmutableMatrix:
    """Covariant Hessian f_;ab = f_,ab - Gamma^c_ab f_,c."""
    n = m.dim
    gamma = m.christoffel_array
    df = gradient(m, f)
    entries = [[sp.S.Zero] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            value = differentiate(df[a], m.coords[b]) - sum(gamma[c][a][b] * df[c]
                                                           for c in range(n))
            entries[a][b] = entries[b][a] = simplify(value)
    return sp.ImmutableMatrix(entries)


def laplacian(m: Metric, f: sp.Expr) -> sp.Expr:
    """Delta_g f = g^ab (f_,ab - Gamma^c_ab f_,c)."""
    ginv = m.inverse_components
    h = hessian(m, f)
    return simplify(sum(ginv[a, b] * h[a, b] for a in range(m.dim) for b in range(m.dim)))


def vector_laplacian(m: Metric, v: VField) -> VField:
    """Component-wise Laplacian g^ij Z^A_;ij of a u-space field depending on x."""
    return VField(v.coords, tuple(laplacian(m, c) for c in v.components))


def riemann(m: Metric) -> Tuple:
    """R^a_bcd = Gamma^a_db,c - Gamma^a_cb,d + Gamma^a_ce Gamma^e_db - Gamma^a_de Gamma^e_cb."""
    n = m.dim
    x = m.coords
    g = m.christoffel_array

    def component(a: int, b: int, c: int, d: int) -> sp.Expr:
        value = differentiate(g[a][d][b], x[c]) - differentiate(g[a][c][b], x[d])
        value += sum(g[a][c][e] * g[e][d][b] - g[a][d][e] * g[e][c][b] for e in range(n))
        return simplify(value)

    return tuple(
        tuple(tuple(tuple(component(a, b, c, d) for d in range(n)) for c in range(n))
              for b in range(n))
        for a in range(n)
    )


def ricci_tensor(m: Metric) -> sp.ImmutableMatrix:
    n = m.dim
    r = riemann(m)
    return sp.ImmutableMatrix(
        [[simplify(sum(r[a][b][a][d] for a in range(n))) for d in range(n)] for b in range(n)]
    )


def ricci_scalar(m: Metric) -> sp.Expr:
    """R = g^bd R^a_bad."""
    ginv = m.inverse_components
    ric = ricci_tensor(m)
    return simplify(sum(ginv[b, d] * ric[b, d] for b in range(m.dim) for d in range(m.dim)))


def metric_covariant_derivative(m: Metric) -> Array3:
    """g_ab;c, identically zero for the Levi-Civita connection."""
    n = m.dim
    x = m.coords
    gamma = m.christoffel_array
    return tuple(
        tuple(
            tuple(
                simplify(
                    differentiate(m[a, b], x[c])
                    - sum(gamma[d][c][a] * m[d, b] + gamma[d][c][b] * m[a, d] for d in range(n))
                )
                for c in range(n)
            )
            for b in range(n)
        )
        for a in range(n)
    )


def killing_tensor_defect(m: Metric, tensor: Sequence[Sequence[sp.Expr]]) -> Tuple:
    """
    Symmetrised covariant derivative Lambda_(ab;c) (times 3), indexed a <= b <= c.
    """
    n = m.dim
    x = m.coords
    gamma = m.christoffel_array

    def cov(a: int, b: int, c: int) -> sp.Expr:
        value = differentiate(tensor[a][b], x[c])
        value -= sum(gamma[d][c][a] * tensor[d][b] + gamma[d][c][b] * tensor[a][d]
                     for d in range(n))
        return value

    return tuple(
        simplify(cov(a, b, c) + cov(b, c, a) + cov(c, a, b))
        for a in range(n)
        for b in range(a, n)
        for c in range(b, n)
    )

"""Metrics, Levi-Civita connections, curvature and Lie derivatives."""

import pytest
import sympy as sp

from collineate.cases.gup import gup_generators, published_boost
from collineate.core.exceptions import DegenerateMetricError, GeometryError
from collineate.expr import is_zero
from collineate.geometry import (
    Metric,
    VField,
    christoffel,
    contracted_christoffel,
    divergence,
    inverse_metric,
    killing_tensor_defect,
    laplacian,
    lie_bracket,
    lie_derivative_connection,
    lie_derivative_metric,
    metric_covariant_derivative,
    ricci_scalar,
    ricci_tensor,
)

theta, phi = sp.symbols("theta phi")
x, y = sp.symbols("x y")


def _vanishes(entries, ctx):
    flat = []

    def walk(item):
        if isinstance(item, (tuple, list)):
            for sub in item:
                walk(sub)
        elif isinstance(item, sp.MatrixBase):
            flat.extend(item)
        else:
            flat.append(item)

    walk(entries)
    return all(is_zero(e, ctx) for e in flat)


def hyperbolic_kvs():
    return {
        "X1": VField((theta, phi), (0, 1)),
        "X2": VField((theta, phi), (1, -phi)),
        "X3": VField((theta, phi), (phi, -(sp.exp(-2 * theta) + phi**2) / 2)),
    }


class TestMetric:
    def test_degenerate(self):
        with pytest.raises(DegenerateMetricError):
            Metric.diagonal((x, y), (1, 0))

    def test_degenerate_off_diagonal(self):
        with pytest.raises(DegenerateMetricError):
            Metric.from_strings(["x", "y"], [["x^2", "x*y"], ["x*y", "y^2"]])

    def test_asymmetric(self):
        with pytest.raises(GeometryError, match="symmetric"):
            Metric((x, y), sp.ImmutableMatrix([[1, x], [0, 1]]))

    def test_shape(self):
        with pytest.raises(GeometryError):
            Metric((x, y), sp.ImmutableMatrix([[1]]))

    def test_inverse(self, hyperbolic):
        inverse = inverse_metric(hyperbolic)
        assert inverse[1, 1] == -sp.exp(-2 * theta)
        assert (hyperbolic.components * inverse.components).applyfunc(sp.simplify) == sp.eye(2)

    def test_to_strings(self, flat_plane):
        data = flat_plane.to_strings()
        assert data["coords"] == ["u1", "u2"]


class TestConnection:
    def test_flat(self, euclidean3, minkowski):
        assert christoffel(euclidean3).is_zero()
        assert christoffel(minkowski).is_zero()

    def test_hyperbolic_symbols(self, hyperbolic):
        gamma = christoffel(hyperbolic)
        assert gamma[0, 1, 1] == sp.exp(2 * theta)
        assert gamma[1, 0, 1] == gamma[1, 1, 0] == 1
        assert set(gamma.nonzero()) == {(0, 1, 1), (1, 0, 1), (1, 1, 0)}

    def test_contracted(self, hyperbolic):
        assert contracted_christoffel(hyperbolic).components == (-1, 0)

    def test_metric_compatible(self, hyperbolic, sigma_H, ctx):
        assert _vanishes(metric_covariant_derivative(hyperbolic), ctx)
        assert _vanishes(metric_covariant_derivative(sigma_H), ctx)

    def test_gup_field_metric_is_flat(self, gup_H):
        assert christoffel(gup_H).is_zero()
        assert ricci_scalar(gup_H) == 0


class TestCurvature:
    def test_hyperbolic_scalar(self, hyperbolic):
        assert ricci_scalar(hyperbolic) == -2

    def test_sphere_scalar(self, ctx):
        sphere = Metric.diagonal((theta, phi), (1, sp.sin(theta) ** 2))
        assert is_zero(ricci_scalar(sphere) - 2, ctx)

    def test_flat_ricci(self, euclidean3):
        assert ricci_tensor(euclidean3) == sp.zeros(3, 3)


class TestOperators:
    def test_laplacian_flat(self, euclidean3):
        x1, x2, x3 = euclidean3.coords
        assert laplacian(euclidean3, x1**2 + x2**2 + x3**2) == 6

    def test_laplacian_hyperbolic(self, hyperbolic):
        assert laplacian(hyperbolic, sp.exp(-theta)) == 0
        assert laplacian(hyperbolic, sp.exp(theta)) == 2 * sp.exp(theta)
        assert laplacian(hyperbolic, theta) == 1

    def test_divergence(self, euclidean3):
        position = VField(euclidean3.coords, euclidean3.coords)
        assert divergence(euclidean3, position) == 3

    def test_bracket(self):
        kvs = hyperbolic_kvs()
        assert lie_bracket(kvs["X1"], kvs["X2"]) == -kvs["X1"]
        assert lie_bracket(kvs["X1"], kvs["X2"]) == -lie_bracket(kvs["X2"], kvs["X1"])

    def test_killing_tensor_defect(self, euclidean3):
        assert all(d == 0 for d in killing_tensor_defect(euclidean3, sp.eye(3).tolist()))


class TestHyperbolicKillingVectors:
    @pytest.mark.parametrize("name", ["X1", "X2", "X3"])
    def test_isometry(self, hyperbolic, ctx, name):
        X = hyperbolic_kvs()[name]
        assert _vanishes(lie_derivative_metric(hyperbolic, X), ctx)
        assert _vanishes(lie_derivative_connection(hyperbolic, X), ctx)

    def test_not_an_isometry(self, hyperbolic, ctx):
        dilation = VField((theta, phi), (0, phi))
        assert not _vanishes(lie_derivative_metric(hyperbolic, dilation), ctx)


class TestGupFieldCollineations:
    @pytest.mark.parametrize("name", ["K1", "K2", "R"])
    def test_killing(self, gup_H, gup_params, ctx, name):
        assert _vanishes(lie_derivative_metric(gup_H, gup_generators(gup_params)[name]), ctx)

    def test_homothety(self, gup_H, gup_params):
        Y = gup_generators(gup_params)["Y"]
        assert lie_derivative_metric(gup_H, Y) == 2 * gup_H.components

    @pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "Z"])
    def test_affine(self, gup_H, gup_params, ctx, name):
        assert _vanishes(lie_derivative_connection(gup_H, gup_generators(gup_params)[name]), ctx)

    def test_printed_boost_is_not_killing(self, gup_H, gup_params):
        defect = lie_derivative_metric(gup_H, published_boost(gup_params))
        b = gup_params.b
        assert (defect - 8 * b * sp.Matrix([[1, b], [b, 0]])).applyfunc(sp.expand) == sp.zeros(2, 2)

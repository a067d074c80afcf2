"""Jets, generators, the Lie and Noether conditions and conservation currents."""

import pytest
import sympy as sp

from collineate.cases.laplace import euclidean_metric, flat_laplace
from collineate.core.exceptions import SymmetryError
from collineate.expr import SymbolKind, is_zero
from collineate.geometry import MetricRole
from collineate.symmetry import (
    Generator,
    JetSpace,
    QuasilinearSystem,
    check_lie_condition,
    check_noether_condition,
    check_on_shell_divergence,
    conservation_current,
    currents_agree,
    euler_lagrange,
    make_system,
    noether_defect,
    prolong,
    theorem_current,
    volume_element,
)

x, y, u = sp.symbols("x y u")
x1, x2, x3 = sp.symbols("x1 x2 x3")
u1, u2 = sp.symbols("u1 u2")


@pytest.fixture
def laplace(ctx):
    return flat_laplace(3, 2, ctx)


def point(laplace, xi, eta, label=""):
    return Generator(laplace.x, laplace.u, xi, eta, label)


class TestJetSpace:
    def test_names(self):
        jets = JetSpace((x, y), (u,))
        assert jets.first(0, 1).name == "u_y"
        assert jets.second(0, 1, 0) == jets.second(0, 0, 1)
        assert len(jets.jets) == 2 + 3

    def test_distinct_names(self):
        with pytest.raises(SymmetryError):
            JetSpace((x, y), (x,))

    def test_kind(self):
        jets = JetSpace((x, y), (u,))
        assert jets.kind(x) == SymbolKind.COORDINATE_X
        assert jets.kind(u) == SymbolKind.COORDINATE_U
        assert jets.kind(jets.first(0, 0)) == SymbolKind.JET
        assert jets.kind(sp.Symbol("beta")) == SymbolKind.PARAMETER

    def test_total_derivative(self):
        jets = JetSpace((x, y), (u,))
        u_x, u_y = jets.first(0, 0), jets.first(0, 1)
        assert jets.total_derivative(x * u**2, 0) == u**2 + 2 * x * u * u_x
        assert jets.total_derivative(u_x, 1) == jets.second(0, 0, 1)
        with pytest.raises(SymmetryError):
            jets.total_derivative(jets.second(0, 0, 0), 0)
        assert jets.total_derivative(u_y * u, 0) == u_x * u_y + u * jets.second(0, 0, 1)

    def test_coefficients(self):
        jets = JetSpace((x, y), (u,))
        u_x = jets.first(0, 0)
        coefficients = jets.coefficients(x * u_x**2 + 3 * u_x + y, jets.first_jets)
        assert coefficients == {(2, 0): x, (1, 0): 3, (0, 0): y}


class TestGenerator:
    def test_rejects_field_dependent_xi(self):
        with pytest.raises(SymmetryError):
            Generator((x, y), (u,), (u, 0), (0,))

    def test_component_count(self):
        with pytest.raises(SymmetryError):
            Generator((x, y), (u,), (1,), (0,))

    def test_sum(self):
        first = Generator((x, y), (u,), (1, 0), (0,), "X1")
        second = Generator((x, y), (u,), (0, 1), (u,), "X2")
        total = first + second
        assert total.xi == (1, 1)
        assert total.eta == (u,)
        assert total.label == "X1+X2"

    def test_from_strings(self):
        X = Generator.from_strings(["x", "y"], ["u"], ["y", "-x"], ["0"], "rotation")
        assert X.xi == (y, -x)
        assert X.to_dict()["label"] == "rotation"

    def test_prolongation(self):
        jets = JetSpace((x, y), (u,))
        scaling = Generator((x, y), (u,), (0, 0), (u,))
        prolongation = prolong(scaling, jets)
        assert prolongation.first[(0, 0)] == jets.first(0, 0)
        assert prolongation.second[(0, 0, 1)] == jets.second(0, 0, 1)
        dilation = Generator((x, y), (u,), (x, y), (0,))
        assert prolong(dilation, jets).second[(0, 1, 1)] == -2 * jets.second(0, 1, 1)


class TestSystem:
    def test_single_independent_variable(self):
        with pytest.raises(SymmetryError, match="n >= 2"):
            make_system(euclidean_metric(1), euclidean_metric(1, "u", MetricRole.DEPENDENT), [0])

    def test_source_count(self, euclidean3, flat_plane):
        with pytest.raises(SymmetryError):
            make_system(euclidean3, flat_plane, [0])

    def test_sources_must_match_potential(self, euclidean3, flat_plane):
        with pytest.raises(SymmetryError, match="potential"):
            QuasilinearSystem(euclidean3, flat_plane, (u1, 0), V=u2**2)

    def test_flat_equations(self, laplace):
        jets = laplace.jets
        expected = sum(jets.second(0, i, i) for i in range(3))
        assert laplace.equations[0] == expected
        assert laplace.pivot() == (0, 0)

    def test_residuals(self, laplace):
        harmonic = (x1 * x2, x1**2 - x2**2)
        assert all(r == 0 for r in laplace.residuals(harmonic))
        assert laplace.residuals((x1**2, 0))[0] == 2

    def test_volume_element(self, minkowski, hyperbolic):
        assert volume_element(minkowski) == 1
        assert volume_element(hyperbolic) == sp.exp(sp.Symbol("theta"))

    def test_euler_lagrange_with_potential(self, euclidean3, flat_plane, ctx):
        system = euler_lagrange(euclidean3, flat_plane, u1**2 / 2 + u1 * u2, ctx=ctx)
        assert system.F == (u1 + u2, u1)
        assert system.describe()["n"] == 3


class TestLieCondition:
    @pytest.mark.parametrize(
        "xi,eta",
        [
            ((1, 0, 0), (0, 0)),
            ((x2, -x1, 0), (0, 0)),
            ((x1, x2, x3), (0, 0)),
            ((0, 0, 0), (u2, 0)),
            ((0, 0, 0), (x1, x2 * x3)),
        ],
    )
    def test_symmetries(self, laplace, ctx, xi, eta):
        assert check_lie_condition(laplace, point(laplace, xi, eta), ctx)

    @pytest.mark.parametrize(
        "xi,eta",
        [
            ((0, 0, 0), (u1**2, 0)),
            ((x1**2, 0, 0), (0, 0)),
            ((0, 0, 0), (x1**2, 0)),
        ],
    )
    def test_non_symmetries(self, laplace, ctx, xi, eta):
        result = check_lie_condition(laplace, point(laplace, xi, eta), ctx)
        assert not result

    def test_field_dependent_xi(self, laplace, ctx):
        X = Generator.with_field_dependent_xi(laplace.x, laplace.u, (u1, 0, 0), (0, 0))
        result = check_lie_condition(laplace, X, ctx)
        assert not result
        assert "xi depends on the fields" in result.reason

    def test_kappa_of_scaling(self, laplace, ctx):
        scaling = point(laplace, (0, 0, 0), (u1, u2))
        assert check_lie_condition(laplace, scaling, ctx).kappa == sp.eye(2)

    @pytest.mark.parametrize("factor", [sp.S.One, sp.Rational(-3, 7), sp.Integer(5)])
    @pytest.mark.parametrize(
        "xi,eta,expected",
        [
            ((x1, x2, x3), (0, 0), True),
            ((0, 0, 0), (u2, -u1), True),
            ((x1, 0, 0), (0, 0), False),
            ((0, 0, 0), (u1**2, 0), False),
        ],
    )
    def test_rescaling_keeps_verdict(self, laplace, ctx, factor, xi, eta, expected):
        X = point(laplace, xi, eta).scale(factor)
        assert bool(check_lie_condition(laplace, X, ctx)) is expected

    @pytest.mark.parametrize(
        "first,second",
        [
            (((x1, x2, x3), (0, 0)), ((x2, -x1, 0), (0, 0))),
            (((1, 0, 0), (0, 0)), ((0, 0, 0), (u1, u2))),
            (((x3, 0, -x1), (0, 0)), ((0, 0, 0), (x2 * x3, u1))),
        ],
    )
    def test_closed_under_sums(self, laplace, ctx, first, second):
        X, Y = point(laplace, *first), point(laplace, *second)
        assert check_lie_condition(laplace, X, ctx)
        assert check_lie_condition(laplace, Y, ctx)
        assert check_lie_condition(laplace, X + Y, ctx)
        assert check_lie_condition(laplace, X.scale(2) + Y.scale(sp.Rational(-1, 3)), ctx)


class TestNoetherCondition:
    def test_translation(self, laplace, ctx):
        result = check_noether_condition(laplace.g, laplace.H, laplace.V, point(laplace, (1, 0, 0), (0, 0)), ctx=ctx)
        assert result
        assert result.gauge == (0, 0, 0)

    def test_dilation_needs_field_weight(self, laplace, ctx):
        pure = point(laplace, (x1, x2, x3), (0, 0))
        weighted = point(laplace, (x1, x2, x3), (-u1 / 2, -u2 / 2))
        assert not check_noether_condition(laplace.g, laplace.H, laplace.V, pure, ctx=ctx)
        assert check_noether_condition(laplace.g, laplace.H, laplace.V, weighted, ctx=ctx)

    def test_field_translation_with_gauge(self, laplace, ctx):
        X = point(laplace, (0, 0, 0), (x1, 0))
        result = check_noether_condition(laplace.g, laplace.H, laplace.V, X, ctx=ctx)
        assert result
        assert result.closed_form
        assert check_noether_condition(laplace.g, laplace.H, laplace.V, X, gauge=result.gauge, ctx=ctx)

    def test_wrong_gauge(self, laplace, ctx):
        X = point(laplace, (1, 0, 0), (0, 0))
        result = check_noether_condition(laplace.g, laplace.H, laplace.V, X, gauge=(u1, 0, 0), ctx=ctx)
        assert not result

    def test_scaling_is_not_noether(self, laplace, ctx):
        scaling = point(laplace, (0, 0, 0), (u1, u2))
        assert check_lie_condition(laplace, scaling, ctx)
        assert not check_noether_condition(laplace.g, laplace.H, laplace.V, scaling, ctx=ctx)

    def test_defect_of_rotation_vanishes(self, laplace, ctx):
        rotation = point(laplace, (0, 0, 0), (u2, -u1))
        assert is_zero(noether_defect(laplace.lagrangian, rotation, laplace.jets), ctx)


NOETHER_GENERATORS = [
    ((1, 0, 0), (0, 0)),
    ((x2, -x1, 0), (0, 0)),
    ((0, 0, 0), (u2, -u1)),
    ((x1, x2, x3), (-u1 / 2, -u2 / 2)),
    ((0, 0, 0), (x1, 0)),
]


class TestCurrents:
    @pytest.mark.parametrize("xi,eta", NOETHER_GENERATORS)
    def test_conserved_on_shell(self, laplace, ctx, xi, eta):
        X = point(laplace, xi, eta)
        noether = check_noether_condition(laplace.g, laplace.H, laplace.V, X, ctx=ctx)
        assert noether
        current = conservation_current(laplace.g, laplace.H, laplace.V, X, noether.gauge, ctx)
        assert check_on_shell_divergence(laplace, current, ctx)
        assert currents_agree(current, theorem_current(laplace.g, laplace.H, laplace.V, X, noether.gauge, ctx), ctx)

    @pytest.mark.parametrize("xi,eta", NOETHER_GENERATORS)
    def test_noether_generators_are_lie_symmetries(self, laplace, ctx, xi, eta):
        X = point(laplace, xi, eta)
        assert check_noether_condition(laplace.g, laplace.H, laplace.V, X, ctx=ctx)
        assert check_lie_condition(laplace, X, ctx)

    @pytest.mark.parametrize("component", [0, 1, 2])
    def test_corrupted_current_fails(self, laplace, ctx, component):
        rotation = point(laplace, (x2, -x1, 0), (0, 0))
        current = conservation_current(laplace.g, laplace.H, laplace.V, rotation, ctx=ctx)
        assert check_on_shell_divergence(laplace, current, ctx)
        if current.components[component] == 0:
            pytest.skip("component vanishes identically")
        corrupted = current.scale_component(component, 2)
        assert not check_on_shell_divergence(laplace, corrupted, ctx)

    def test_non_noether_current_fails(self, laplace, ctx):
        scaling = point(laplace, (0, 0, 0), (u1, u2))
        current = conservation_current(laplace.g, laplace.H, laplace.V, scaling, ctx=ctx)
        assert not check_on_shell_divergence(laplace, current, ctx)

    def test_gauge_length(self, laplace):
        with pytest.raises(SymmetryError):
            conservation_current(laplace.g, laplace.H, laplace.V, point(laplace, (1, 0, 0), (0, 0)), (0,))

"""Built-in cases: special functions, closed-form solutions and their checks."""

import mpmath
import pytest
import sympy as sp

from collineate.cases import (
    CaseRegistry,
    EvaluationMode,
    FieldSolution,
    GupParameters,
    SolutionMode,
    check_sigma_connection,
    check_transform,
    get_case,
    gup_fourth_order,
    gup_hyperbolic_solution,
    gup_minkowski_solution,
    hyperbolic_metric,
    list_cases,
    make_gup_system,
    make_laplace_system,
    make_sigma_model,
    minkowski_metric,
    sample_points,
    solution_from_strings,
    verify_solution,
    zero_solution,
)
from collineate.cases.gup import (
    HYPERBOLIC_FIXTURE,
    HYPERBOLIC_PARAMETERS,
    MINKOWSKI_FIXTURE,
    check_boost,
)
from collineate.cases.laplace import euclidean_metric
from collineate.cases.solutions import from_modes
from collineate.cases.special import (
    bessel_i,
    bessel_k,
    ferrers_p,
    ferrers_p_hypergeometric,
    hyp2f1,
    modified_bessel_defect,
)
from collineate.core.exceptions import CaseError, SpecialFunctionError
from collineate.geometry import MetricRole
from collineate.symmetry import check_lie_condition

x, y = sp.symbols("x y")
theta, phi = sp.symbols("theta phi")

# beta hbar^2 = 1/100, V0 = 1
FIXED = GupParameters(sp.Rational(1, 100), sp.S.One, sp.S.One)


class TestSpecialFunctions:
    def test_bessel_i_at_zero(self):
        assert bessel_i(0, 0) == 1

    @pytest.mark.parametrize("order,point", [(0, 0), (1, -1), ("1/2", "-1/3")])
    def test_bessel_k_needs_positive_argument(self, order, point):
        with pytest.raises(SpecialFunctionError):
            bessel_k(sp.Rational(order), sp.Rational(point))

    @pytest.mark.parametrize("point", ["1/3", "1", "5/2"])
    def test_bessel_k_integer_orders(self, point):
        # K_2(x) = K_0(x) + (2/x) K_1(x)
        point = sp.Rational(point)
        with mpmath.workdps(40):
            recurrence = bessel_k(0, point, 40) + 2 * point.q / mpmath.mpf(point.p) * bessel_k(1, point, 40)
            assert abs(bessel_k(2, point, 40) - recurrence) < mpmath.mpf(10) ** -30

    def test_bessel_k_integer_order_is_the_limit(self):
        near = bessel_k(sp.Rational(1, 10**12), 1, precision=30)
        assert abs(bessel_k(0, 1, precision=30) - near) < mpmath.mpf(10) ** -12

    def test_bessel_i_is_not_real_for_negative_argument(self):
        with pytest.raises(SpecialFunctionError):
            bessel_i(sp.Rational(1, 2), -1)

    @pytest.mark.parametrize("c,point", [(0, "1/2"), (-2, "1/2"), (2, 1), (2, 3)])
    def test_hyp2f1_domain(self, c, point):
        with pytest.raises(SpecialFunctionError):
            hyp2f1(1, 1, c, sp.Rational(point))

    def test_hyp2f1_value(self):
        # 2F1(1, 1; 2; x) = -ln(1 - x)/x
        value = hyp2f1(1, 1, 2, sp.Rational(1, 2), precision=30)
        with mpmath.workdps(40):
            assert abs(value - 2 * mpmath.log(2)) < mpmath.mpf(10) ** -28

    def test_precision_floor(self):
        with pytest.raises(SpecialFunctionError):
            bessel_i(0, 1, precision=5)

    @pytest.mark.parametrize("order", [0, 1, sp.Rational(1, 3), sp.Rational(-5, 4)])
    def test_bessel_recurrences_solve_the_equation(self, order):
        assert abs(modified_bessel_defect(order, sp.Rational(7, 5), precision=30)) < mpmath.mpf(10) ** -25

    @pytest.mark.parametrize("degree", [sp.Rational(-1, 2), sp.Rational(-7, 10), 2])
    def test_ferrers_forms_agree(self, degree):
        direct = ferrers_p(degree, sp.Rational(1, 3), sp.Rational(3, 10), precision=30)
        series = ferrers_p_hypergeometric(degree, sp.Rational(1, 3), sp.Rational(3, 10), precision=30)
        assert abs(direct - series) < mpmath.mpf(10) ** -25

    def test_ferrers_domain(self):
        with pytest.raises(SpecialFunctionError):
            ferrers_p(1, 0, 1)


class TestFieldSolution:
    def test_from_modes(self):
        c1, c2 = sp.symbols("c1 c2")
        solution = from_modes(
            "pair", (x, y), [SolutionMode(c1, sp.exp(x), sp.Integer(2)), SolutionMode(c2, sp.exp(-y), sp.Integer(3))]
        )
        assert solution.fields == (c1 * sp.exp(x) + c2 * sp.exp(-y), 2 * c1 * sp.exp(x) + 3 * c2 * sp.exp(-y))
        assert solution.constants == (c1, c2)
        assert solution.parameters == (c1, c2)

    def test_substitute(self):
        c1 = sp.Symbol("c1")
        solution = from_modes("one", (x,), [SolutionMode(c1, sp.exp(x), sp.Integer(2))]).substitute({c1: 3})
        assert solution.fields == (3 * sp.exp(x), 6 * sp.exp(x))
        assert solution.modes[0].profile == sp.exp(x)

    def test_from_strings(self):
        solution = solution_from_strings("s", (x, y), ["x*y", "a*x"], {"a": "1/2"})
        assert solution.fields == (x * y, sp.Symbol("a") * x)
        assert solution.fixture == {sp.Symbol("a"): sp.Rational(1, 2)}
        assert solution.to_dict()["fixture"] == {"a": "1/2"}

    def test_field_count(self):
        with pytest.raises(CaseError):
            zero_solution((x, y), 1).check_fields(2)

    def test_sample_points_stay_in_the_box(self, ctx):
        solution = FieldSolution("boxed", (theta, phi), (0,), domain={theta: (sp.S.Zero, sp.S.Half)})
        points = sample_points(solution, 20, ctx)
        assert len(points) == 20
        assert all(0 < p[theta] < sp.S.Half and 0 < p[phi] < 1 for p in points)
        assert points == sample_points(solution, 20, ctx)


class TestVerifySolution:
    def test_harmonic_pair(self, ctx):
        system = make_laplace_system(euclidean_metric(2), euclidean_metric(2, "u", MetricRole.DEPENDENT))
        x1, x2 = system.x
        good = FieldSolution("harmonic", system.x, (x1 * x2, sp.exp(x1) * sp.cos(x2)))
        bad = FieldSolution("quadratic", system.x, (x1**2, 0))
        assert verify_solution(system, good, ctx=ctx).passed
        assert not verify_solution(system, bad, ctx=ctx).passed

    def test_numeric_mode(self, ctx):
        system = make_laplace_system(euclidean_metric(2), euclidean_metric(1, "u", MetricRole.DEPENDENT))
        x1, x2 = system.x
        report = verify_solution(system, FieldSolution("exp", system.x, (sp.exp(x1) * sp.sin(x2),)), ctx=ctx, numeric=True)
        assert report.passed
        assert report.mode is EvaluationMode.NUMERIC
        assert report.points == 10
        assert report.max_residual < mpmath.mpf("1e-20")

    def test_wrong_coordinates(self, ctx):
        system = make_laplace_system(euclidean_metric(2), euclidean_metric(1, "u", MetricRole.DEPENDENT))
        with pytest.raises(CaseError):
            verify_solution(system, FieldSolution("xy", (x, y), (x * y,)), ctx=ctx)

    def test_unbound_symbols(self, ctx):
        system = make_laplace_system(euclidean_metric(2), euclidean_metric(1, "u", MetricRole.DEPENDENT))
        x1, x2 = system.x
        solution = FieldSolution("k", system.x, (sp.Symbol("k") * x1**2,))
        with pytest.raises(CaseError, match="unbound"):
            verify_solution(system, solution, ctx=ctx, numeric=True)

    def test_to_dict(self, ctx):
        system = make_laplace_system(euclidean_metric(2), euclidean_metric(1, "u", MetricRole.DEPENDENT))
        report = verify_solution(system, zero_solution(system.x, 1), ctx=ctx)
        assert report.to_dict()["passed"] is True
        assert report.to_dict()["mode"] == "symbolic"


class TestGupMinkowski:
    def test_solution_solves_the_pair(self, ctx):
        system = make_gup_system(minkowski_metric(), FIXED, ctx=ctx)
        solution = gup_minkowski_solution(FIXED, c=1, constants=(1, sp.Rational(1, 2), -1, 2))
        assert verify_solution(system, solution, ctx=ctx).passed

    def test_solution_with_fixture(self, ctx):
        system = make_gup_system(minkowski_metric(), ctx=ctx)
        solution = gup_minkowski_solution(fixture=MINKOWSKI_FIXTURE)
        report = verify_solution(system, solution, ctx=ctx, numeric=True)
        assert report.passed
        assert report.max_residual < mpmath.mpf("1e-8")

    def test_complex_exponent_rejected(self):
        fixture = {sp.Symbol("beta"): sp.S.One, sp.Symbol("hbar"): sp.S.One, sp.Symbol("V0"): -sp.S.One, sp.Symbol("c"): sp.S.Zero}
        with pytest.raises(CaseError, match="not real"):
            gup_minkowski_solution(fixture=fixture)

    def test_vanishing_coupling(self):
        with pytest.raises(CaseError):
            make_gup_system(minkowski_metric(), GupParameters(sp.S.Zero, sp.S.One, sp.S.One))

    def test_fourth_order_sign(self, ctx):
        reduction = gup_fourth_order(minkowski_metric(), FIXED, ctx)
        assert reduction.verified
        assert reduction.sign == 1
        assert reduction.derived != reduction.published

    def test_z_transform(self, ctx):
        solution = gup_minkowski_solution(FIXED, c=1)
        check = check_transform(solution, FIXED, ctx)
        assert check.derived_map
        assert not check.published_map
        assert check.generates_z
        assert check.group_property

    def test_boost(self, ctx):
        assert check_boost(FIXED, ctx) == {"derived": True, "printed": False}


@pytest.mark.slow
class TestGupHyperbolic:
    @pytest.fixture
    def system(self, ctx):
        return make_gup_system(hyperbolic_metric(), ctx=ctx)

    @pytest.mark.parametrize("kind,tol", [("X1", "1e-8"), ("X3", "1e-8"), ("P", "1e-6")])
    def test_derived_solutions(self, system, ctx, kind, tol):
        solution = gup_hyperbolic_solution(kind, HYPERBOLIC_PARAMETERS[kind], fixture=HYPERBOLIC_FIXTURE)
        assert solution.mode is EvaluationMode.NUMERIC
        report = verify_solution(system, solution, tol=tol, ctx=ctx)
        assert report.passed
        assert report.max_residual < mpmath.mpf(tol)

    def test_published_x1_fails(self, system, ctx):
        solution = gup_hyperbolic_solution(
            "X1", HYPERBOLIC_PARAMETERS["X1"], published=True, fixture=HYPERBOLIC_FIXTURE
        )
        assert solution.variant == "published"
        assert not verify_solution(system, solution, ctx=ctx).passed

    def test_unknown_kind(self):
        with pytest.raises(CaseError):
            gup_hyperbolic_solution("X2")

    def test_complex_order_rejected(self):
        fixture = {sp.Symbol("beta"): sp.Rational(1, 10), sp.Symbol("hbar"): sp.S.One, sp.Symbol("V0"): sp.S.Zero}
        with pytest.raises(CaseError):
            gup_hyperbolic_solution("X1", 1, fixture=fixture)

    def test_case_checks(self, ctx):
        checks = get_case("gup-hyperbolic", ctx=ctx).checks()
        assert checks["fourth_order"] == {"sign": 1, "verified": True}
        assert checks["z_generator"] == {"lie": True, "noether": False}
        assert checks["boost"] == {"derived": True, "printed": False}


class TestSigmaModel:
    def test_connection_factor(self, ctx):
        check = check_sigma_connection(1, 2, ctx)
        assert check.derived
        assert not check.printed

    @pytest.mark.parametrize("K,m", [(0, 2), (1, 0)])
    def test_invalid(self, ctx, K, m):
        with pytest.raises(CaseError):
            make_sigma_model(K, m, ctx=ctx)

    def test_rotation_is_a_lie_symmetry(self, ctx):
        case = get_case("sigma-model", ctx=ctx)
        assert check_lie_condition(case.system, case.generators()["rotation"], ctx)

    @pytest.mark.slow
    def test_checks(self, ctx):
        checks = get_case("sigma-model", ctx=ctx).checks()
        assert checks["connection"] == {"derived": True, "printed": False}
        assert checks["kv_H"] == 3


class TestLaplaceCase:
    def test_solutions_verify(self, ctx):
        case = get_case("laplace-flat", ctx=ctx, n=3, m=1)
        reports = case.verify_solutions()
        assert [r.solution for r in reports] == ["zero", "harmonic-polynomial"]
        assert all(r.passed for r in reports)

    def test_describe(self, ctx):
        description = get_case("laplace-flat", ctx=ctx, n=4).describe()
        assert description["options"] == {"n": "4", "m": "2"}
        assert description["bound_case"] == "laplace-flat"

    def test_too_few_coordinates(self, ctx):
        with pytest.raises(CaseError):
            get_case("laplace-flat", ctx=ctx, n=1).system


class TestRegistry:
    def test_names(self):
        names = [c["name"] for c in list_cases()]
        assert names == ["gup-hyperbolic", "gup-minkowski", "laplace-flat", "sigma-model"]
        assert CaseRegistry.list_names() == names

    def test_case_insensitive(self, ctx):
        assert get_case("Laplace-Flat", ctx=ctx).NAME == "laplace-flat"

    def test_unknown_case(self):
        with pytest.raises(CaseError, match="unknown case"):
            get_case("wave")

    def test_unknown_option(self):
        with pytest.raises(CaseError, match="does not take K"):
            get_case("laplace-flat", K=1)

    def test_none_options_ignored(self, ctx):
        assert get_case("laplace-flat", ctx=ctx, K=None).options == {"n": 3, "m": 2}

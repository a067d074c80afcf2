"""Expression kernel: parsing, printing, canonical form, zero tests and evaluation."""

import random

import mpmath
import pytest
import sympy as sp

from collineate.core.exceptions import EvaluationError, ExprError, ParseError
from collineate.core.utils import EngineContext
from collineate.expr import differentiate, eval_float, is_zero, parse, simplify, substitute, to_string

x, y, z = sp.symbols("x y z")


class TestParse:
    def test_precedence(self):
        assert parse("-x^2") == -(x**2)
        assert parse("2^3^2") == 512
        assert parse("2^-1") == sp.Rational(1, 2)
        assert parse("1 + 2*3") == 7
        assert parse("(x + y)*(x - y)") == simplify(x**2 - y**2)

    def test_decimal_literals_are_exact(self):
        assert parse("0.25*x") == x / 4

    def test_kernels(self):
        assert parse("exp(x)") == sp.exp(x)
        assert parse("ln(x)") == sp.log(x)
        assert parse("sqrt(x)") == sp.sqrt(x)
        assert parse("sinh(x) + cosh(x)") == simplify(sp.sinh(x) + sp.cosh(x))

    def test_error_offset(self):
        with pytest.raises(ParseError) as info:
            parse("x + * y")
        assert info.value.offset == 4
        assert info.value.text == "x + * y"

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "x^y",
            "x^(1/2)",
            "x/0",
            "0^-1",
            "foo(x)",
            "(x + y",
            "x $ y",
            "x y",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse(text)

    def test_unexpected_character_offset(self):
        with pytest.raises(ParseError) as info:
            parse("x $ y")
        assert info.value.offset == 2


class TestPrint:
    @pytest.mark.parametrize(
        "text",
        [
            "x^2 - 2*x*y + 1/3",
            "exp(2*x)*sin(y) - cos(y)/x",
            "sqrt(x)/(1 + y^2)",
            "ln(x) + sinh(z)",
            "x^(-3)",
        ],
    )
    def test_round_trip(self, text):
        e = parse(text)
        assert simplify(parse(to_string(e)) - e) == 0

    @pytest.mark.parametrize("value", [sp.pi, sp.Float(1.5), sp.I * x, sp.Abs(x)])
    def test_outside_grammar(self, value):
        with pytest.raises(ExprError):
            to_string(value)

    def test_seeded_rational_functions_round_trip(self):
        rng = random.Random(11)
        kernels = [sp.exp, sp.sin, sp.cosh]
        for _ in range(25):
            numerator = sum(rng.randint(-4, 4) * x**rng.randint(0, 3) * y**rng.randint(0, 2) for _ in range(3))
            denominator = 1 + rng.randint(1, 3) * rng.choice(kernels)(rng.randint(1, 2) * x) ** 2
            e = simplify(numerator / denominator)
            assert simplify(parse(to_string(e)) - e) == 0


class TestCanonicalForm:
    def test_cancellation(self):
        assert simplify((x**2 - 1) / (x - 1)) == x + 1

    def test_exp_laws(self):
        assert is_zero(sp.exp(x) * sp.exp(y) - sp.exp(x + y))
        assert simplify(sp.log(sp.exp(x + y))) == x + y

    def test_substitute_is_simultaneous(self):
        assert substitute(x - y, {x: y, y: x}) == y - x

    def test_differentiate(self):
        derivative = differentiate(parse("x^3*exp(2*x)"), x)
        assert simplify(derivative - (3 * x**2 + 2 * x**3) * sp.exp(2 * x)) == 0


class TestZeroTest:
    def test_canonical_zero_is_exact(self, ctx):
        result = is_zero(parse("x*(y + 1) - x*y - x"), ctx)
        assert result
        assert not result.probabilistic

    def test_trigonometric_identity(self, ctx):
        result = is_zero(parse("sin(x)^2 + cos(x)^2 - 1"), ctx)
        assert result
        assert result.probabilistic
        assert result.samples == ctx.samples

    def test_nonzero_constant(self, ctx):
        assert not is_zero(sp.Rational(1, 10**12), ctx)

    def test_exact_zero_needs_no_samples(self, ctx):
        assert is_zero(x - x, ctx).samples == 0

    def test_deterministic_for_a_seed(self):
        e = parse("cosh(x)^2 - sinh(x)^2 - 1")
        first = is_zero(e, EngineContext(seed=3, samples=5))
        second = is_zero(e, EngineContext(seed=3, samples=5))
        assert first == second

    @pytest.mark.parametrize("seed", range(5))
    def test_never_accepts_nonzero(self, seed):
        rng = random.Random(seed)
        ctx = EngineContext(seed=seed, samples=8)
        for _ in range(10):
            a, b = rng.randint(1, 5), rng.randint(1, 5)
            e = sp.exp(a * x) - sp.exp(b * x) + sp.Rational(rng.randint(1, 9), 10**6) * y
            assert not is_zero(e, ctx)
            assert not is_zero(sp.sin(x) ** 2 - sp.cos(x) ** 2 - 1 + sp.Rational(1, a), ctx)


class TestEvalFloat:
    def test_value(self):
        value = eval_float(parse("sqrt(2)"), {}, precision=40)
        with mpmath.workdps(50):
            assert abs(value - mpmath.sqrt(2)) < mpmath.mpf(10) ** -38

    def test_bindings_by_name_or_symbol(self):
        assert eval_float(parse("x*y"), {"x": 3, y: "1/2"}) == mpmath.mpf("1.5")

    def test_unbound_symbol(self):
        with pytest.raises(EvaluationError, match="unbound"):
            eval_float(parse("x + y"), {"x": 1})

    @pytest.mark.parametrize(
        "text,value",
        [("ln(x)", -1), ("ln(x)", 0), ("sqrt(x)", -4), ("1/x", 0)],
    )
    def test_domain_errors(self, text, value):
        with pytest.raises(EvaluationError):
            eval_float(parse(text), {"x": value})

    def test_precision_floor(self):
        with pytest.raises(ValueError):
            eval_float(x, {"x": 1}, precision=10)

    @pytest.mark.parametrize("seed", range(4))
    def test_derivative_matches_finite_difference(self, seed):
        rng = random.Random(seed)
        corpus = [
            "x^3*y - exp(x*y)",
            "sin(x)*cosh(y) + x^2/(1 + y^2)",
            "ln(1 + x^2)*sqrt(1 + y^2)",
            "exp(-x)*cos(x*y)",
        ]
        h = mpmath.mpf("1e-10")
        for text in corpus:
            e = parse(text)
            point = {"x": mpmath.mpf(rng.randint(1, 20)) / 7, "y": mpmath.mpf(rng.randint(1, 20)) / 11}
            with mpmath.workdps(40):
                up = eval_float(e, {**point, "x": point["x"] + h}, precision=30)
                down = eval_float(e, {**point, "x": point["x"] - h}, precision=30)
                estimate = (up - down) / (2 * h)
            exact = eval_float(differentiate(e, x), point, precision=30)
            assert abs(estimate - exact) <= mpmath.mpf("1e-8") * (1 + abs(exact))


@pytest.mark.slow
class TestProperties:
    def test_derivative_matches_finite_difference(self, expression_corpus):
        rng = random.Random(5)
        h = mpmath.mpf("1e-5")
        for e in expression_corpus(200, seed=1):
            point = {"x": mpmath.mpf(rng.randint(1, 10)) / 10, "y": mpmath.mpf(rng.randint(1, 10)) / 10}

            def at(offset):
                return eval_float(e, {**point, "x": point["x"] + offset * h}, precision=80)

            with mpmath.workdps(90):
                estimate = (-at(2) + 8 * at(1) - 8 * at(-1) + at(-2)) / (12 * h)
                rounding = mpmath.mpf(10) ** -70 * (1 + abs(at(0))) / h
            exact = eval_float(differentiate(e, x), point, precision=80)
            assert abs(estimate - exact) <= mpmath.mpf("1e-6") * (1 + abs(exact)) + rounding, e

    def test_print_parse_round_trip(self, expression_corpus, ctx):
        for e in expression_corpus(500, seed=2):
            canonical = simplify(e)
            assert is_zero(parse(to_string(canonical)) - canonical, ctx), canonical

    def test_simplify_agrees_with_evaluation(self, expression_corpus):
        rng = random.Random(3)
        for e in expression_corpus(100, seed=3):
            canonical = simplify(e)
            for _ in range(20):
                point = {"x": sp.Rational(rng.randint(1, 20), 10), "y": sp.Rational(rng.randint(1, 20), 10)}
                raw = eval_float(e, point, precision=50)
                reduced = eval_float(canonical, point, precision=50)
                assert abs(raw - reduced) <= mpmath.mpf("1e-15") * (1 + abs(raw)), e

    def test_zero_test_rejects_nonzero(self, nonzero_corpus):
        for seed in range(4):
            ctx = EngineContext(seed=seed, samples=20)
            for e in nonzero_corpus(50, seed=seed):
                assert not is_zero(e, ctx), e

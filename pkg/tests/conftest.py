"""Shared fixtures: standard metrics, a seeded engine context, config isolation
and seeded random expression corpora."""

import random

import pytest
import sympy as sp

from collineate.cases.gup import GupParameters, gup_field_metric, hyperbolic_metric, minkowski_metric
from collineate.cases.laplace import euclidean_metric
from collineate.cases.sigma import sigma_metric
from collineate.core.config import Config
from collineate.core.utils import EngineContext
from collineate.geometry import MetricRole


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Every test sees the defaults, never the user's configuration file."""
    monkeypatch.setenv("COLLINEATE_CONFIG", str(tmp_path / "config.yaml"))
    for name in ("COLLINEATE_SEED", "COLLINEATE_SAMPLES", "COLLINEATE_PRECISION"):
        monkeypatch.delenv(name, raising=False)
    Config.reset_instance()
    yield tmp_path / "config.yaml"
    Config.reset_instance()


@pytest.fixture
def ctx():
    return EngineContext(seed=7, samples=12, precision=30)


@pytest.fixture
def euclidean3():
    return euclidean_metric(3)


@pytest.fixture
def flat_plane():
    return euclidean_metric(2, "u", MetricRole.DEPENDENT)


@pytest.fixture
def minkowski():
    return minkowski_metric()


@pytest.fixture
def hyperbolic():
    return hyperbolic_metric()


@pytest.fixture
def gup_params():
    return GupParameters.symbolic()


@pytest.fixture
def gup_H(gup_params):
    return gup_field_metric(gup_params)


@pytest.fixture
def sigma_H():
    return sigma_metric(sp.S.One, 2)


X, Y = sp.symbols("x y")

_KERNELS = {
    "exp": sp.exp,
    "sin": sp.sin,
    "cos": sp.cos,
    "sinh": sp.sinh,
    "cosh": sp.cosh,
    "ln": lambda a: sp.log(1 + a**2),
    "sqrt": lambda a: sp.sqrt(1 + a**2),
}


def random_polynomial(rng, degree=2):
    terms = [
        rng.choice([-3, -2, -1, 1, 2, 3]) * X**rng.randint(0, degree) * Y**rng.randint(0, degree)
        for _ in range(rng.randint(1, 3))
    ]
    return sp.Add(*terms)


def random_expression(rng, depth=3, kernels=True):
    """
    Random tree in the expression grammar over x and y, free of poles and
    domain errors for real x, y. Kernel arguments never contain kernels.
    """
    if depth == 0 or rng.random() < 0.2:
        if rng.random() < 0.6:
            return rng.choice([X, Y])
        return sp.Rational(rng.randint(-3, 3), rng.randint(1, 3))
    ops = ["add", "sub", "mul", "div", "pow"] + (list(_KERNELS) if kernels else [])
    op = rng.choice(ops)
    if op in _KERNELS:
        return _KERNELS[op](random_expression(rng, depth - 1, kernels=False))
    a = random_expression(rng, depth - 1, kernels)
    if op == "pow":
        return a ** rng.randint(2, 3)
    b = random_expression(rng, depth - 1, kernels)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    return a / (1 + b**2)


def nonzero_expression(rng):
    """An expression that is nonzero at every real point."""
    eps = sp.Rational(1, 10 ** rng.randint(1, 6))
    bump = eps * (1 + random_polynomial(rng) ** 2)
    p, q = random_polynomial(rng), random_polynomial(rng)
    family = rng.randrange(5)
    if family == 0:
        return sp.exp(random_expression(rng, 2, kernels=False))
    if family == 1:
        return sp.sin(p) ** 2 + sp.cos(p) ** 2 - 1 + bump
    if family == 2:
        r = sp.Rational(rng.randint(1, 2), rng.randint(2, 3)) * rng.choice([X, Y])
        return sp.cosh(r) ** 2 - sp.sinh(r) ** 2 - 1 + bump
    if family == 3:
        return sp.exp(p) * sp.exp(q) - sp.exp(p + q) + bump
    e = random_expression(rng)
    return e - e + sp.Rational(rng.choice([-1, 1]), rng.randint(1, 10**6))


@pytest.fixture
def expression_corpus():
    """Seeded random expressions: ``expression_corpus(count, seed)``."""

    def build(count, seed=0, depth=3):
        rng = random.Random(seed)
        return [random_expression(rng, depth) for _ in range(count)]

    return build


@pytest.fixture
def nonzero_corpus():
    def build(count, seed=0):
        rng = random.Random(seed)
        return [nonzero_expression(rng) for _ in range(count)]

    return build

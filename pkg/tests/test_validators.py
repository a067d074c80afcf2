"""Problem file validation."""

import json

import pytest
import sympy as sp
import yaml

from collineate.core.exceptions import ValidationError
from collineate.geometry import MetricRole
from collineate.validators import (
    is_valid_matrix,
    load_problem,
    validate_metric,
    validate_options,
    validate_problem,
)


def problem(**overrides):
    data = {
        "name": "plane",
        "coordinates": {"x": ["x", "y"], "u": ["u"]},
        "g": [["1", "0"], ["0", "1"]],
        "H": [["1"]],
        "potential": "m*u^2/2",
        "parameters": {"m": "2"},
        "solutions": [{"name": "zero", "fields": ["0"]}],
    }
    data.update(overrides)
    return data


class TestMatrix:
    def test_shape(self):
        assert is_valid_matrix([["1", "0"], ["0", "1"]], 2) == (True, "")
        assert not is_valid_matrix([["1", "0"]], 2)[0]
        assert is_valid_matrix([["1"], ["0", "1"]], 2) == (False, "row 0 must have 2 entries")

    def test_asymmetric(self):
        with pytest.raises(ValidationError, match="not symmetric") as info:
            validate_metric([["1", "x"], ["0", "1"]], ["x", "y"], "g", MetricRole.INDEPENDENT)
        assert "g[0][1] = x vs g[1][0] = 0" in info.value.details

    def test_degenerate(self):
        with pytest.raises(ValidationError):
            validate_metric([["1", "1"], ["1", "1"]], ["x", "y"], "g", MetricRole.INDEPENDENT)

    def test_parse_error_is_located(self):
        with pytest.raises(ValidationError, match=r"g\[1\]\[1\]"):
            validate_metric([["1", "0"], ["0", "1 +"]], ["x", "y"], "g", MetricRole.INDEPENDENT)

    def test_non_string_entry(self):
        with pytest.raises(ValidationError, match="expected an expression string"):
            validate_metric([[1.5, "0"], ["0", "1"]], ["x", "y"], "g", MetricRole.INDEPENDENT)


class TestOptions:
    def test_defaults(self):
        assert validate_options(None).degree is None

    def test_values(self):
        options = validate_options({"degree": 3, "kernel_window": [-1, 2], "tolerance": "1e-6", "seed": 4})
        assert options.degree == 3
        assert options.kernel_window == (-1, 2)
        assert options.tolerance == "1e-6"
        assert options.seed == 4

    @pytest.mark.parametrize(
        "raw",
        [
            {"degree": -1},
            {"degree": True},
            {"samples": 0},
            {"precision": 10},
            {"kernel_window": [2, 1]},
            {"kernel_window": [0]},
            {"tolerance": "-1"},
            {"tolerance": "tiny"},
            {"colour": "red"},
        ],
    )
    def test_rejects(self, raw):
        with pytest.raises(ValidationError):
            validate_options(raw)


class TestProblem:
    def test_valid(self):
        result = validate_problem(problem())
        assert result.name == "plane"
        assert [s.name for s in result.x] == ["x", "y"]
        assert result.fixture == {sp.Symbol("m"): 2}
        assert result.solutions[0].fixture == {sp.Symbol("m"): 2}

    def test_system_from_potential(self, ctx):
        system = validate_problem(problem()).system(ctx)
        u = sp.Symbol("u")
        assert system.F == (sp.Symbol("m") * u,)

    def test_system_from_sources(self, ctx):
        data = problem(sources=["u^2"])
        del data["potential"]
        system = validate_problem(data).system(ctx)
        assert system.V is None
        assert system.F == (sp.Symbol("u") ** 2,)

    def test_potential_and_sources(self):
        with pytest.raises(ValidationError, match="not both"):
            validate_problem(problem(sources=["0"]))

    def test_system_needs_H(self):
        data = problem(H=None)
        with pytest.raises(ValidationError, match="no H"):
            validate_problem(data).system()

    @pytest.mark.parametrize(
        "overrides,message",
        [
            ({"coordinates": {"u": ["u"]}}, "coordinates.x"),
            ({"coordinates": {"x": ["x", "x"], "u": ["u"]}}, "duplicate"),
            ({"coordinates": {"x": ["x", "u"], "u": ["u"]}}, "both x and u"),
            ({"coordinates": {"x": ["x", "1y"], "u": ["u"]}}, "identifiers"),
            ({"potential": "k*u^2"}, "undeclared"),
            ({"parameters": {"x": "1"}}, "invalid parameter"),
            ({"solutions": [{"name": "s", "fields": ["0", "0"]}]}, "expected 1 fields"),
            ({"solutions": [{"fields": ["0"]}]}, "name and fields"),
            ({"extra": 1}, "unknown keys"),
        ],
    )
    def test_invalid(self, overrides, message):
        with pytest.raises(ValidationError, match=message):
            validate_problem(problem(**overrides))

    def test_missing_g(self):
        data = problem()
        del data["g"]
        with pytest.raises(ValidationError, match="g is required"):
            validate_problem(data)

    def test_named_solution(self):
        result = validate_problem(problem())
        assert result.solution("zero").fields == (0,)
        with pytest.raises(ValidationError, match="available: zero"):
            result.solution("other")

    def test_free_parameter(self):
        result = validate_problem(problem(parameters={"m": None}))
        assert result.fixture == {}
        assert sp.Symbol("m") in result.parameters


class TestLoadProblem:
    def test_json(self, tmp_path):
        path = tmp_path / "plane.json"
        path.write_text(json.dumps(problem(name=None)))
        assert load_problem(path).name == "plane"

    def test_yaml(self, tmp_path):
        path = tmp_path / "wave.yaml"
        path.write_text(yaml.safe_dump(problem(name="wave")))
        assert load_problem(path).name == "wave"

    def test_missing(self, tmp_path):
        with pytest.raises(ValidationError, match="not found"):
            load_problem(tmp_path / "absent.json")

    def test_malformed(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ValidationError, match="cannot read"):
            load_problem(path)

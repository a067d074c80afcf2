"""Command line: parsing, exit codes, JSON output and setting resolution."""

import json
from argparse import Namespace

import pytest
import sympy as sp
import yaml
from sympy.polys.polyerrors import PolynomialError

from collineate.cli.commands.verify import parse_generator, select_solutions
from collineate.cli.context import ansatz_for, engine_context, tolerance
from collineate.cli.output import EXIT_INPUT, EXIT_OK, EXIT_SOLVER, EXIT_VERIFY, exit_code
from collineate.cli.parser import parse_args
from collineate.collineations import solver
from collineate.core.config import Config
from collineate.core.exceptions import (
    AssemblerError,
    CaseError,
    ConfigError,
    ParseError,
    SolverError,
    ValidationError,
)
from collineate.main import main
from collineate.symmetry import Generator
from collineate.validators import ProblemOptions, validate_problem

LAPLACE = {
    "name": "laplace3",
    "coordinates": {"x": ["x", "y", "z"], "u": ["u"]},
    "g": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    "H": [["1"]],
    "potential": "0",
    "solutions": [
        {"name": "harmonic", "fields": ["x*y - z"]},
        {"name": "wrong", "fields": ["x^2"]},
    ],
}


@pytest.fixture
def problem_file(tmp_path):
    path = tmp_path / "laplace3.json"
    path.write_text(json.dumps(LAPLACE))
    return path


@pytest.fixture
def sources_file(tmp_path):
    data = {k: v for k, v in LAPLACE.items() if k != "potential"}
    data["sources"] = ["0"]
    path = tmp_path / "sources.yaml"
    path.write_text(yaml.safe_dump(data))
    return path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, "--json", *argv)
    return code, json.loads(out)


class TestParser:
    def test_aliases(self):
        assert parse_args(["coll", "p.json"]).command == "coll"
        assert parse_args(["sym", "p.json", "--noether"]).noether

    def test_global_flags(self):
        args = parse_args(["--seed", "3", "--samples", "5", "--precision", "40", "case", "--list"])
        assert (args.seed, args.samples, args.precision) == (3, 5, 40)

    def test_collineation_defaults(self):
        args = parse_args(["collineations", "p.json"])
        assert args.kind == "kv"
        assert args.metric == "g"
        assert args.degree is None

    def test_verify_needs_a_source(self):
        with pytest.raises(SystemExit):
            parse_args(["verify", "-g", "1; 0"])

    def test_verify_repeatable_options(self):
        args = parse_args(["verify", "--case", "gup-minkowski", "-g", "Z", "-g", "Y", "-s", "all"])
        assert args.generator == ["Z", "Y"]
        assert args.solution == ["all"]
        assert args.points == 10

    def test_lie_and_noether_exclusive(self):
        with pytest.raises(SystemExit):
            parse_args(["case", "laplace-flat", "--lie", "--noether"])

    def test_unknown_kind(self):
        with pytest.raises(SystemExit):
            parse_args(["collineations", "p.json", "--kind", "projective"])


class TestExitCodes:
    @pytest.mark.parametrize(
        "error,code",
        [
            (ValidationError("bad"), EXIT_INPUT),
            (ParseError("bad", 0), EXIT_INPUT),
            (ConfigError("bad"), EXIT_INPUT),
            (CaseError("bad"), EXIT_INPUT),
            (SolverError("bad"), EXIT_SOLVER),
            (AssemblerError("bad"), EXIT_SOLVER),
        ],
    )
    def test_mapping(self, error, code):
        assert exit_code(error) == code

    def test_no_command_prints_help(self, capsys):
        code, out = run(capsys)
        assert code == EXIT_OK
        assert "collineate" in out

    def test_unknown_case(self, capsys):
        assert main(["case", "wave"]) == EXIT_INPUT
        assert "unknown case" in capsys.readouterr().err

    def test_missing_problem_file(self, tmp_path):
        assert main(["collineations", str(tmp_path / "absent.json")]) == EXIT_INPUT

    def test_library_failure_exits_with_solver_code(self, capsys, problem_file, monkeypatch):
        def fail(*args):
            raise PolynomialError("cannot handle")

        monkeypatch.setattr(solver, "lie_derivative_metric", fail)
        assert main(["collineations", str(problem_file), "--degree", "1"]) == EXIT_SOLVER
        err = capsys.readouterr().err
        assert "solve_kv" in err
        assert "Traceback" not in err


class TestContext:
    def test_defaults_from_config(self):
        ctx = engine_context(Namespace(seed=None, samples=None, precision=None))
        assert (ctx.seed, ctx.samples, ctx.precision) == (0, 20, 30)

    def test_flag_beats_problem(self):
        options = ProblemOptions(seed=4, samples=6)
        ctx = engine_context(Namespace(seed=9, samples=None, precision=None), options)
        assert ctx.seed == 9
        assert ctx.samples == 6

    def test_environment(self, monkeypatch):
        monkeypatch.setenv("COLLINEATE_SEED", "11")
        Config.reset_instance()
        assert engine_context(Namespace(seed=None)).seed == 11

    def test_tolerance(self):
        assert tolerance(Namespace(tol=None)) == "1e-8"
        assert tolerance(Namespace(tol=None), ProblemOptions(tolerance="1e-5")) == "1e-5"
        assert tolerance(Namespace(tol="1e-3"), ProblemOptions(tolerance="1e-5")) == "1e-3"

    def test_ansatz_only_when_overridden(self, euclidean3, ctx):
        assert ansatz_for(euclidean3, Namespace(degree=None), None, ctx) is None
        assert len(ansatz_for(euclidean3, Namespace(degree=1), None, ctx)) == 4


class TestConfigCommands:
    def test_show(self, capsys):
        code, payload = run_json(capsys, "config", "show")
        assert code == EXIT_OK
        assert payload["schema"] == 1
        assert payload["config"]["engine"]["zero_samples"] == 20

    def test_show_yaml(self, capsys):
        code, out = run(capsys, "config", "show")
        assert yaml.safe_load(out)["ansatz"]["kernel_window"] == [-2, 2]

    def test_upgrade_writes_defaults(self, isolated_config):
        assert main(["config", "upgrade", "--quiet"]) == EXIT_OK
        assert yaml.safe_load(isolated_config.read_text())["engine"]["tolerance"] == "1e-8"

    def test_upgrade_keeps_user_values(self, isolated_config, capsys):
        isolated_config.write_text(yaml.safe_dump({"engine": {"seed": 5}}))
        assert main(["config", "upgrade"]) == EXIT_OK
        data = yaml.safe_load(isolated_config.read_text())
        assert data["engine"]["seed"] == 5
        assert data["engine"]["precision"] == 30
        assert "engine.precision" in capsys.readouterr().err

    def test_path(self, isolated_config, capsys):
        assert main(["config", "path"]) == EXIT_OK
        assert str(isolated_config) in capsys.readouterr().err

    def test_invalid_file(self, isolated_config):
        isolated_config.write_text("- just\n- a list\n")
        assert main(["config", "show"]) == EXIT_INPUT


class TestVerifyHelpers:
    @pytest.fixture
    def system(self, ctx):
        return validate_problem(LAPLACE).system(ctx)

    def test_parse_generator(self, system):
        X = parse_generator("y; -x; 0; 0", system, {})
        assert X.xi == (sp.Symbol("y"), -sp.Symbol("x"), 0)
        assert X.label == "y; -x; 0; 0"

    def test_named_generator(self, system):
        named = {"t": Generator(system.x, system.u, (1, 0, 0), (0,), "t")}
        assert parse_generator("t", system, named) is named["t"]

    @pytest.mark.parametrize("spec", ["1; 0", "1; 0; 0; u +"])
    def test_bad_generator(self, system, spec):
        with pytest.raises(ValidationError):
            parse_generator(spec, system, {})

    def test_select_solutions(self, system, tmp_path):
        available = validate_problem(LAPLACE).solutions
        assert [s.name for s in select_solutions(["all"], available, system)] == ["harmonic", "wrong"]
        path = tmp_path / "extra.yaml"
        path.write_text(yaml.safe_dump({"name": "extra", "fields": ["x*z"]}))
        assert select_solutions([str(path)], available, system)[0].name == "extra"
        with pytest.raises(CaseError, match="available: harmonic, wrong"):
            select_solutions(["missing"], available, system)


class TestVerifyCommand:
    def test_generator_passes(self, capsys, problem_file):
        code, payload = run_json(capsys, "verify", str(problem_file), "-g", "1; 0; 0; 0", "--noether")
        assert code == EXIT_OK
        assert payload["passed"] is True
        assert payload["generators"][0]["noether"]["verdict"] is True

    def test_generator_fails(self, capsys, problem_file):
        code, payload = run_json(capsys, "verify", str(problem_file), "-g", "0; 0; 0; u^2")
        assert code == EXIT_VERIFY
        assert payload["generators"][0]["lie"]["verdict"] is False

    def test_solutions(self, capsys, problem_file):
        code, payload = run_json(capsys, "verify", str(problem_file), "-s", "harmonic")
        assert code == EXIT_OK
        assert payload["solutions"][0]["passed"] is True
        code, payload = run_json(capsys, "verify", str(problem_file), "-s", "all", "--numeric", "--points", "4")
        assert code == EXIT_VERIFY
        assert [s["passed"] for s in payload["solutions"]] == [True, False]
        assert payload["solutions"][0]["points"] == 4

    def test_text_report(self, capsys, problem_file):
        code, out = run(capsys, "verify", str(problem_file), "-s", "harmonic")
        assert code == EXIT_OK
        assert out.startswith("laplace3: PASS")

    def test_noether_without_potential(self, sources_file):
        assert main(["verify", str(sources_file), "-g", "1; 0; 0; 0", "--noether"]) == EXIT_INPUT

    def test_nothing_to_verify(self, problem_file):
        assert main(["verify", str(problem_file)]) == EXIT_INPUT

    def test_case_generator(self, capsys):
        code, payload = run_json(capsys, "verify", "--case", "laplace-flat", "-g", "scaling")
        assert code == EXIT_OK
        assert payload["source"] == "laplace-flat"


class TestCollineationsCommand:
    def test_killing_vectors(self, capsys, problem_file):
        code, payload = run_json(capsys, "collineations", str(problem_file), "--degree", "1")
        assert code == EXIT_OK
        assert payload["command"] == "collineations"
        assert payload["result"]["dimension"] == 6
        assert payload["result"]["complete"] is True

    def test_field_metric(self, capsys, problem_file):
        code, payload = run_json(capsys, "coll", str(problem_file), "--metric", "H", "--kind", "hv", "--degree", "1")
        assert code == EXIT_OK
        assert payload["result"]["dimension"] == 2

    def test_text_report(self, capsys, problem_file):
        code, out = run(capsys, "collineations", str(problem_file), "--degree", "1")
        assert out.startswith("KV of g on (x, y, z) [laplace3]")


class TestCaseCommand:
    def test_list(self, capsys):
        code, payload = run_json(capsys, "case", "--list")
        assert code == EXIT_OK
        assert {c["name"] for c in payload["cases"]} == {
            "gup-hyperbolic",
            "gup-minkowski",
            "laplace-flat",
            "sigma-model",
        }

    def test_rejects_option(self):
        assert main(["case", "gup-minkowski", "--K", "1"]) == EXIT_INPUT

    @pytest.mark.slow
    def test_laplace(self, capsys):
        code, payload = run_json(capsys, "case", "laplace-flat", "--solutions")
        assert code == EXIT_OK
        assert payload["lie"]["dimension"] == 16
        assert payload["noether"]["dimension"] == 13
        assert all(s["passed"] for s in payload["solutions"])

    @pytest.mark.slow
    def test_symmetries_command(self, capsys, problem_file):
        code, payload = run_json(capsys, "symmetries", str(problem_file), "--noether")
        assert code == EXIT_OK
        assert payload["command"] == "symmetries"
        assert payload["lie"]["dimension"] >= payload["noether"]["dimension"]

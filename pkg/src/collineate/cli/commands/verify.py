"""
Verify command handler.

Generators are checked against the Lie (and optionally Noether) condition;
solutions are checked by their residuals. Failures exit with code 3.
"""

import json
from argparse import Namespace
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import yaml

from collineate.cases import FieldSolution, SolutionVerifier, get_case, solution_from_strings
from collineate.cli.context import engine_context, tolerance
from collineate.cli.output import EXIT_OK, EXIT_VERIFY, emit
from collineate.core.exceptions import CaseError, ParseError, ValidationError
from collineate.core.logger import Logger
from collineate.core.utils import EngineContext
from collineate.expr import parse
from collineate.symmetry import Generator, QuasilinearSystem, check_lie_condition, check_noether_condition
from collineate.validators import ProblemOptions, load_problem

SOLUTION_SUFFIXES = (".json", ".yaml", ".yml")


def parse_generator(spec: str, system: QuasilinearSystem, named: Dict[str, Generator]) -> Generator:
    """
    A case generator by name, or ``xi_1; ...; xi_n; eta_1; ...; eta_m``.

    Raises:
        ValidationError: On a wrong component count or an unparsable component.
    """
    if spec in named:
        return named[spec]
    parts = [p.strip() for p in spec.split(";")]
    if len(parts) != system.n + system.m:
        known = f" or one of {', '.join(named)}" if named else ""
        raise ValidationError(
            f"generator '{spec}' has {len(parts)} components",
            f"expected {system.n} xi and {system.m} eta components separated by ';'{known}",
        )
    try:
        components = [parse(p) for p in parts]
    except ParseError as e:
        raise ValidationError(f"generator '{spec}': {e.message}", e.details)
    return Generator(system.x, system.u, components[: system.n], components[system.n :], spec)


def _check_generator(
    system: QuasilinearSystem, X: Generator, noether: bool, ctx: EngineContext, logger: Logger
) -> Tuple[bool, Dict[str, object]]:
    lie = check_lie_condition(system, X, ctx)
    logger.verdict(f"{X.label}: Lie", lie.verdict, lie.probabilistic)
    record: Dict[str, object] = {"generator": X.to_dict(), "lie": lie.to_dict()}
    passed = lie.verdict
    if system.V is not None:
        result = check_noether_condition(system.g, system.H, system.V, X, ctx=ctx)
        record["noether"] = result.to_dict()
        if noether:
            logger.verdict(f"{X.label}: Noether", result.verdict, result.probabilistic)
            passed = passed and result.verdict
        else:
            logger.info(f"{X.label}: Noether {'yes' if result.verdict else 'no'}")
    elif noether:
        raise ValidationError("the system has no potential, so no Noether condition")
    record["passed"] = passed
    return passed, record


def _read_solution_file(path: Path, system: QuasilinearSystem) -> FieldSolution:
    text = path.read_text(encoding="utf-8")
    try:
        data = yaml.safe_load(text) if path.suffix.lower() != ".json" else json.loads(text)
    except (json.JSONDecodeError, yaml.YAMLError) as e:
        raise ValidationError(f"{path}: cannot read the solution file", str(e))
    if not isinstance(data, dict) or not isinstance(data.get("fields"), list):
        raise ValidationError(f"{path}: expected a mapping with name and fields")
    try:
        return solution_from_strings(
            str(data.get("name") or path.stem), system.x, data["fields"], data.get("fixture")
        )
    except ParseError as e:
        raise ValidationError(f"{path}: {e.message}", e.details)


def select_solutions(
    specs: Sequence[str], available: Sequence[FieldSolution], system: QuasilinearSystem
) -> List[FieldSolution]:
    """
    Resolve ``--solution`` values: ``all``, a solution file, or a name
    (selecting every variant with that name).

    Raises:
        CaseError: For an unknown solution name.
    """
    chosen: List[FieldSolution] = []
    for spec in specs:
        path = Path(spec)
        if spec == "all":
            chosen.extend(available)
        elif path.suffix.lower() in SOLUTION_SUFFIXES and path.exists():
            chosen.append(_read_solution_file(path, system))
        else:
            matches = [s for s in available if s.name == spec]
            if not matches:
                names = sorted({s.name for s in available}) or ["none"]
                raise CaseError(f"unknown solution: {spec}", f"available: {', '.join(names)}")
            chosen.extend(matches)
    return chosen


def handle_verify(args: Namespace) -> int:
    """
    Handle the verify command.

    Returns:
        0 when every generator and every non-published solution passes, 3 otherwise.
    """
    logger = Logger(verbose=args.verbose, no_color=args.no_color)
    if not args.generator and not args.solution:
        raise ValidationError("nothing to verify", "give --generator and/or --solution")

    options: Optional[ProblemOptions] = None
    if args.case:
        ctx = engine_context(args)
        case = get_case(args.case, verbose=args.verbose, ctx=ctx)
        system, available, named, source = case.system, case.solutions(), case.generators(), case.NAME
    else:
        problem = load_problem(Path(args.file))
        options = problem.options
        ctx = engine_context(args, options)
        system, available, named, source = problem.system(ctx), problem.solutions, {}, problem.name

    passed = True
    generator_records = []
    if args.generator:
        logger.step(1, 2 if args.solution else 1, "Checking generators")
    for spec in args.generator:
        ok, record = _check_generator(system, parse_generator(spec, system, named), args.noether, ctx, logger)
        passed = passed and ok
        generator_records.append(record)

    solution_records = []
    if args.solution:
        logger.step(2 if args.generator else 1, 2 if args.generator else 1, "Checking solutions")
        verifier = SolutionVerifier(verbose=args.verbose, ctx=ctx)
        for solution in select_solutions(args.solution, available, system):
            report = verifier.verify(
                system,
                solution,
                tol=tolerance(args, options),
                count=args.points,
                numeric=True if args.numeric else None,
            )
            if solution.variant != "published":
                passed = passed and report.passed
            solution_records.append(report.to_dict())

    emit(
        args,
        {
            "command": "verify",
            "source": source,
            "passed": passed,
            "generators": generator_records,
            "solutions": solution_records,
        },
        "verify.txt.j2",
    )
    return EXIT_OK if passed else EXIT_VERIFY

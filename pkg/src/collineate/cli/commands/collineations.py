"""
Collineations command handler.
"""

from argparse import Namespace
from pathlib import Path

from collineate.cli.context import ansatz_for, engine_context
from collineate.cli.output import EXIT_OK, emit
from collineate.collineations import CollineationKind, CollineationSolver
from collineate.core.exceptions import ValidationError
from collineate.core.logger import Logger
from collineate.validators import load_problem


def handle_collineations(args: Namespace) -> int:
    """
    Solve one collineation class for g or H of a problem file.

    Returns:
        Exit code.
    """
    logger = Logger(verbose=args.verbose, no_color=args.no_color)
    problem = load_problem(Path(args.file))
    metric = problem.g if args.metric == "g" else problem.H
    if metric is None:
        raise ValidationError(f"problem '{problem.name}' has no H")

    ctx = engine_context(args, problem.options)
    logger.step(1, 1, f"Solving {args.kind.upper()} equations of {args.metric} ({metric.dim} dimensions)")
    solver = CollineationSolver(verbose=args.verbose, ctx=ctx)
    found = solver.solve(CollineationKind(args.kind), metric, ansatz_for(metric, args, problem.options, ctx))
    if found.infinite_conformal:
        logger.warning("the conformal algebra of a 2-dimensional metric is infinite; basis truncated to the ansatz")

    emit(
        args,
        {"command": "collineations", "problem": problem.name, "metric": args.metric, "result": found.to_dict()},
        "collineations.txt.j2",
    )
    return EXIT_OK

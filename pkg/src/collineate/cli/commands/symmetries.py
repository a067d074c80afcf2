"""
Symmetries command handler.
"""

from argparse import Namespace
from pathlib import Path

from collineate.assembler import SymmetryAssembler
from collineate.cli.context import ansatz_for, engine_context
from collineate.cli.output import EXIT_OK, emit
from collineate.core.logger import Logger
from collineate.validators import load_problem


def handle_symmetries(args: Namespace) -> int:
    """
    Assemble the Lie point symmetries of a problem file and, with
    ``--noether``, its Noether symmetries and conserved currents.

    Returns:
        Exit code.
    """
    logger = Logger(verbose=args.verbose, no_color=args.no_color)
    problem = load_problem(Path(args.file))
    ctx = engine_context(args, problem.options)
    system = problem.system(ctx)
    logger.info(f"{problem.name}: n = {system.n}, m = {system.m}")

    assembler = SymmetryAssembler(verbose=args.verbose, ctx=ctx)
    result = assembler.run(
        system,
        lie=True,
        noether=args.noether,
        g_ansatz=ansatz_for(system.g, args, problem.options, ctx),
        H_ansatz=ansatz_for(system.H, args, problem.options, ctx),
        bound_case=args.bound,
    )
    emit(args, {"command": "symmetries", "problem": problem.name, **result.to_dict()}, "symmetries.txt.j2")
    return EXIT_OK

"""
Case command handler.
"""

from argparse import Namespace

from collineate.cases import get_case, list_cases
from collineate.cli.context import engine_context
from collineate.cli.output import EXIT_OK, EXIT_VERIFY, emit
from collineate.core.logger import Logger
from collineate.core.utils import dump_json


def _handle_list(args: Namespace, logger: Logger) -> int:
    cases = list_cases()
    if args.json:
        print(dump_json({"schema": 1, "cases": cases}))
        return EXIT_OK
    logger.header("Built-in cases")
    logger.table(
        ["Name", "Description", "Options"],
        [
            [c["name"], c["description"], ", ".join(f"{k}={v}" for k, v in c["options"].items()) or "-"]
            for c in cases
        ],
    )
    return EXIT_OK


def handle_case(args: Namespace) -> int:
    """
    Run a built-in case: symmetries, and on request its checks and solutions.

    Returns:
        Exit code; 3 when a derived solution fails verification.
    """
    logger = Logger(verbose=args.verbose, no_color=args.no_color)
    if args.list or not args.name:
        return _handle_list(args, logger)

    ctx = engine_context(args)
    case = get_case(args.name, verbose=args.verbose, ctx=ctx, n=args.n, m=args.m, K=args.K)
    logger.info(f"{case.DISPLAY_NAME}")
    result = case.symmetries(lie=not args.noether, noether=not args.lie)
    payload = {"command": "case", "case": case.describe(), **result.to_dict()}

    if args.checks:
        logger.section("Checks")
        payload["checks"] = case.checks()

    passed = True
    if args.solutions:
        logger.section("Solutions")
        reports = case.verify_solutions()
        passed = all(r.passed for r in reports if r.variant != "published")
        payload["solutions"] = [r.to_dict() for r in reports]

    emit(args, payload, "symmetries.txt.j2")
    return EXIT_OK if passed else EXIT_VERIFY

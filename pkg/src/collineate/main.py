"""
Main entry point for the collineate CLI.
"""

import sys
from typing import List, Optional

from collineate.cli.commands import (
    handle_case,
    handle_collineations,
    handle_config,
    handle_symmetries,
    handle_verify,
)
from collineate.cli.output import exit_code
from collineate.cli.parser import create_parser, parse_args
from collineate.core.exceptions import CollineateError
from collineate.core.logger import Logger

HANDLERS = {
    "collineations": handle_collineations,
    "coll": handle_collineations,
    "symmetries": handle_symmetries,
    "sym": handle_symmetries,
    "verify": handle_verify,
    "case": handle_case,
    "config": handle_config,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point.

    Returns:
        Exit code: 0 success, 1 input error, 2 solver error, 3 verification failed.
    """
    args = parse_args(argv)

    if not args.command:
        create_parser().print_help()
        return 0

    handler = HANDLERS.get(args.command)
    if handler is None:
        print(f"Unknown command: {args.command}", file=sys.stderr)
        return 1

    try:
        return handler(args)
    except CollineateError as e:
        Logger(verbose=args.verbose, no_color=args.no_color).error(e.message, e.details)
        return exit_code(e)
    except KeyboardInterrupt:
        print("\nInterrupted", file=sys.stderr)
        return 130


def cli():
    """CLI entry point for setuptools console_scripts."""
    sys.exit(main())


if __name__ == "__main__":
    cli()

"""
Argument parser for the collineate CLI.
"""

import argparse
from typing import List, Optional

from collineate import __version__

COLLINEATION_KINDS = ["kv", "hv", "ckv", "ac", "kt2"]


def create_parser() -> argparse.ArgumentParser:
    """
    Create the main argument parser.

    Returns:
        Configured ArgumentParser instance.
    """
    description = f"""collineate v{__version__}

Lie and Noether point symmetries of quasilinear second-order systems
from the collineations of the metrics g and H.

QUICK START:
  collineate case --list                  Built-in cases
  collineate case gup-minkowski           Lie and Noether symmetries of a case
  collineate collineations problem.json --kind kv"""

    epilog = """EXAMPLES:
  collineate case laplace-flat --n 3 --m 2
  collineate --json symmetries problem.yaml --noether
  collineate verify --case gup-minkowski --generator Z
  collineate verify --case gup-hyperbolic --solution all
  collineate config show

EXIT CODES:
  0 success, 1 input error, 2 solver error, 3 verification failed
"""

    parser = argparse.ArgumentParser(
        prog="collineate",
        description=description,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=epilog,
    )

    parser.add_argument(
        "--version", "-V",
        action="version",
        version=f"collineate {__version__}",
    )
    parser.add_argument(
        "--verbose", "-v",
        action="store_true",
        help="Enable verbose output",
    )
    parser.add_argument(
        "--no-color",
        action="store_true",
        help="Disable colored output",
    )
    parser.add_argument(
        "--json",
        action="store_true",
        help="Print results as JSON on stdout",
    )
    parser.add_argument(
        "--seed",
        type=int,
        help="Random seed (default: problem file, COLLINEATE_SEED, config)",
    )
    parser.add_argument(
        "--samples",
        type=int,
        help="Sample points per probabilistic zero test",
    )
    parser.add_argument(
        "--precision",
        type=int,
        help="Working precision in decimal digits",
    )

    subparsers = parser.add_subparsers(
        dest="command",
        title="commands",
        description="Available commands",
        metavar="<command>",
    )

    _add_collineations_parser(subparsers)
    _add_symmetries_parser(subparsers)
    _add_verify_parser(subparsers)
    _add_case_parser(subparsers)
    _add_config_parser(subparsers)

    return parser


def _add_collineations_parser(subparsers) -> None:
    collineations = subparsers.add_parser(
        "collineations",
        aliases=["coll"],
        help="Solve for KVs, HVs, CKVs, ACs or Killing tensors of a metric",
    )
    collineations.add_argument("file", help="Problem file (JSON or YAML)")
    collineations.add_argument(
        "--kind", "-k",
        choices=COLLINEATION_KINDS,
        default="kv",
        help="Collineation class (default: kv)",
    )
    collineations.add_argument(
        "--metric",
        choices=["g", "H"],
        default="g",
        help="Metric to solve for (default: g)",
    )
    collineations.add_argument(
        "--degree", "-d",
        type=int,
        help="Polynomial degree of the ansatz",
    )


def _add_symmetries_parser(subparsers) -> None:
    symmetries = subparsers.add_parser(
        "symmetries",
        aliases=["sym"],
        help="Assemble the Lie (and Noether) point symmetries of a system",
    )
    symmetries.add_argument("file", help="Problem file (JSON or YAML)")
    symmetries.add_argument(
        "--noether",
        action="store_true",
        help="Also assemble Noether symmetries with gauges and currents",
    )
    symmetries.add_argument(
        "--bound",
        choices=["laplace-flat", "sigma-model", "gup"],
        help="Report the closed-form dimension bound of this family",
    )
    symmetries.add_argument(
        "--degree", "-d",
        type=int,
        help="Polynomial degree of the ansatz",
    )


def _add_verify_parser(subparsers) -> None:
    verify = subparsers.add_parser(
        "verify",
        help="Check generators or solutions against a system",
    )
    source = verify.add_mutually_exclusive_group(required=True)
    source.add_argument("file", nargs="?", help="Problem file (JSON or YAML)")
    source.add_argument("--case", "-c", help="Built-in case name")
    verify.add_argument(
        "--generator", "-g",
        action="append",
        default=[],
        metavar="EXPR-LIST",
        help="Generator as 'xi_1; ...; xi_n; eta_1; ...; eta_m' or a case generator name",
    )
    verify.add_argument(
        "--solution", "-s",
        action="append",
        default=[],
        metavar="NAME",
        help="Solution name, 'all', or a solution file",
    )
    verify.add_argument(
        "--noether",
        action="store_true",
        help="Require generators to be Noether symmetries as well",
    )
    verify.add_argument(
        "--points", "-p",
        type=int,
        default=10,
        help="Sample points for numeric residuals (default: 10)",
    )
    verify.add_argument(
        "--tol",
        help="Residual tolerance (default: problem file or config)",
    )
    verify.add_argument(
        "--numeric",
        action="store_true",
        help="Evaluate symbolic solutions at sample points instead of the zero test",
    )


def _add_case_parser(subparsers) -> None:
    case = subparsers.add_parser(
        "case",
        help="Run a built-in case",
        description="Symmetries, checks and solutions of the built-in cases.",
    )
    case.add_argument("name", nargs="?", help="Case name")
    case.add_argument("--list", "-l", action="store_true", help="List the built-in cases")
    case.add_argument("--n", type=int, help="Number of independent variables")
    case.add_argument("--m", type=int, help="Number of dependent variables")
    case.add_argument("--K", help="Curvature of the sigma-model target")
    only = case.add_mutually_exclusive_group()
    only.add_argument("--lie", action="store_true", help="Lie symmetries only")
    only.add_argument("--noether", action="store_true", help="Noether symmetries only")
    case.add_argument("--checks", action="store_true", help="Run the case consistency checks")
    case.add_argument("--solutions", action="store_true", help="Verify the closed-form solutions")


def _add_config_parser(subparsers) -> None:
    config = subparsers.add_parser(
        "config",
        help="Manage the configuration file",
        description="Commands for managing the collineate configuration file.",
    )
    config_sub = config.add_subparsers(
        dest="action",
        title="config commands",
    )
    config_sub.add_parser("show", help="Show the effective configuration")
    config_sub.add_parser("path", help="Show the configuration file path")
    upgrade = config_sub.add_parser(
        "upgrade",
        help="Add missing default keys to the configuration file",
        description="Add new configuration options while preserving existing values.",
    )
    upgrade.add_argument("--quiet", "-q", action="store_true", help="Suppress output")


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """
    Parse command line arguments.

    Args:
        argv: Arguments (sys.argv[1:] by default).
    """
    return create_parser().parse_args(argv)

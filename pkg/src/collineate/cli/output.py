"""
Report rendering and exit codes for the CLI.

Human readable reports come from the Jinja2 templates shipped with the
package; ``--json`` prints the same payload as sorted, indented JSON on
stdout while log lines stay on stderr.
"""

import sys
from argparse import Namespace
from typing import Any, Dict, Optional

from jinja2 import Environment, PackageLoader, TemplateNotFound

from collineate.core.exceptions import (
    CaseError,
    CollineateError,
    ConfigError,
    ParseError,
    ValidationError,
)
from collineate.core.utils import dump_json

SCHEMA = 1

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SOLVER = 2
EXIT_VERIFY = 3

_INPUT_ERRORS = (ValidationError, ParseError, ConfigError, CaseError)

_environment: Optional[Environment] = None


def exit_code(error: CollineateError) -> int:
    """Bad input maps to 1, every other engine failure to 2."""
    if isinstance(error, _INPUT_ERRORS):
        return EXIT_INPUT
    return EXIT_SOLVER


def _templates() -> Environment:
    global _environment
    if _environment is None:
        _environment = Environment(
            loader=PackageLoader("collineate", "templates"),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )
    return _environment


def render(template: str, payload: Dict[str, Any]) -> str:
    try:
        return _templates().get_template(template).render(**payload)
    except TemplateNotFound:
        return dump_json(payload) + "\n"


def emit(args: Namespace, payload: Dict[str, Any], template: str) -> None:
    """Print ``payload`` as JSON under ``--json``, otherwise through ``template``."""
    payload = {"schema": SCHEMA, **payload}
    if getattr(args, "json", False):
        sys.stdout.write(dump_json(payload) + "\n")
    else:
        sys.stdout.write(render(template, payload))
    sys.stdout.flush()

"""CLI commands package for collineate."""

from collineate.cli.commands.case import handle_case
from collineate.cli.commands.collineations import handle_collineations
from collineate.cli.commands.config import handle_config
from collineate.cli.commands.symmetries import handle_symmetries
from collineate.cli.commands.verify import handle_verify

__all__ = [
    "handle_case",
    "handle_collineations",
    "handle_config",
    "handle_symmetries",
    "handle_verify",
]

"""CLI module for collineate."""

from collineate.cli.parser import create_parser, parse_args

__all__ = ["create_parser", "parse_args"]

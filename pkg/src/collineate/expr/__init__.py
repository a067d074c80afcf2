"""
Symbolic expression kernel.

Expressions are immutable sympy trees over exact rationals, symbols and the
kernels exp, ln, sin, cos, sinh, cosh and sqrt.
"""

from enum import Enum

import sympy as sp

from collineate.expr.kernel import (
    Bindings,
    ZeroTest,
    differentiate,
    eval_float,
    is_zero,
    simplify,
    substitute,
)
from collineate.expr.parser import KERNELS, Parser
from collineate.expr.printer import to_string


class SymbolKind(str, Enum):
    """Role of a symbol, derived from the space that owns it."""

    COORDINATE_X = "coordinate-x"
    COORDINATE_U = "coordinate-u"
    JET = "jet"
    PARAMETER = "parameter"


def parse(text: str) -> sp.Expr:
    """
    Parse an expression string into canonical form.

    Raises:
        ParseError: With the byte offset of the offending token.
    """
    return simplify(Parser(text).parse())


def symbol(name: str) -> sp.Symbol:
    """Return the symbol the parser produces for ``name``."""
    return sp.Symbol(name)


def symbols(names) -> tuple:
    return tuple(symbol(n) for n in names)


__all__ = [
    "Bindings",
    "KERNELS",
    "SymbolKind",
    "ZeroTest",
    "differentiate",
    "eval_float",
    "is_zero",
    "parse",
    "simplify",
    "substitute",
    "symbol",
    "symbols",
    "to_string",
]

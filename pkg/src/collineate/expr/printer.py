"""
Canonical printer emitting the same grammar the parser accepts.
"""

import sympy as sp
from sympy.printing.precedence import PRECEDENCE
from sympy.printing.str import StrPrinter

from collineate.core.exceptions import ExprError


_PRINTABLE_FUNCTIONS = {sp.exp, sp.sin, sp.cos, sp.sinh, sp.cosh}


class GrammarPrinter(StrPrinter):
    """StrPrinter variant using ``^``, ``ln`` and ``sqrt`` only."""

    def _print_Pow(self, expr, rational=False):
        base, exponent = expr.base, expr.exp

        if exponent.is_Rational and not exponent.is_Integer:
            if exponent.q != 2:
                raise ExprError(f"exponent {exponent} is not expressible in the grammar")
            root = f"sqrt({self._print(base)})"
            if exponent.p == 1:
                return root
            if exponent.p == -1:
                return f"1/{root}"
            return f"{root}^{self._exponent(exponent.p)}"

        if not exponent.is_Integer:
            raise ExprError(f"symbolic exponent in {sp.sstr(expr)} is not expressible")

        base_str = self.parenthesize(base, PRECEDENCE["Pow"], strict=True)
        if exponent == -1:
            return f"1/{base_str}"
        return f"{base_str}^{self._exponent(int(exponent))}"

    @staticmethod
    def _exponent(value: int) -> str:
        return f"({value})" if value < 0 else str(value)

    def _print_log(self, expr):
        return f"ln({self._print(expr.args[0])})"

    def _print_Exp1(self, expr):
        return "exp(1)"

    def _print_Function(self, expr):
        if expr.func in _PRINTABLE_FUNCTIONS:
            return f"{expr.func.__name__}({self._print(expr.args[0])})"
        raise ExprError(f"{expr.func.__name__} is not part of the expression grammar")

    _print_exp = _print_Function
    _print_sin = _print_Function
    _print_cos = _print_Function
    _print_sinh = _print_Function
    _print_cosh = _print_Function

    def _print_Float(self, expr):
        raise ExprError("floating constants are not allowed inside expressions")

    def _not_printable(self, expr):
        raise ExprError(f"{sp.sstr(expr)} is not part of the expression grammar")

    _print_Pi = _not_printable
    _print_ImaginaryUnit = _not_printable
    _print_Infinity = _not_printable
    _print_NegativeInfinity = _not_printable
    _print_ComplexInfinity = _not_printable
    _print_NaN = _not_printable
    _print_Abs = _not_printable
    _print_Derivative = _not_printable
    _print_Integral = _not_printable


_PRINTER = GrammarPrinter({"order": None})


def to_string(e: sp.Expr) -> str:
    """Print an expression in the parser's grammar."""
    return _PRINTER.doprint(sp.sympify(e))

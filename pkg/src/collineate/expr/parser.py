"""
Recursive-descent parser for the expression grammar.

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := ("+" | "-") unary | power
    power   := atom ("^" unary)?
    atom    := number | identifier | kernel "(" expr ")" | "(" expr ")"
    kernel  := "exp" | "ln" | "sin" | "cos" | "sinh" | "cosh" | "sqrt"
    number  := digits ("." digits)?

``^`` is right associative and binds tighter than unary minus, so ``-x^2``
is ``-(x^2)``. Exponents must reduce to integer constants; rational powers
are only reachable through ``sqrt``.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List

import sympy as sp

from collineate.core.exceptions import ParseError


KERNELS: Dict[str, Callable[[sp.Expr], sp.Expr]] = {
    "exp": sp.exp,
    "ln": sp.log,
    "sin": sp.sin,
    "cos": sp.cos,
    "sinh": sp.sinh,
    "cosh": sp.cosh,
    "sqrt": sp.sqrt,
}

_OPERATORS = "+-*/^()"


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "end"
    value: str
    offset: int  # byte offset into the UTF-8 source


def tokenize(text: str) -> List[Token]:
    """Split an expression string into tokens with byte offsets."""
    tokens: List[Token] = []
    i = 0
    n = len(text)

    def byte_offset(index: int) -> int:
        return len(text[:index].encode("utf-8"))

    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        start = i
        if ch.isdigit() or (ch == "." and i + 1 < n and text[i + 1].isdigit()):
            while i < n and text[i].isdigit():
                i += 1
            if i < n and text[i] == ".":
                i += 1
                if i >= n or not text[i].isdigit():
                    raise ParseError("malformed number", byte_offset(start), text)
                while i < n and text[i].isdigit():
                    i += 1
            tokens.append(Token("num", text[start:i], byte_offset(start)))
        elif ch.isascii() and (ch.isalpha() or ch == "_"):
            while i < n and text[i].isascii() and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(Token("name", text[start:i], byte_offset(start)))
        elif ch in _OPERATORS:
            tokens.append(Token("op", ch, byte_offset(start)))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", byte_offset(start), text)

    tokens.append(Token("end", "", byte_offset(n)))
    return tokens


class Parser:
    """
    Parser producing raw sympy expressions.

    Callers normally go through :func:`collineate.expr.parse`, which also
    brings the result to canonical form.
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _error(self, message: str, token: Token) -> ParseError:
        return ParseError(message, token.offset, self.text)

    def _expect(self, op: str) -> Token:
        token = self.current
        if token.kind != "op" or token.value != op:
            found = token.value or "end of input"
            raise self._error(f"expected {op!r}, found {found!r}", token)
        return self._advance()

    def parse(self) -> sp.Expr:
        if self.current.kind == "end":
            raise self._error("empty expression", self.current)
        result = self._expr()
        if self.current.kind != "end":
            raise self._error(f"unexpected token {self.current.value!r}", self.current)
        return result

    def _expr(self) -> sp.Expr:
        result = self._term()
        while self.current.kind == "op" and self.current.value in "+-":
            op = self._advance().value
            rhs = self._term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def _term(self) -> sp.Expr:
        result = self._unary()
        while self.current.kind == "op" and self.current.value in "*/":
            op_token = self._advance()
            rhs = self._unary()
            if op_token.value == "*":
                result = result * rhs
            else:
                if rhs == 0:
                    raise self._error("division by literal zero", op_token)
                result = result / rhs
        return result

    def _unary(self) -> sp.Expr:
        if self.current.kind == "op" and self.current.value in "+-":
            op = self._advance().value
            operand = self._unary()
            return operand if op == "+" else -operand
        return self._power()

    def _power(self) -> sp.Expr:
        base = self._atom()
        if self.current.kind == "op" and self.current.value == "^":
            self._advance()
            start = self.current
            exponent = self._unary()
            if not exponent.is_Integer:
                raise self._error("non-integer exponent (use sqrt for square roots)", start)
            if base == 0 and exponent < 0:
                raise self._error("zero raised to a negative power", start)
            return sp.Pow(base, exponent)
        return base

    def _atom(self) -> sp.Expr:
        token = self.current
        if token.kind == "num":
            self._advance()
            return sp.Rational(token.value)
        if token.kind == "name":
            self._advance()
            if self.current.kind == "op" and self.current.value == "(":
                kernel = KERNELS.get(token.value)
                if kernel is None:
                    raise self._error(f"unknown kernel {token.value!r}", token)
                self._advance()
                argument = self._expr()
                self._expect(")")
                return kernel(argument)
            return sp.Symbol(token.value)
        if token.kind == "op" and token.value == "(":
            self._advance()
            inner = self._expr()
            self._expect(")")
            return inner
        found = token.value or "end of input"
        raise self._error(f"unexpected token {found!r}", token)

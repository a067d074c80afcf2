"""
Expression kernel: canonical simplification, differentiation, substitution,
zero testing and arbitrary precision evaluation.

Expressions are sympy trees restricted to the grammar of
:mod:`collineate.expr.parser`. The canonical form is sympy's rational normal
form (``cancel``) over the ring generated by the symbols and the kernel
applications, with kernel arguments canonicalised first.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Union

import mpmath
import sympy as sp
from sympy.polys.polyerrors import CoercionFailed, PolynomialError

from collineate.core.exceptions import EvaluationError, UndecidableSampleError
from collineate.core.utils import EngineContext
from collineate.expr.printer import to_string


Number = Union[int, Fraction, float, str, sp.Rational]
Bindings = Mapping[Union[str, sp.Symbol], Number]

_TRANSCENDENTAL = (sp.exp, sp.log, sp.sin, sp.cos, sp.sinh, sp.cosh)

# random sample points are positive rationals num/den in these ranges
_SAMPLE_NUMERATORS = (1, 50)
_SAMPLE_DENOMINATORS = (7, 23)
_DRAW_FACTOR = 3


@dataclass(frozen=True)
class ZeroTest:
    """Outcome of :func:`is_zero`."""

    zero: bool
    probabilistic: bool = False
    samples: int = 0

    def __bool__(self) -> bool:
        return self.zero


def _canonical_arguments(e: sp.Expr) -> sp.Expr:
    """Canonicalise kernel arguments and radicands bottom-up."""
    if e.is_Atom:
        return e
    if isinstance(e, sp.log):
        argument = simplify(e.args[0])
        if isinstance(argument, sp.exp):
            return argument.args[0]
        return sp.log(argument)
    if isinstance(e, _TRANSCENDENTAL):
        return e.func(simplify(e.args[0]))
    if e.is_Pow and not e.exp.is_Integer:
        return sp.Pow(simplify(e.base), e.exp)
    return e.func(*[_canonical_arguments(arg) for arg in e.args])


def simplify(e: sp.Expr) -> sp.Expr:
    """
    Bring an expression to canonical form.

    Rational parts are put over a common denominator with gcd-cancelled
    numerator and denominator; kernels are independent generators except for
    exp(a)exp(b) = exp(a+b), ln(exp(a)) = a and sqrt(a)^2 = a.
    """
    e = sp.sympify(e)
    if e.is_Atom:
        return e
    rebuilt = _canonical_arguments(e)
    try:
        return sp.cancel(rebuilt)
    except (PolynomialError, CoercionFailed):
        return sp.together(sp.expand(rebuilt))


def differentiate(e: sp.Expr, s: sp.Symbol) -> sp.Expr:
    """Exact partial derivative with respect to ``s``, in canonical form."""
    return simplify(sp.diff(sp.sympify(e), s))


def substitute(e: sp.Expr, mapping: Mapping[sp.Symbol, sp.Expr]) -> sp.Expr:
    """Simultaneous substitution followed by simplification."""
    if not mapping:
        return simplify(e)
    return simplify(sp.sympify(e).xreplace({k: sp.sympify(v) for k, v in mapping.items()}))


def _sample_point(rng, symbols: Iterable[sp.Symbol]) -> Dict[sp.Symbol, sp.Rational]:
    return {
        s: sp.Rational(rng.randint(*_SAMPLE_NUMERATORS), rng.randint(*_SAMPLE_DENOMINATORS))
        for s in symbols
    }


def _vanishes_at(e: sp.Expr, point: Mapping[sp.Symbol, sp.Rational], digits: int) -> Optional[bool]:
    """
    Decide whether ``e`` vanishes at a point.

    Returns None when the point is a pole or outside the real domain of a
    kernel in a way that makes the value non-finite.
    """
    value = e.xreplace(point)
    if value.has(sp.zoo, sp.nan, sp.oo, -sp.oo):
        return None
    if value.is_Rational:
        return value == 0

    try:
        numeric = sp.N(value, 2 * digits)
    except (ZeroDivisionError, ValueError):
        return None
    if not numeric.is_finite:
        return None

    terms = value.args if value.is_Add else (value,)
    scale = sum(abs(sp.N(term, 15)) for term in terms)
    if not scale.is_finite:
        return None
    return abs(numeric) <= sp.Float(10) ** (-digits) * (1 + scale)


def is_zero(e: sp.Expr, ctx: Optional[EngineContext] = None) -> ZeroTest:
    """
    Decide whether an expression is identically zero.

    The canonical form is tried first. Otherwise the expression is evaluated at
    ``ctx.samples`` random positive rational points (seeded from the context and
    the expression itself); vanishing at every sample gives a probabilistic yes.

    Raises:
        UndecidableSampleError: If every drawn point is a pole.
    """
    ctx = ctx or EngineContext()
    canonical = simplify(e)
    if canonical == 0:
        return ZeroTest(True)
    if canonical.is_Rational:
        return ZeroTest(False)

    numerator = sp.fraction(canonical)[0] if not canonical.has(sp.log) else canonical
    symbols = sorted(numerator.free_symbols, key=lambda s: s.name)
    rng = ctx.rng("is_zero", to_string(canonical) if _printable(canonical) else sp.srepr(canonical))

    valid = 0
    for _ in range(_DRAW_FACTOR * ctx.samples):
        verdict = _vanishes_at(numerator, _sample_point(rng, symbols), ctx.precision)
        if verdict is None:
            continue
        if not verdict:
            return ZeroTest(False, samples=valid + 1)
        valid += 1
        if valid >= ctx.samples:
            break

    if valid == 0:
        raise UndecidableSampleError(
            "every sample point hit a pole", f"expression: {sp.sstr(canonical)}"
        )
    return ZeroTest(True, probabilistic=True, samples=valid)


def _printable(e: sp.Expr) -> bool:
    try:
        to_string(e)
    except Exception:
        return False
    return True


def _to_mpf(value: Number) -> mpmath.mpf:
    if isinstance(value, (sp.Rational, Fraction)):
        return mpmath.mpf(int(value.numerator)) / int(value.denominator)
    if isinstance(value, sp.Basic):
        return mpmath.mpf(str(sp.N(value, mpmath.mp.dps)))
    if isinstance(value, str) and "/" in value:
        return _to_mpf(Fraction(value))
    return mpmath.mpf(value)


def _evaluate(node: sp.Expr, values: Dict[sp.Symbol, mpmath.mpf]):
    if node.is_Symbol:
        return values[node]
    if node.is_Rational:
        return mpmath.mpf(int(node.p)) / int(node.q)
    if node is sp.E:
        return mpmath.e
    if node is sp.pi:
        return mpmath.pi
    if node.is_Float:
        return mpmath.mpf(str(node))
    if node.is_Add:
        return mpmath.fsum(_evaluate(a, values) for a in node.args)
    if node.is_Mul:
        return mpmath.fprod(_evaluate(a, values) for a in node.args)
    if node.is_Pow:
        base = _evaluate(node.base, values)
        exponent = node.exp
        if exponent.is_Integer:
            if base == 0 and exponent < 0:
                raise EvaluationError("division by zero", sp.sstr(node))
            return base ** int(exponent)
        if exponent.is_Rational and exponent.q == 2:
            if base < 0:
                raise EvaluationError("sqrt of negative value", sp.sstr(node))
            root = mpmath.sqrt(base)
            if root == 0 and exponent < 0:
                raise EvaluationError("division by zero", sp.sstr(node))
            return root ** int(exponent.p)
        if base <= 0:
            raise EvaluationError("non-integer power of nonpositive value", sp.sstr(node))
        return mpmath.power(base, _evaluate(exponent, values))
    if isinstance(node, sp.log):
        argument = _evaluate(node.args[0], values)
        if argument <= 0:
            raise EvaluationError("ln of nonpositive value", sp.sstr(node))
        return mpmath.log(argument)
    functions = {
        sp.exp: mpmath.exp,
        sp.sin: mpmath.sin,
        sp.cos: mpmath.cos,
        sp.sinh: mpmath.sinh,
        sp.cosh: mpmath.cosh,
    }
    if node.func in functions:
        return functions[node.func](_evaluate(node.args[0], values))
    # special-function terms carry their own mpmath evaluation
    evaluator = getattr(node, "mp_evaluate", None)
    if evaluator is not None:
        return evaluator(*[_evaluate(a, values) for a in node.args])
    raise EvaluationError(f"cannot evaluate {node.func.__name__}", sp.sstr(node))


def eval_float(e: sp.Expr, bindings: Bindings, precision: int = 30) -> mpmath.mpf:
    """
    Evaluate an expression at a point with at least ``precision`` digits.

    Args:
        e: Expression to evaluate.
        bindings: Value for every free symbol (by name or symbol).
        precision: Decimal digits, at least 15.

    Raises:
        EvaluationError: On unbound symbols, poles or kernel domain errors.
    """
    if precision < 15:
        raise ValueError("precision must be at least 15 digits")
    e = sp.sympify(e)
    by_name = {str(k): v for k, v in bindings.items()}
    missing = sorted(s.name for s in e.free_symbols if s.name not in by_name)
    if missing:
        raise EvaluationError("unbound symbols", ", ".join(missing))

    with mpmath.workdps(precision + 10):
        values = {s: _to_mpf(by_name[s.name]) for s in e.free_symbols}
        try:
            result = _evaluate(e, values)
        except ZeroDivisionError:
            raise EvaluationError("division by zero", sp.sstr(e))
        return +result

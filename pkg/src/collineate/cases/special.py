"""
Special functions for the closed-form solutions.

Values come from mpmath at the requested working precision. The sympy
terms below let a solution be written as an ordinary expression: sympy
differentiates them through the exact recurrences

    I'_nu = (I_{nu-1} + I_{nu+1}) / 2
    K'_nu = -(K_{nu-1} + K_{nu+1}) / 2
    d/dx 2F1(a, b; c; x) = (a b / c) 2F1(a+1, b+1; c+1; x)

and the numeric evaluator calls ``mp_evaluate``.
"""

from typing import Optional

import mpmath
import sympy as sp

from collineate.core.exceptions import SpecialFunctionError


def _real(value, name: str, *args) -> mpmath.mpf:
    if isinstance(value, mpmath.mpc):
        if abs(value.imag) > mpmath.mpf(10) ** (-(mpmath.mp.dps - 5)) * (1 + abs(value.real)):
            raise SpecialFunctionError(f"{name} is not real at {args}")
        value = value.real
    if not mpmath.isfinite(value):
        raise SpecialFunctionError(f"{name} is not finite at {args}")
    return value


def _mp(value):
    if isinstance(value, sp.Rational):
        return mpmath.mpf(int(value.p)) / int(value.q)
    if isinstance(value, sp.Basic):
        return mpmath.mpf(str(sp.N(value, mpmath.mp.dps)))
    return mpmath.mpf(value)


def _at_precision(precision: Optional[int]):
    if precision is None:
        return mpmath.workdps(mpmath.mp.dps)
    if precision < 15:
        raise SpecialFunctionError("precision must be at least 15 digits")
    return mpmath.workdps(precision + 10)


def bessel_i(order, x, precision: Optional[int] = None) -> mpmath.mpf:
    """
    Modified Bessel function of the first kind I_order(x).

    Raises:
        SpecialFunctionError: For a non-real value (x < 0 with non-integer order).
    """
    with _at_precision(precision):
        order, x = _mp(order), _mp(x)
        return +_real(mpmath.besseli(order, x), "I", order, x)


def bessel_k(order, x, precision: Optional[int] = None) -> mpmath.mpf:
    """
    Modified Bessel function of the second kind K_order(x).

    Integer orders are accepted and give the limit value of the
    non-integer formula (mpmath evaluates it directly), so K_0 and K_1 are
    available without a range or series error.

    Raises:
        SpecialFunctionError: For x <= 0.
    """
    with _at_precision(precision):
        order, x = _mp(order), _mp(x)
        if x <= 0:
            raise SpecialFunctionError(f"K needs a positive argument, got {x}")
        return +_real(mpmath.besselk(order, x), "K", order, x)


def hyp2f1(a, b, c, x, precision: Optional[int] = None) -> mpmath.mpf:
    """
    Gauss hypergeometric function 2F1(a, b; c; x) for real x < 1.

    Raises:
        SpecialFunctionError: When c is a non-positive integer or x >= 1.
    """
    with _at_precision(precision):
        a, b, c, x = _mp(a), _mp(b), _mp(c), _mp(x)
        if c <= 0 and c == mpmath.floor(c):
            raise SpecialFunctionError(f"2F1 is undefined for c = {c}")
        if x >= 1:
            raise SpecialFunctionError(f"2F1 is only evaluated for x < 1, got {x}")
        return +_real(mpmath.hyp2f1(a, b, c, x), "2F1", a, b, c, x)


def ferrers_p(degree, order, x, precision: Optional[int] = None) -> mpmath.mpf:
    """Ferrers function of the first kind P^order_degree(x) on -1 < x < 1."""
    with _at_precision(precision):
        degree, order, x = _mp(degree), _mp(order), _mp(x)
        if not -1 < x < 1:
            raise SpecialFunctionError(f"Ferrers P needs -1 < x < 1, got {x}")
        return +_real(mpmath.legenp(degree, order, x, type=2), "P", degree, order, x)


def ferrers_p_hypergeometric(degree, order, x, precision: Optional[int] = None) -> mpmath.mpf:
    """P^order_degree(x) = ((1+x)/(1-x))^(order/2) 2F1(-degree, degree+1; 1-order; (1-x)/2) / Gamma(1-order)"""
    with _at_precision(precision):
        degree, order, x = _mp(degree), _mp(order), _mp(x)
        if not -1 < x < 1:
            raise SpecialFunctionError(f"Ferrers P needs -1 < x < 1, got {x}")
        factor = mpmath.power((1 + x) / (1 - x), mpmath.mpf(order) / 2) * mpmath.rgamma(1 - order)
        return +(factor * _real(mpmath.hyp2f1(-degree, degree + 1, 1 - order, (1 - x) / 2), "2F1"))


class BesselI(sp.Function):
    """I_nu(z) as an expression term."""

    nargs = 2

    def fdiff(self, argindex=2):
        if argindex != 2:
            raise sp.ArgumentIndexError(self, argindex)
        nu, z = self.args
        return (BesselI(nu - 1, z) + BesselI(nu + 1, z)) / 2

    def mp_evaluate(self, nu, z):
        return bessel_i(nu, z)


class BesselK(sp.Function):
    """K_nu(z) as an expression term."""

    nargs = 2

    def fdiff(self, argindex=2):
        if argindex != 2:
            raise sp.ArgumentIndexError(self, argindex)
        nu, z = self.args
        return -(BesselK(nu - 1, z) + BesselK(nu + 1, z)) / 2

    def mp_evaluate(self, nu, z):
        return bessel_k(nu, z)


class Hyp2F1(sp.Function):
    """2F1(a, b; c; z) as an expression term."""

    nargs = 4

    def fdiff(self, argindex=4):
        if argindex != 4:
            raise sp.ArgumentIndexError(self, argindex)
        a, b, c, z = self.args
        return a * b / c * Hyp2F1(a + 1, b + 1, c + 1, z)

    def mp_evaluate(self, a, b, c, z):
        return hyp2f1(a, b, c, z)


class RGamma(sp.Function):
    """1/Gamma(s), for normalising constants built from parameters."""

    nargs = 1

    def mp_evaluate(self, s):
        return mpmath.rgamma(s)


def modified_bessel_defect(order, x, precision: Optional[int] = None) -> mpmath.mpf:
    """
    x^2 I'' + x I' - (x^2 + order^2) I at a point, with I' and I'' from the
    recurrences.
    """
    with _at_precision(precision):
        order, x = _mp(order), _mp(x)
        i0 = bessel_i(order, x)
        first = (bessel_i(order - 1, x) + bessel_i(order + 1, x)) / 2
        second = (bessel_i(order - 2, x) + 2 * i0 + bessel_i(order + 2, x)) / 4
        return +(x ** 2 * second + x * first - (x ** 2 + mpmath.mpf(order) ** 2) * i0)

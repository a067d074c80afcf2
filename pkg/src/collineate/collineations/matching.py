"""
Coefficient matching.

A determining equation that is linear in a set of unknown constants is given
as one expression per unknown (its coefficient). The expressions are rewritten
as polynomials in the variables and in one generator per independent kernel,
brought over a common denominator, and the coefficient of every monomial in
the numerator becomes one linear row.
"""

from functools import reduce
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import sympy as sp
from sympy.polys.polyerrors import BasePolynomialError

from collineate.core.exceptions import MatchingError
from collineate.expr import simplify

Equation = Mapping[int, sp.Expr]

_TRANSCENDENTAL = (sp.log, sp.sin, sp.cos, sp.sinh, sp.cosh)


def _rational_gcd(a: sp.Rational, b: sp.Rational) -> sp.Rational:
    if a == 0:
        return b
    if b == 0:
        return a
    return sp.Rational(sp.igcd(a.p * b.q, b.p * a.q), a.q * b.q)


class KernelGenerators:
    """
    Maps kernel applications that depend on the variables to fresh symbols.

    Exponentials are split per additive term of their argument. Terms sharing
    the same non-numeric part share one generator G with exp(k*u*t) -> G**k,
    where u is the rational gcd of all coefficients seen for t, so that
    exp(2t) and exp(-4t) become G and G**-2.
    """

    def __init__(self, variables: Sequence[sp.Symbol]):
        self.variables = frozenset(variables)
        self._units: Dict[sp.Expr, sp.Rational] = {}
        self._exp_generators: Dict[sp.Expr, sp.Dummy] = {}
        self._atom_generators: Dict[sp.Expr, sp.Dummy] = {}
        self._root_generators: Dict[Tuple[sp.Expr, int], sp.Dummy] = {}

    def _depends(self, e: sp.Expr) -> bool:
        return bool(e.free_symbols & self.variables)

    def _split(self, argument: sp.Expr) -> List[Tuple[sp.Rational, sp.Expr]]:
        parts = []
        for term in sp.Add.make_args(sp.expand(argument)):
            coeff, rest = term.as_coeff_Mul()
            parts.append((sp.Rational(coeff) if coeff.is_Rational else sp.S.One,
                          rest if coeff.is_Rational else term))
        return parts

    def scan(self, e: sp.Expr) -> None:
        """Record the exponential arguments of ``e``."""
        for atom in sp.sympify(e).atoms(sp.exp):
            for coeff, rest in self._split(atom.args[0]):
                if not self._depends(rest):
                    continue
                unit = self._units.get(rest)
                self._units[rest] = abs(coeff) if unit is None else _rational_gcd(unit, abs(coeff))

    @property
    def generators(self) -> Tuple[sp.Dummy, ...]:
        found = (
            list(self._exp_generators.values())
            + list(self._atom_generators.values())
            + list(self._root_generators.values())
        )
        return tuple(found)

    def _exp(self, atom: sp.exp) -> sp.Expr:
        constant = sp.S.Zero
        product = sp.S.One
        for coeff, rest in self._split(atom.args[0]):
            if not self._depends(rest):
                constant += coeff * rest
                continue
            if rest not in self._units:
                self._units[rest] = abs(coeff)
            generator = self._exp_generators.setdefault(rest, sp.Dummy(f"E{len(self._exp_generators)}"))
            power = coeff / self._units[rest]
            if not power.is_Integer:
                raise MatchingError("exponential outside the scanned kernel lattice", sp.sstr(atom))
            product *= generator ** int(power)
        return sp.exp(constant) * product

    def rewrite(self, e: sp.Expr) -> sp.Expr:
        """Replace kernels of the variables by generator symbols."""
        e = sp.sympify(e)
        mapping: Dict[sp.Expr, sp.Expr] = {}
        for atom in e.atoms(sp.exp):
            if self._depends(atom):
                mapping[atom] = self._exp(atom)
        for atom in e.atoms(*_TRANSCENDENTAL):
            if self._depends(atom):
                mapping[atom] = self._atom_generators.setdefault(
                    atom, sp.Dummy(f"K{len(self._atom_generators)}")
                )
        for atom in e.atoms(sp.Pow):
            if atom.exp.is_Integer or not self._depends(atom.base):
                continue
            if not atom.exp.is_Rational:
                raise MatchingError("non-rational power of a variable", sp.sstr(atom))
            key = (atom.base, int(atom.exp.q))
            root = self._root_generators.setdefault(key, sp.Dummy(f"R{len(self._root_generators)}"))
            mapping[atom] = root ** int(atom.exp.p)
        return e.xreplace(mapping) if mapping else e


def _numerators(pieces: Dict[int, sp.Expr]) -> Dict[int, sp.Expr]:
    """Multiply every piece by the lcm of their denominators."""
    fractions = {k: sp.fraction(sp.cancel(v)) for k, v in pieces.items()}
    common = reduce(sp.lcm, (den for _, den in fractions.values()), sp.S.One)
    return {k: sp.expand(sp.cancel(num * common / den)) for k, (num, den) in fractions.items()}


def match_rows(
    equations: Iterable[Equation],
    columns: int,
    variables: Sequence[sp.Symbol],
) -> sp.Matrix:
    """
    Build the homogeneous linear system sum_k c_k E_k = 0 for every equation.

    Args:
        equations: Each maps an unknown's column to its coefficient expression.
        columns: Number of unknowns.
        variables: Symbols the identities must hold in (coordinates, jets).

    Raises:
        MatchingError: When a coefficient is not polynomial in the variables
            and kernel generators.
    """
    equations = [{k: v for k, v in eq.items() if v != 0} for eq in equations]
    kernels = KernelGenerators(variables)
    for eq in equations:
        for expression in eq.values():
            kernels.scan(expression)

    rows: List[List[sp.Expr]] = []
    for eq in equations:
        if not eq:
            continue
        rewritten = {k: kernels.rewrite(simplify(v)) for k, v in eq.items()}
        try:
            numerators = _numerators(rewritten)
        except BasePolynomialError as e:
            raise MatchingError(
                "cannot clear denominators", "; ".join(sp.sstr(v) for v in eq.values())
            ) from e
        gens = tuple(variables) + kernels.generators

        by_monomial: Dict[Tuple[int, ...], Dict[int, sp.Expr]] = {}
        for column, numerator in numerators.items():
            if numerator == 0:
                continue
            try:
                poly = sp.Poly(numerator, *gens)
            except BasePolynomialError as e:
                raise MatchingError(
                    "coefficient is not a polynomial in the basis generators",
                    sp.sstr(eq[column]),
                ) from e
            for monomial, coefficient in poly.terms():
                if coefficient.free_symbols & set(gens):
                    raise MatchingError("unresolved function product", sp.sstr(coefficient))
                slot = by_monomial.setdefault(monomial, {})
                slot[column] = slot.get(column, sp.S.Zero) + coefficient

        for monomial in sorted(by_monomial):
            row = [sp.S.Zero] * columns
            for column, coefficient in by_monomial[monomial].items():
                row[column] = coefficient
            if any(entry != 0 for entry in row):
                rows.append(row)

    return sp.Matrix(len(rows), columns, [e for row in rows for e in row])


def combine(vector: Sequence[sp.Expr], pieces: Sequence[sp.Expr]) -> sp.Expr:
    """sum_k vector_k * pieces_k in canonical form."""
    return simplify(sp.Add(*[c * p for c, p in zip(vector, pieces) if c != 0]))

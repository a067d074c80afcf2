"""
Finite ansatz bases for the determining equations.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import mpmath
import sympy as sp

from collineate.core.config import Config
from collineate.core.exceptions import AnsatzError
from collineate.core.utils import EngineContext
from collineate.expr import differentiate, eval_float, to_string
from collineate.geometry import Metric

# sample coordinates are k/16 for k in this range
_SAMPLE_RANGE = (1, 32)
_EXTRA_SAMPLES = 4


@dataclass(frozen=True)
class AnsatzSpec:
    """
    Basis functions over a set of coordinates.

    ``flagged`` lists derivatives that still fell outside the span after the
    closure was extended ``closure_depth`` times.
    """

    coords: Tuple[sp.Symbol, ...]
    functions: Tuple[sp.Expr, ...]
    degree: int = 2
    kernel_window: Tuple[int, int] = (-2, 2)
    kernels: Tuple[sp.Expr, ...] = ()
    flagged: Tuple[sp.Expr, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.functions:
            raise AnsatzError("ansatz basis is empty")

    def __len__(self) -> int:
        return len(self.functions)

    def __iter__(self):
        return iter(self.functions)

    def to_dict(self) -> Dict[str, object]:
        return {
            "degree": self.degree,
            "kernel_window": list(self.kernel_window),
            "kernels": [to_string(k) for k in self.kernels],
            "size": len(self.functions),
            "flagged": [to_string(f) for f in self.flagged],
        }


def _monomials(coords: Sequence[sp.Symbol], degree: int) -> List[sp.Expr]:
    found = sp.itermonomials(list(coords), degree) if coords else {sp.S.One}
    return sorted(found, key=lambda mono: (sp.total_degree(mono, *coords) if coords else 0,
                                          sp.default_sort_key(mono)))


def detect_kernels(expressions: Iterable[sp.Expr], coords: Sequence[sp.Symbol]) -> List[sp.Expr]:
    """
    Kernel applications of the coordinates appearing in ``expressions``.

    Exponentials with arguments k*t share the base exp(u*t), u being the
    rational gcd of the coefficients k.
    """
    coord_set = set(coords)
    units: Dict[sp.Expr, sp.Rational] = {}
    others: Dict[str, sp.Expr] = {}
    for e in expressions:
        e = sp.sympify(e)
        for atom in e.atoms(sp.exp):
            if not atom.free_symbols & coord_set:
                continue
            coeff, rest = sp.expand(atom.args[0]).as_coeff_Mul()
            coeff = abs(sp.Rational(coeff)) if coeff.is_Rational else sp.S.One
            previous = units.get(rest)
            if previous is None:
                units[rest] = coeff
            else:
                units[rest] = sp.Rational(
                    sp.igcd(previous.p * coeff.q, coeff.p * previous.q), previous.q * coeff.q
                )
        for atom in e.atoms(sp.log, sp.sin, sp.cos, sp.sinh, sp.cosh):
            if atom.free_symbols & coord_set:
                others[sp.sstr(atom)] = atom
        for atom in e.atoms(sp.Pow):
            if not atom.exp.is_Integer and atom.base.free_symbols & coord_set:
                root = sp.Pow(atom.base, sp.Rational(1, atom.exp.q))
                others[sp.sstr(root)] = root

    kernels = [sp.exp(unit * rest) for rest, unit in units.items()]
    kernels.sort(key=sp.default_sort_key)
    kernels.extend(others[key] for key in sorted(others))
    return kernels


def _structural_terms(e: sp.Expr, coords: Sequence[sp.Symbol]) -> List[sp.Expr]:
    """Coordinate-dependent factors of the terms of an expanded expression."""
    parts = []
    for term in sp.Add.make_args(sp.expand(e)):
        _, dependent = term.as_independent(*coords, as_Add=False)
        if dependent != 1:
            parts.append(dependent)
        elif term != 0:
            parts.append(sp.S.One)
    return parts


def _close(
    functions: List[sp.Expr], coords: Sequence[sp.Symbol], depth: int
) -> Tuple[List[sp.Expr], List[sp.Expr]]:
    """Extend the basis with out-of-span derivative terms, ``depth`` times."""
    known = set(functions)
    for _ in range(depth):
        missing: List[sp.Expr] = []
        for f in functions:
            for x in coords:
                for part in _structural_terms(sp.diff(f, x), coords):
                    if part not in known:
                        known.add(part)
                        missing.append(part)
        if not missing:
            return functions, []
        functions = functions + missing

    outstanding: List[sp.Expr] = []
    for f in functions:
        for x in coords:
            outstanding.extend(
                p for p in _structural_terms(sp.diff(f, x), coords) if p not in known
            )
    return functions, list(dict.fromkeys(outstanding))


def independent_subset(
    functions: Sequence[sp.Expr], coords: Sequence[sp.Symbol], ctx: Optional[EngineContext] = None
) -> List[sp.Expr]:
    """
    Keep the functions that are linearly independent over the constants.

    Each function is evaluated at random points; a running Gram-Schmidt keeps
    a function when its sample vector leaves the span of the kept ones.
    """
    ctx = ctx or EngineContext()
    free = sorted(set().union(*(sp.sympify(f).free_symbols for f in functions)) - set(coords),
                  key=lambda s: s.name)
    variables = list(coords) + free
    rng = ctx.rng("ansatz", tuple(to_string(f) for f in functions))
    count = len(functions) + _EXTRA_SAMPLES
    points = [
        {s.name: sp.Rational(rng.randint(*_SAMPLE_RANGE), 16) for s in variables}
        for _ in range(count)
    ]
    precision = max(ctx.precision, 50)
    threshold = mpmath.mpf(10) ** (-(precision // 2))

    kept: List[sp.Expr] = []
    basis: List[List[mpmath.mpf]] = []
    with mpmath.workdps(precision):
        for f in functions:
            vector = [eval_float(f, point, precision) for point in points]
            norm = mpmath.sqrt(mpmath.fsum(v * v for v in vector))
            if norm == 0:
                continue
            residual = [v / norm for v in vector]
            for _ in range(2):
                for q in basis:
                    overlap = mpmath.fsum(r * c for r, c in zip(residual, q))
                    residual = [r - overlap * c for r, c in zip(residual, q)]
            length = mpmath.sqrt(mpmath.fsum(r * r for r in residual))
            if length > threshold:
                basis.append([r / length for r in residual])
                kept.append(f)
    return kept


def default_ansatz(
    m: Metric,
    degree: Optional[int] = None,
    window: Optional[Tuple[int, int]] = None,
    closure_depth: Optional[int] = None,
    ctx: Optional[EngineContext] = None,
    extra: Sequence[sp.Expr] = (),
) -> AnsatzSpec:
    """
    Monomials of degree <= ``degree`` times integer kernel powers in ``window``.

    Args:
        m: Metric whose components determine the kernels.
        degree: Monomial degree cap (config ``ansatz.degree`` by default).
        window: Inclusive kernel power range (config ``ansatz.kernel_window``).
        closure_depth: Closure extension passes (config ``ansatz.closure_depth``).
        ctx: Context seeding the independence test.
        extra: Further expressions whose kernels should be included.
    """
    config = Config()
    degree = config.ansatz_degree if degree is None else degree
    window = tuple(config.kernel_window if window is None else window)
    closure_depth = config.closure_depth if closure_depth is None else closure_depth
    if degree < 0:
        raise AnsatzError(f"ansatz degree must be >= 0, got {degree}")
    if window[0] > window[1]:
        raise AnsatzError(f"empty kernel window {list(window)}")

    return build_ansatz(
        m.coords,
        list(m.components) + list(extra),
        degree=degree,
        window=window,
        closure_depth=closure_depth,
        ctx=ctx,
    )


def build_ansatz(
    coords: Sequence[sp.Symbol],
    sources: Iterable[sp.Expr],
    degree: int,
    window: Tuple[int, int],
    closure_depth: int = 2,
    ctx: Optional[EngineContext] = None,
) -> AnsatzSpec:
    """Ansatz over ``coords`` with the kernels found in ``sources``."""
    coords = tuple(coords)
    kernels = detect_kernels(sources, coords)
    powers = range(window[0], window[1] + 1)

    functions: List[sp.Expr] = []
    for exponents in product(powers, repeat=len(kernels)):
        factor = sp.Mul(*[k ** p for k, p in zip(kernels, exponents)])
        functions.extend(mono * factor for mono in _monomials(coords, degree))
    functions = list(dict.fromkeys(functions))

    functions, flagged = _close(functions, coords, closure_depth)
    functions = independent_subset(functions, coords, ctx)
    return AnsatzSpec(
        coords=coords,
        functions=tuple(functions),
        degree=degree,
        kernel_window=(int(window[0]), int(window[1])),
        kernels=tuple(kernels),
        flagged=tuple(flagged),
    )


def custom_ansatz(
    coords: Sequence[sp.Symbol],
    functions: Sequence[sp.Expr],
    ctx: Optional[EngineContext] = None,
) -> AnsatzSpec:
    """Ansatz from explicit basis functions (dependent ones are dropped)."""
    if not functions:
        raise AnsatzError("ansatz basis is empty")
    kept = independent_subset(list(dict.fromkeys(sp.sympify(f) for f in functions)), coords, ctx)
    return AnsatzSpec(coords=tuple(coords), functions=tuple(kept), degree=0, kernel_window=(0, 0))

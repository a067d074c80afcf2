"""
Residual verification of field solutions.

A solution is substituted into P^A. Symbolic solutions are decided by the
zero test; solutions with special-function terms are evaluated at sample
points from the solution's coordinate box, with derivatives of the special
functions coming from their recurrences.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import mpmath
import sympy as sp

from collineate.cases.solutions import EvaluationMode, FieldSolution
from collineate.core.config import Config
from collineate.core.exceptions import CaseError, EvaluationError, SpecialFunctionError
from collineate.core.logger import Logger
from collineate.core.utils import EngineContext
from collineate.expr import eval_float, is_zero
from collineate.symmetry import QuasilinearSystem

Point = Dict[sp.Symbol, sp.Rational]

_UNIT_BOX = (sp.S.Zero, sp.S.One)


@dataclass
class ResidualReport:
    solution: str
    variant: str
    mode: EvaluationMode
    passed: bool
    max_residual: Optional[float] = None
    tolerance: Optional[float] = None
    points: int = 0
    skipped: List[Tuple[Dict[str, str], str]] = field(default_factory=list)
    probabilistic: bool = False

    def to_dict(self) -> Dict[str, object]:
        return {
            "solution": self.solution,
            "variant": self.variant,
            "mode": self.mode.value,
            "passed": self.passed,
            "max_residual": None if self.max_residual is None else mpmath.nstr(self.max_residual, 6),
            "tolerance": None if self.tolerance is None else mpmath.nstr(self.tolerance, 3),
            "points": self.points,
            "skipped": [{"point": p, "reason": r} for p, r in self.skipped],
            "probabilistic": self.probabilistic,
        }


def sample_points(
    solution: FieldSolution, count: int = 10, ctx: Optional[EngineContext] = None
) -> List[Point]:
    """
    Rational points strictly inside the solution's coordinate box, seeded
    from the context and the solution name.
    """
    ctx = ctx or EngineContext()
    rng = ctx.rng("points", solution.name, solution.variant)
    points = []
    for _ in range(count):
        point = {}
        for s in solution.x:
            low, high = solution.domain.get(s, _UNIT_BOX)
            point[s] = low + (high - low) * sp.Rational(rng.randint(1, 99), 100)
        points.append(point)
    return points


def _bindings(solution: FieldSolution, point: Mapping[sp.Symbol, sp.Expr]) -> Dict[str, sp.Expr]:
    values = {k.name: v for k, v in solution.fixture.items()}
    values.update({k.name: v for k, v in point.items()})
    return values


def _tolerance(tol) -> mpmath.mpf:
    if tol is None:
        tol = Config().tolerance
    return mpmath.mpf(str(tol))


def verify_solution(
    system: QuasilinearSystem,
    solution: FieldSolution,
    points: Optional[Sequence[Point]] = None,
    tol=None,
    ctx: Optional[EngineContext] = None,
    count: int = 10,
    numeric: Optional[bool] = None,
) -> ResidualReport:
    """
    Check that ``solution`` solves ``system``.

    Args:
        system: Target system.
        solution: Fields in the system's coordinates.
        points: Sample points for the numeric mode (drawn from the domain otherwise).
        tol: Bound on max |P^A| in the numeric mode (configured tolerance by default).
        ctx: Seed, zero-test samples and working precision.
        count: Number of drawn points.
        numeric: Force the numeric mode for a symbolic solution.

    Raises:
        CaseError: On a field count mismatch or, in the numeric mode, symbols
            bound neither by the fixture nor by the points.
    """
    ctx = ctx or EngineContext()
    solution.check_fields(system.m)
    if tuple(solution.x) != tuple(system.x):
        raise CaseError(
            f"solution '{solution.name}' is written in {', '.join(s.name for s in solution.x)}",
            f"system coordinates are {', '.join(s.name for s in system.x)}",
        )
    residuals = system.residuals(solution.fields)
    if numeric is None:
        numeric = solution.mode is EvaluationMode.NUMERIC

    if not numeric:
        verdicts = [is_zero(r, ctx) for r in residuals]
        return ResidualReport(
            solution.name,
            solution.variant,
            EvaluationMode.SYMBOLIC,
            passed=all(verdicts),
            probabilistic=any(v.probabilistic for v in verdicts),
            points=max((v.samples for v in verdicts), default=0),
        )

    tolerance = _tolerance(tol)
    points = list(points) if points is not None else sample_points(solution, count, ctx)
    bound = set(solution.fixture) | {s for p in points[:1] for s in p}
    missing = sorted(
        {s.name for r in residuals for s in r.free_symbols} - {s.name for s in bound}
    )
    if missing:
        raise CaseError(
            f"unbound symbols in the residual of '{solution.name}'", ", ".join(missing)
        )

    report = ResidualReport(
        solution.name, solution.variant, EvaluationMode.NUMERIC, passed=False, tolerance=tolerance
    )
    worst = mpmath.mpf(0)
    for point in points:
        bindings = _bindings(solution, point)
        try:
            values = [abs(eval_float(r, bindings, ctx.precision)) for r in residuals]
        except (EvaluationError, SpecialFunctionError) as e:
            report.skipped.append(({k.name: str(v) for k, v in point.items()}, e.message))
            continue
        worst = max([worst] + values)
        report.points += 1

    if report.points:
        report.max_residual = worst
        report.passed = worst <= tolerance
    return report


class SolutionVerifier:
    """
    Verifies solutions and logs the verdicts.

    Published variants that fail while the derived one passes are logged as
    warnings rather than errors.
    """

    def __init__(self, verbose: bool = False, ctx: Optional[EngineContext] = None):
        self.verbose = verbose
        self.ctx = ctx or EngineContext.from_config()
        self.logger = Logger(verbose=verbose)

    def verify(
        self,
        system: QuasilinearSystem,
        solution: FieldSolution,
        points: Optional[Sequence[Point]] = None,
        tol=None,
        count: int = 10,
        numeric: Optional[bool] = None,
    ) -> ResidualReport:
        self.logger.debug(
            f"verifying {solution.name} ({solution.variant or solution.mode.value}) "
            f"against {system.name or 'system'}"
        )
        report = verify_solution(system, solution, points, tol, self.ctx, count, numeric)
        label = solution.name if not solution.variant else f"{solution.name} [{solution.variant}]"
        if report.max_residual is not None:
            label += f": max residual {mpmath.nstr(report.max_residual, 3)} over {report.points} points"
        if report.passed or solution.variant != "published":
            self.logger.verdict(label, report.passed, report.probabilistic)
        else:
            self.logger.warning(f"{label} (published form does not solve the system)")
        for point, reason in report.skipped:
            self.logger.debug(f"skipped {point}: {reason}")
        if report.probabilistic:
            self.logger.debug(f"{solution.name}: verdict from {report.points} random samples")
        return report

    def verify_all(
        self, system: QuasilinearSystem, solutions: Sequence[FieldSolution], **options
    ) -> List[ResidualReport]:
        return [self.verify(system, s, **options) for s in solutions]

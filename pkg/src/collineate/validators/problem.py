"""
Problem file validation for collineate.

A problem file (JSON or YAML) names the coordinates, the metrics g and H,
a potential or explicit sources, parameters with optional fixture values
and run options. Every expression is a string in the expression grammar.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import sympy as sp
import yaml

from collineate.cases.solutions import FieldSolution, solution_from_strings
from collineate.core.exceptions import CollineateError, ParseError, ValidationError
from collineate.core.utils import EngineContext
from collineate.expr import is_zero, parse, symbols, to_string
from collineate.geometry import Metric, MetricRole
from collineate.symmetry import QuasilinearSystem, euler_lagrange, make_system

OPTION_KEYS = ("degree", "kernel_window", "samples", "seed", "precision", "tolerance")
TOP_LEVEL_KEYS = ("name", "coordinates", "g", "H", "potential", "sources", "parameters", "options", "solutions")


@dataclass
class ProblemOptions:
    degree: Optional[int] = None
    kernel_window: Optional[Tuple[int, int]] = None
    samples: Optional[int] = None
    seed: Optional[int] = None
    precision: Optional[int] = None
    tolerance: Optional[str] = None


@dataclass
class Problem:
    name: str
    x: Tuple[sp.Symbol, ...]
    u: Tuple[sp.Symbol, ...]
    g: Metric
    H: Optional[Metric] = None
    V: Optional[sp.Expr] = None
    F: Optional[Tuple[sp.Expr, ...]] = None
    parameters: Dict[sp.Symbol, Optional[sp.Expr]] = field(default_factory=dict)
    options: ProblemOptions = field(default_factory=ProblemOptions)
    solutions: List[FieldSolution] = field(default_factory=list)

    @property
    def fixture(self) -> Dict[sp.Symbol, sp.Expr]:
        return {k: v for k, v in self.parameters.items() if v is not None}

    def system(self, ctx: Optional[EngineContext] = None) -> QuasilinearSystem:
        """
        The Euler-Lagrange system when a potential is given, otherwise the
        system with the explicit sources.

        Raises:
            ValidationError: If H is missing.
        """
        if self.H is None:
            raise ValidationError(f"problem '{self.name}' has no H", "H is required for symmetry and solution checks")
        ctx = ctx or EngineContext()
        if self.V is not None:
            return euler_lagrange(self.g, self.H, self.V, name=self.name, ctx=ctx)
        sources = self.F if self.F is not None else tuple(sp.S.Zero for _ in self.u)
        return make_system(self.g, self.H, sources, name=self.name, ctx=ctx)

    def solution(self, name: str) -> FieldSolution:
        for s in self.solutions:
            if s.name == name:
                return s
        available = ", ".join(s.name for s in self.solutions) or "none"
        raise ValidationError(f"problem '{self.name}' has no solution '{name}'", f"available: {available}")


def _expression(text: Any, location: str) -> sp.Expr:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ValidationError(f"{location}: expected an expression string, got {type(text).__name__}")
    try:
        return parse(str(text))
    except ParseError as e:
        raise ValidationError(f"{location}: {e.message}", e.details)


def _names(value: Any, location: str) -> Tuple[str, ...]:
    if not isinstance(value, list) or not all(isinstance(v, str) and v.isidentifier() for v in value):
        raise ValidationError(f"{location}: expected a list of identifiers")
    duplicates = sorted({v for v in value if value.count(v) > 1})
    if duplicates:
        raise ValidationError(f"{location}: duplicate names", ", ".join(duplicates))
    return tuple(value)


def is_valid_matrix(rows: Any, dim: int) -> Tuple[bool, str]:
    """
    Check the shape of a component matrix.

    Returns:
        Tuple of (is_valid, error_message).
    """
    if not isinstance(rows, list) or len(rows) != dim:
        return False, f"expected {dim} rows"
    for a, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            return False, f"row {a} must have {dim} entries"
    return True, ""


def validate_metric(rows: Any, coords: Sequence[str], label: str, role: MetricRole) -> Metric:
    """
    Validate and build a metric from component strings.

    Raises:
        ValidationError: Naming the offending components.
    """
    dim = len(coords)
    ok, error = is_valid_matrix(rows, dim)
    if not ok:
        raise ValidationError(f"{label}: {error}", f"coordinates: {', '.join(coords)}")

    matrix = [[_expression(rows[a][b], f"{label}[{a}][{b}]") for b in range(dim)] for a in range(dim)]
    asymmetric = [
        f"{label}[{a}][{b}] = {to_string(matrix[a][b])} vs {label}[{b}][{a}] = {to_string(matrix[b][a])}"
        for a in range(dim)
        for b in range(a + 1, dim)
        if not is_zero(matrix[a][b] - matrix[b][a])
    ]
    if asymmetric:
        raise ValidationError(f"{label} is not symmetric", "; ".join(asymmetric))
    try:
        return Metric(symbols(coords), sp.ImmutableMatrix(matrix), role)
    except CollineateError as e:
        raise ValidationError(f"{label}: {e.message}", e.details)


def validate_options(raw: Any) -> ProblemOptions:
    if raw is None:
        return ProblemOptions()
    if not isinstance(raw, dict):
        raise ValidationError("options: expected a mapping")
    unknown = sorted(set(raw) - set(OPTION_KEYS))
    if unknown:
        raise ValidationError(f"options: unknown keys {', '.join(unknown)}", f"allowed: {', '.join(OPTION_KEYS)}")

    options = ProblemOptions()
    for key in ("degree", "samples", "seed", "precision"):
        if key in raw:
            value = raw[key]
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ValidationError(f"options.{key}: expected a non-negative integer, got {value!r}")
            setattr(options, key, value)
    if options.precision is not None and options.precision < 15:
        raise ValidationError("options.precision: at least 15 digits are required")
    if options.samples == 0:
        raise ValidationError("options.samples: at least one sample is required")
    if "kernel_window" in raw:
        window = raw["kernel_window"]
        if (
            not isinstance(window, list)
            or len(window) != 2
            or not all(isinstance(w, int) for w in window)
            or window[0] > window[1]
        ):
            raise ValidationError(f"options.kernel_window: expected [low, high], got {window!r}")
        options.kernel_window = (window[0], window[1])
    if "tolerance" in raw:
        try:
            if float(raw["tolerance"]) <= 0:
                raise ValueError
        except (TypeError, ValueError):
            raise ValidationError(f"options.tolerance: expected a positive number, got {raw['tolerance']!r}")
        options.tolerance = str(raw["tolerance"])
    return options


def validate_problem(data: Any, source: str = "<problem>") -> Problem:
    """
    Validate a parsed problem document.

    Raises:
        ValidationError: On any structural, parse or consistency failure.
    """
    if not isinstance(data, dict):
        raise ValidationError(f"{source}: the problem must be a mapping")
    unknown = sorted(set(data) - set(TOP_LEVEL_KEYS))
    if unknown:
        raise ValidationError(f"{source}: unknown keys {', '.join(unknown)}")

    coordinates = data.get("coordinates")
    if not isinstance(coordinates, dict) or "x" not in coordinates:
        raise ValidationError(f"{source}: coordinates.x is required")
    x_names = _names(coordinates["x"], "coordinates.x")
    u_names = _names(coordinates.get("u", []), "coordinates.u")
    shared = sorted(set(x_names) & set(u_names))
    if shared:
        raise ValidationError("coordinates: names used for both x and u", ", ".join(shared))

    if "g" not in data:
        raise ValidationError(f"{source}: g is required")
    g = validate_metric(data["g"], x_names, "g", MetricRole.INDEPENDENT)
    H = None
    if data.get("H") is not None:
        if not u_names:
            raise ValidationError("H given without coordinates.u")
        H = validate_metric(data["H"], u_names, "H", MetricRole.DEPENDENT)

    if "potential" in data and "sources" in data:
        raise ValidationError(f"{source}: give either potential or sources, not both")
    V = _expression(data["potential"], "potential") if "potential" in data else None
    F = None
    if "sources" in data:
        raw = data["sources"]
        if not isinstance(raw, list) or len(raw) != len(u_names):
            raise ValidationError(f"sources: expected {len(u_names)} expressions")
        F = tuple(_expression(f, f"sources[{A}]") for A, f in enumerate(raw))

    parameters: Dict[sp.Symbol, Optional[sp.Expr]] = {}
    raw_parameters = data.get("parameters") or {}
    if not isinstance(raw_parameters, dict):
        raise ValidationError("parameters: expected a mapping of name to value (or null)")
    for name, value in raw_parameters.items():
        if not str(name).isidentifier() or name in x_names + u_names:
            raise ValidationError(f"parameters: invalid parameter name '{name}'")
        parameters[sp.Symbol(name)] = None if value is None else _expression(value, f"parameters.{name}")

    known = set(x_names + u_names) | {s.name for s in parameters}
    expressions = list(g.components) + (list(H.components) if H is not None else [])
    expressions += [V] if V is not None else list(F or ())
    stray = sorted({s.name for e in expressions for s in e.free_symbols} - known)
    if stray:
        raise ValidationError("undeclared symbols", ", ".join(stray))

    solutions = []
    for k, raw in enumerate(data.get("solutions") or []):
        if not isinstance(raw, dict) or "name" not in raw or not isinstance(raw.get("fields"), list):
            raise ValidationError(f"solutions[{k}]: expected a mapping with name and fields")
        if len(raw["fields"]) != len(u_names):
            raise ValidationError(f"solutions[{k}]: expected {len(u_names)} fields")
        for A, f in enumerate(raw["fields"]):
            _expression(f, f"solutions[{k}].fields[{A}]")
        fixture = {s.name: to_string(v) for s, v in parameters.items() if v is not None}
        fixture.update({str(a): str(b) for a, b in (raw.get("fixture") or {}).items()})
        solutions.append(solution_from_strings(str(raw["name"]), g.coords, raw["fields"], fixture))

    return Problem(
        name=str(data.get("name") or Path(source).stem),
        x=g.coords,
        u=symbols(u_names),
        g=g,
        H=H,
        V=V,
        F=F,
        parameters=parameters,
        options=validate_options(data.get("options")),
        solutions=solutions,
    )


def load_problem(path: Path) -> Problem:
    """
    Read and validate a problem file; ``.yaml``/``.yml`` are read as YAML,
    anything else as JSON.

    Raises:
        ValidationError: If the file is missing, malformed or invalid.
    """
    path = Path(path)
    if not path.exists():
        raise ValidationError(f"problem file not found: {path}")
    text = path.read_text(encoding="utf-8")
    try:
        if path.suffix.lower() in (".yaml", ".yml"):
            data = yaml.safe_load(text)
        else:
            data = json.loads(text)
    except (json.JSONDecodeError, yaml.YAMLError) as e:
        raise ValidationError(f"{path}: cannot read the file", str(e))
    return validate_problem(data, str(path))

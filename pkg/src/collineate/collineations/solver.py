"""
Collineation solver.

Every determining equation is linear in the ansatz coefficients, so each
equation is evaluated once per basis direction and the system is assembled by
coefficient matching. The exact nullspace gives the collineation basis.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import wraps
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple, Union

import sympy as sp

from collineate.collineations.ansatz import AnsatzSpec, default_ansatz
from collineate.collineations.gradient import GradientInfo, classify_gradient
from collineate.collineations.linalg import nullspace
from collineate.collineations.matching import combine, match_rows
from collineate.core.exceptions import SolverError
from collineate.core.logger import Logger
from collineate.core.utils import EngineContext, library_errors
from collineate.expr import differentiate, is_zero, simplify, to_string
from collineate.geometry import (
    Metric,
    VField,
    divergence,
    killing_tensor_defect,
    lie_derivative_connection,
    lie_derivative_metric,
)


class CollineationKind(str, Enum):
    KV = "kv"
    HV = "hv"
    CKV = "ckv"
    AC = "ac"
    KT2 = "kt2"


def known_maximum(kind: CollineationKind, dim: int) -> Optional[int]:
    """Largest possible dimension for a metric of dimension ``dim`` (None if unbounded)."""
    if kind == CollineationKind.KV:
        return dim * (dim + 1) // 2
    if kind == CollineationKind.HV:
        return dim * (dim + 1) // 2 + 1
    if kind == CollineationKind.CKV:
        return None if dim == 2 else (dim + 1) * (dim + 2) // 2
    if kind == CollineationKind.AC:
        return dim * (dim + 1)
    return dim * (dim + 1) ** 2 * (dim + 2) // 12


Tensor = sp.ImmutableMatrix


def _solver_boundary(method: Callable[..., "CollineationSet"]) -> Callable[..., "CollineationSet"]:
    """Report sympy failures of a solve as SolverError."""

    @wraps(method)
    def wrapper(self: "CollineationSolver", m: Metric, ansatz: Optional[AnsatzSpec] = None) -> "CollineationSet":
        with library_errors(SolverError, f"{method.__name__} on ({', '.join(c.name for c in m.coords)})"):
            return method(self, m, ansatz)

    return wrapper


@dataclass(frozen=True)
class CollineationElement:
    """One basis element: a vector field (or a symmetric tensor for KT2)."""

    field: Optional[VField] = None
    tensor: Optional[Tensor] = None
    psi: sp.Expr = sp.S.Zero
    gradient: Optional[GradientInfo] = None

    @property
    def homothety(self) -> Optional[sp.Expr]:
        """Constant conformal factor, None when psi depends on the coordinates."""
        coords = self.field.coords if self.field is not None else ()
        return self.psi if not (sp.sympify(self.psi).free_symbols & set(coords)) else None

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {}
        if self.field is not None:
            data["field"] = self.field.to_strings()
            data["psi"] = to_string(self.psi)
        if self.tensor is not None:
            data["tensor"] = [[to_string(self.tensor[a, b]) for b in range(self.tensor.cols)]
                              for a in range(self.tensor.rows)]
        if self.gradient is not None:
            data["gradient"] = self.gradient.to_dict()
        return data


@dataclass
class CollineationSet:
    """
    Basis of a collineation space found within an ansatz.

    ``complete`` is true only when the dimension reaches the known maximum;
    otherwise the result reads "dimension >= k within the ansatz".
    """

    kind: CollineationKind
    metric: Metric
    ansatz: AnsatzSpec
    elements: List[CollineationElement] = field(default_factory=list)
    maximum: Optional[int] = None
    infinite_conformal: bool = False
    probabilistic: bool = False

    @property
    def dimension(self) -> int:
        return len(self.elements)

    @property
    def complete(self) -> bool:
        return self.maximum is not None and self.dimension == self.maximum

    @property
    def basis(self) -> List[Union[VField, Tensor]]:
        return [e.tensor if self.kind == CollineationKind.KT2 else e.field for e in self.elements]

    def proper(self) -> List[CollineationElement]:
        """Elements that are not in the next smaller class (proper HVs or proper CKVs)."""
        if self.kind == CollineationKind.HV:
            return [e for e in self.elements if e.psi != 0]
        if self.kind == CollineationKind.CKV:
            return [e for e in self.elements if e.homothety is None]
        return []

    def gradient_elements(self) -> List[CollineationElement]:
        return [e for e in self.elements if e.gradient is not None and e.gradient.gradient]

    def _components(self, item: Union[VField, Tensor]) -> List[sp.Expr]:
        if isinstance(item, VField):
            return list(item.components)
        n = self.metric.dim
        return [item[a, b] for a in range(n) for b in range(a, n)]

    def contains(self, item: Union[VField, Tensor]) -> bool:
        """Whether ``item`` lies in the span of the basis (constant coefficients)."""
        target = self._components(item)
        if all(c == 0 for c in target):
            return True
        if not self.elements:
            return False
        columns = len(self.elements) + 1
        members = [self._components(b) for b in self.basis]
        equations = []
        for index, value in enumerate(target):
            equation = {i: member[index] for i, member in enumerate(members)}
            equation[columns - 1] = -value
            equations.append(equation)
        rows = match_rows(equations, columns, self.metric.coords)
        return any(vector[-1] != 0 for vector in nullspace(rows, columns))

    def to_dict(self) -> Dict[str, object]:
        return {
            "kind": self.kind.value,
            "metric": self.metric.to_strings(),
            "dimension": self.dimension,
            "maximum": self.maximum,
            "complete": self.complete,
            "infinite_conformal": self.infinite_conformal,
            "probabilistic": self.probabilistic,
            "ansatz": self.ansatz.to_dict(),
            "elements": [e.to_dict() for e in self.elements],
        }


class CollineationSolver:
    """
    Solves KV, HV, CKV, AC and second-order Killing tensor equations.

    Args:
        verbose: Emit debug lines for system sizes and verdicts.
        ctx: Engine context for zero tests.
    """

    def __init__(self, verbose: bool = False, ctx: Optional[EngineContext] = None):
        self.verbose = verbose
        self.ctx = ctx or EngineContext()
        self.logger = Logger(verbose=verbose)
        self._guarded: Set[Metric] = set()

    def _guard_dimension(self, m: Metric) -> None:
        if m.dim > self.ctx.dimension_warning and m not in self._guarded:
            self._guarded.add(m)
            self.logger.warning(
                f"cofactor inversion of a {m.dim}-dimensional metric (guard is {self.ctx.dimension_warning})"
            )

    def _ansatz(self, m: Metric, ansatz: Optional[AnsatzSpec]) -> AnsatzSpec:
        self._guard_dimension(m)
        if ansatz is None:
            return default_ansatz(m, ctx=self.ctx)
        if tuple(ansatz.coords) != tuple(m.coords):
            raise SolverError(
                "ansatz coordinates do not match the metric",
                f"{[c.name for c in ansatz.coords]} vs {[c.name for c in m.coords]}",
            )
        return ansatz

    @staticmethod
    def _directions(m: Metric, ansatz: AnsatzSpec) -> List[VField]:
        zero = [sp.S.Zero] * m.dim
        directions = []
        for a in range(m.dim):
            for f in ansatz.functions:
                components = list(zero)
                components[a] = f
                directions.append(VField(m.coords, tuple(components)))
        return directions

    def _nullspace(
        self, m: Metric, pieces: Sequence[Sequence[sp.Expr]], label: str
    ) -> List[List[sp.Expr]]:
        """pieces[j][i] is equation i evaluated on unknown j."""
        columns = len(pieces)
        count = len(pieces[0]) if pieces else 0
        equations = [{j: pieces[j][i] for j in range(columns)} for i in range(count)]
        rows = match_rows(equations, columns, m.coords)
        self.logger.debug(f"{label}: {rows.rows} rows x {columns} unknowns")
        basis = nullspace(rows, columns)
        self.logger.debug(f"{label}: nullspace dimension {len(basis)}")
        return basis

    @staticmethod
    def _field(m: Metric, directions: Sequence[VField], vector: Sequence[sp.Expr]) -> VField:
        return VField(
            m.coords,
            tuple(combine(vector, [d[a] for d in directions]) for a in range(m.dim)),
        )

    def _check(self, label: str, residuals: Sequence[sp.Expr]) -> bool:
        probabilistic = False
        for residual in residuals:
            verdict = is_zero(residual, self.ctx)
            if not verdict:
                raise SolverError(f"{label} failed re-verification", f"residual {sp.sstr(residual)}")
            probabilistic = probabilistic or verdict.probabilistic
        if probabilistic:
            self.logger.warning(f"{label} verified probabilistically")
        return probabilistic

    def _conformal_pieces(
        self, m: Metric, directions: Sequence[VField], extra: Callable[[sp.Expr], List[sp.Expr]]
    ) -> Tuple[List[List[sp.Expr]], List[sp.Expr]]:
        n = m.dim
        pieces, psis = [], []
        for d in directions:
            lie = lie_derivative_metric(m, d)
            psi = simplify(divergence(m, d) / n)
            equations = [lie[a, b] - 2 * psi * m[a, b] for a in range(n) for b in range(a, n)]
            pieces.append(equations + extra(psi))
            psis.append(psi)
        return pieces, psis

    def _conformal_set(
        self,
        kind: CollineationKind,
        m: Metric,
        ansatz: Optional[AnsatzSpec],
        extra: Callable[[sp.Expr], List[sp.Expr]],
    ) -> CollineationSet:
        ansatz = self._ansatz(m, ansatz)
        directions = self._directions(m, ansatz)
        pieces, psis = self._conformal_pieces(m, directions, extra)
        vectors = self._nullspace(m, pieces, kind.value.upper())

        elements = []
        probabilistic = False
        for vector in vectors:
            xi = self._field(m, directions, vector)
            psi = combine(vector, psis)
            lie = lie_derivative_metric(m, xi)
            probabilistic |= self._check(
                f"{kind.value.upper()} {xi}",
                [lie[a, b] - 2 * psi * m[a, b] for a in range(m.dim) for b in range(a, m.dim)],
            )
            elements.append(CollineationElement(field=xi, psi=psi))

        if kind == CollineationKind.HV:
            elements = self._split_homothety(m, elements)
        if kind in (CollineationKind.KV, CollineationKind.HV):
            elements = [
                CollineationElement(e.field, psi=e.psi, gradient=classify_gradient(m, e.field, self.ctx))
                for e in elements
            ]

        result = CollineationSet(
            kind=kind,
            metric=m,
            ansatz=ansatz,
            elements=elements,
            maximum=known_maximum(kind, m.dim),
            infinite_conformal=kind == CollineationKind.CKV and m.dim == 2,
            probabilistic=probabilistic,
        )
        if result.infinite_conformal:
            self.logger.warning("2-dimensional metric: the conformal algebra is infinite, basis is truncated")
        return result

    @staticmethod
    def _split_homothety(m: Metric, elements: List[CollineationElement]) -> List[CollineationElement]:
        """Rebase so that all but at most one element are KVs and the last has psi = 1."""
        proper = next((e for e in elements if e.psi != 0), None)
        if proper is None:
            return elements
        unit = proper.field.scale(1 / proper.psi)
        killing = [
            CollineationElement(field=e.field - unit.scale(e.psi), psi=sp.S.Zero)
            for e in elements
            if e is not proper
        ]
        return killing + [CollineationElement(field=unit, psi=sp.S.One)]

    @_solver_boundary
    def solve_ckv(self, m: Metric, ansatz: Optional[AnsatzSpec] = None) -> CollineationSet:
        """L_xi g = 2 psi g with psi = div(xi)/dim."""
        return self._conformal_set(CollineationKind.CKV, m, ansatz, lambda psi: [])

    @_solver_boundary
    def solve_kv(self, m: Metric, ansatz: Optional[AnsatzSpec] = None) -> CollineationSet:
        return self._conformal_set(CollineationKind.KV, m, ansatz, lambda psi: [psi])

    @_solver_boundary
    def solve_hv(self, m: Metric, ansatz: Optional[AnsatzSpec] = None) -> CollineationSet:
        """KVs plus at most one proper homothety normalised to psi = 1."""
        return self._conformal_set(
            CollineationKind.HV, m, ansatz, lambda psi: [differentiate(psi, x) for x in m.coords]
        )

    @_solver_boundary
    def solve_affine(self, m: Metric, ansatz: Optional[AnsatzSpec] = None) -> CollineationSet:
        """L_xi Gamma^a_bc = 0."""
        ansatz = self._ansatz(m, ansatz)
        n = m.dim
        directions = self._directions(m, ansatz)

        def equations(v: VField) -> List[sp.Expr]:
            lie = lie_derivative_connection(m, v)
            return [lie[a][b][c] for a in range(n) for b in range(n) for c in range(b, n)]

        vectors = self._nullspace(m, [equations(d) for d in directions], "AC")
        elements = []
        probabilistic = False
        for vector in vectors:
            xi = self._field(m, directions, vector)
            probabilistic |= self._check(f"AC {xi}", equations(xi))
            elements.append(CollineationElement(field=xi, psi=simplify(divergence(m, xi) / n)))
        return CollineationSet(
            kind=CollineationKind.AC,
            metric=m,
            ansatz=ansatz,
            elements=elements,
            maximum=known_maximum(CollineationKind.AC, n),
            probabilistic=probabilistic,
        )

    @_solver_boundary
    def solve_killing_tensor2(self, m: Metric, ansatz: Optional[AnsatzSpec] = None) -> CollineationSet:
        """Symmetric Lambda_ab with Lambda_(ab;c) = 0."""
        ansatz = self._ansatz(m, ansatz)
        n = m.dim
        slots = [(a, b) for a in range(n) for b in range(a, n)]
        tensors = []
        for a, b in slots:
            for f in ansatz.functions:
                entries = sp.zeros(n, n)
                entries[a, b] = entries[b, a] = f
                tensors.append(sp.ImmutableMatrix(entries))

        def equations(t: Tensor) -> List[sp.Expr]:
            return list(killing_tensor_defect(m, t.tolist()))

        vectors = self._nullspace(m, [equations(t) for t in tensors], "KT2")
        elements = []
        probabilistic = False
        for vector in vectors:
            tensor = sp.ImmutableMatrix(
                n, n, lambda a, b: combine(vector, [t[a, b] for t in tensors])
            )
            probabilistic |= self._check("KT2", equations(tensor))
            elements.append(CollineationElement(tensor=tensor))
        return CollineationSet(
            kind=CollineationKind.KT2,
            metric=m,
            ansatz=ansatz,
            elements=elements,
            maximum=known_maximum(CollineationKind.KT2, n),
            probabilistic=probabilistic,
        )

    def solve(self, kind: CollineationKind, m: Metric, ansatz: Optional[AnsatzSpec] = None) -> CollineationSet:
        handlers = {
            CollineationKind.KV: self.solve_kv,
            CollineationKind.HV: self.solve_hv,
            CollineationKind.CKV: self.solve_ckv,
            CollineationKind.AC: self.solve_affine,
            CollineationKind.KT2: self.solve_killing_tensor2,
        }
        return handlers[CollineationKind(kind)](m, ansatz)


def solve_ckv(m: Metric, ansatz: Optional[AnsatzSpec] = None, ctx: Optional[EngineContext] = None) -> CollineationSet:
    return CollineationSolver(ctx=ctx).solve_ckv(m, ansatz)


def solve_kv(m: Metric, ansatz: Optional[AnsatzSpec] = None, ctx: Optional[EngineContext] = None) -> CollineationSet:
    return CollineationSolver(ctx=ctx).solve_kv(m, ansatz)


def solve_hv(m: Metric, ansatz: Optional[AnsatzSpec] = None, ctx: Optional[EngineContext] = None) -> CollineationSet:
    return CollineationSolver(ctx=ctx).solve_hv(m, ansatz)


def solve_affine(m: Metric, ansatz: Optional[AnsatzSpec] = None, ctx: Optional[EngineContext] = None) -> CollineationSet:
    return CollineationSolver(ctx=ctx).solve_affine(m, ansatz)


def solve_killing_tensor2(
    m: Metric, ansatz: Optional[AnsatzSpec] = None, ctx: Optional[EngineContext] = None
) -> CollineationSet:
    return CollineationSolver(ctx=ctx).solve_killing_tensor2(m, ansatz)

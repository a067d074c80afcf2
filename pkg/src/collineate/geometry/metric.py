"""
Metric, connection and vector field value types.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, Iterator, Sequence, Tuple

import sympy as sp

from collineate.core.exceptions import DegenerateMetricError, GeometryError
from collineate.expr import differentiate, is_zero, parse, simplify, symbols, to_string


class MetricRole(str, Enum):
    """Which space a metric lives on."""

    INDEPENDENT = "g"
    DEPENDENT = "H"


Array3 = Tuple[Tuple[Tuple[sp.Expr, ...], ...], ...]


@dataclass(frozen=True)
class Metric:
    """
    Symmetric nondegenerate metric over named coordinates.

    Symmetry and nondegeneracy are checked at construction; the inverse and the
    Levi-Civita symbols are computed once and cached.
    """

    coords: Tuple[sp.Symbol, ...]
    components: sp.ImmutableMatrix
    role: MetricRole = MetricRole.INDEPENDENT

    def __post_init__(self) -> None:
        coords = tuple(self.coords)
        matrix = sp.ImmutableMatrix(self.components).applyfunc(simplify)
        dim = len(coords)
        if dim == 0:
            raise GeometryError("metric needs at least one coordinate")
        if matrix.shape != (dim, dim):
            raise GeometryError(
                f"metric must be {dim}x{dim} for coordinates "
                f"{', '.join(c.name for c in coords)}, got {matrix.shape[0]}x{matrix.shape[1]}"
            )
        asymmetric = [
            f"[{a}][{b}]"
            for a in range(dim)
            for b in range(a + 1, dim)
            if matrix[a, b] != matrix[b, a]
        ]
        if asymmetric:
            raise GeometryError("metric is not symmetric", ", ".join(asymmetric))

        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "components", matrix)
        if is_zero(self.determinant):
            raise DegenerateMetricError(
                "metric is degenerate", f"det = {to_string(self.determinant)}"
            )

    @classmethod
    def from_strings(
        cls,
        coords: Sequence[str],
        rows: Sequence[Sequence[str]],
        role: MetricRole = MetricRole.INDEPENDENT,
    ) -> "Metric":
        """Build a metric from coordinate names and component strings."""
        matrix = sp.ImmutableMatrix([[parse(str(c)) for c in row] for row in rows])
        return cls(symbols(coords), matrix, role)

    @classmethod
    def diagonal(
        cls,
        coords: Sequence[sp.Symbol],
        entries: Sequence[sp.Expr],
        role: MetricRole = MetricRole.INDEPENDENT,
    ) -> "Metric":
        return cls(tuple(coords), sp.ImmutableMatrix(sp.diag(*entries)), role)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __getitem__(self, index: Tuple[int, int]) -> sp.Expr:
        return self.components[index]

    @cached_property
    def determinant(self) -> sp.Expr:
        return simplify(self.components.det(method="berkowitz"))

    @cached_property
    def inverse_components(self) -> sp.ImmutableMatrix:
        return sp.ImmutableMatrix(self.components.inv(method="ADJ")).applyfunc(simplify)

    @cached_property
    def christoffel_array(self) -> Array3:
        """Gamma^a_bc = 1/2 g^ad (g_db,c + g_dc,b - g_bc,d)."""
        n = self.dim
        g = self.components
        ginv = self.inverse_components
        dg = [[[differentiate(g[a, b], self.coords[c]) for c in range(n)] for b in range(n)]
              for a in range(n)]

        result = []
        for a in range(n):
            block = []
            for b in range(n):
                row = []
                for c in range(n):
                    if c < b:
                        row.append(block[c][b])
                        continue
                    total = sum(
                        ginv[a, d] * (dg[d][b][c] + dg[d][c][b] - dg[b][c][d]) for d in range(n)
                    )
                    row.append(simplify(total / 2))
                block.append(row)
            result.append(tuple(tuple(r) for r in block))
        return tuple(result)

    def to_strings(self) -> Dict[str, object]:
        return {
            "coords": [c.name for c in self.coords],
            "components": [[to_string(self.components[a, b]) for b in range(self.dim)]
                           for a in range(self.dim)],
            "role": self.role.value,
        }


@dataclass(frozen=True)
class Connection:
    """Symmetric affine connection coefficients Gamma^a_bc."""

    coords: Tuple[sp.Symbol, ...]
    coefficients: Array3

    def __getitem__(self, index: Tuple[int, int, int]) -> sp.Expr:
        a, b, c = index
        return self.coefficients[a][b][c]

    @property
    def dim(self) -> int:
        return len(self.coords)

    def nonzero(self) -> Dict[Tuple[int, int, int], sp.Expr]:
        """Nonzero coefficients keyed by (a, b, c)."""
        return {
            (a, b, c): self.coefficients[a][b][c]
            for a in range(self.dim)
            for b in range(self.dim)
            for c in range(self.dim)
            if self.coefficients[a][b][c] != 0
        }

    def is_zero(self) -> bool:
        return not self.nonzero()


@dataclass(frozen=True)
class VField:
    """
    Vector field with components over a coordinate chart.

    Components may depend on symbols outside ``coords`` when the field lives
    on a product space (e.g. eta^A(x, u)).
    """

    coords: Tuple[sp.Symbol, ...]
    components: Tuple[sp.Expr, ...] = field(default=())

    def __post_init__(self) -> None:
        coords = tuple(self.coords)
        components = tuple(simplify(c) for c in self.components)
        if len(components) != len(coords):
            raise GeometryError(
                f"vector field has {len(components)} components for {len(coords)} coordinates"
            )
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "components", components)

    @classmethod
    def zero(cls, coords: Sequence[sp.Symbol]) -> "VField":
        return cls(tuple(coords), tuple(sp.S.Zero for _ in coords))

    @classmethod
    def from_strings(cls, coords: Sequence[str], components: Sequence[str]) -> "VField":
        return cls(symbols(coords), tuple(parse(c) for c in components))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[sp.Expr]:
        return iter(self.components)

    def __getitem__(self, index: int) -> sp.Expr:
        return self.components[index]

    def _check_chart(self, other: "VField") -> None:
        if self.coords != other.coords:
            raise GeometryError("vector fields live on different charts")

    def __add__(self, other: "VField") -> "VField":
        self._check_chart(other)
        return VField(self.coords, tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "VField") -> "VField":
        self._check_chart(other)
        return VField(self.coords, tuple(a - b for a, b in zip(self, other)))

    def __neg__(self) -> "VField":
        return VField(self.coords, tuple(-a for a in self))

    def scale(self, factor: sp.Expr) -> "VField":
        return VField(self.coords, tuple(factor * a for a in self))

    def is_zero(self) -> bool:
        return all(is_zero(c) for c in self.components)

    def to_strings(self) -> list:
        return [to_string(c) for c in self.components]

    def __str__(self) -> str:
        terms = [
            f"({to_string(c)})*d_{x.name}" for c, x in zip(self.components, self.coords) if c != 0
        ]
        return " + ".join(terms) if terms else "0"

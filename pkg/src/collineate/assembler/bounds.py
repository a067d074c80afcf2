"""
Closed-form dimension bounds for the built-in system families.
"""

from dataclasses import dataclass
from typing import Dict, Optional

from collineate.core.exceptions import AssemblerError

BOUND_CASES = ("laplace-flat", "sigma-model", "gup")


@dataclass(frozen=True)
class DimensionBound:
    case: str
    n: int
    m: int
    lie_upper: int
    noether_upper: int
    lower: Optional[int] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            "case": self.case,
            "n": self.n,
            "m": self.m,
            "lie_upper": self.lie_upper,
            "noether_upper": self.noether_upper,
            "lower": self.lower,
        }


def dimension_bounds(n: int, m: int, case: str) -> DimensionBound:
    """
    Bounds on the Lie (and Noether) symmetry dimension.

    laplace-flat: (n+2)(n+1)/2 + m(m+1) Lie, (n+2)(n+1)/2 + m(m+1)/2 Noether.
    sigma-model: n(n+1)/2 + m(m-1)/2 for both.
    gup: between 3 and n(n+1)/2 + 3.

    Raises:
        AssemblerError: For an unknown case or n outside its range.
    """
    if case not in BOUND_CASES:
        raise AssemblerError(f"unknown bound case '{case}'", f"expected one of {', '.join(BOUND_CASES)}")
    if m < 1:
        raise AssemblerError(f"m must be at least 1, got {m}")

    if case == "gup":
        if n < 2:
            raise AssemblerError(f"gup bounds need n >= 2, got {n}")
        upper = n * (n + 1) // 2 + 3
        return DimensionBound(case, n, m, upper, upper, lower=3)

    if n <= 2:
        raise AssemblerError(f"{case} bounds need n > 2, got {n}")
    if case == "laplace-flat":
        conformal = (n + 2) * (n + 1) // 2
        return DimensionBound(case, n, m, conformal + m * (m + 1), conformal + m * (m + 1) // 2)

    printed = n * (n + 1) // 2 + m * (m - 1) // 2
    return DimensionBound(case, n, m, printed, printed)

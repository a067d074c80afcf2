"""Collineations of a metric: KVs, HVs, CKVs, ACs and second-order Killing tensors."""

from collineate.collineations.ansatz import AnsatzSpec, build_ansatz, custom_ansatz, default_ansatz
from collineate.collineations.gradient import GradientInfo, classify_gradient, integrate_closed
from collineate.collineations.linalg import nullspace, rank
from collineate.collineations.matching import combine, match_rows
from collineate.collineations.solver import (
    CollineationElement,
    CollineationKind,
    CollineationSet,
    CollineationSolver,
    known_maximum,
    solve_affine,
    solve_ckv,
    solve_hv,
    solve_killing_tensor2,
    solve_kv,
)

__all__ = [
    "AnsatzSpec",
    "CollineationElement",
    "CollineationKind",
    "CollineationSet",
    "CollineationSolver",
    "GradientInfo",
    "build_ansatz",
    "classify_gradient",
    "combine",
    "custom_ansatz",
    "default_ansatz",
    "integrate_closed",
    "known_maximum",
    "match_rows",
    "nullspace",
    "rank",
    "solve_affine",
    "solve_ckv",
    "solve_hv",
    "solve_killing_tensor2",
    "solve_kv",
]

"""Jet-space verification of Lie and Noether point symmetries."""

from collineate.symmetry.currents import (
    Current,
    OnShellResult,
    check_on_shell_divergence,
    conservation_current,
    currents_agree,
    hamiltonian_tensor,
    on_shell,
    theorem_current,
)
from collineate.symmetry.generator import Generator
from collineate.symmetry.jets import JetSpace
from collineate.symmetry.lie import LieCheckResult, check_lie_condition, lie_residual
from collineate.symmetry.noether import NoetherCheckResult, check_noether_condition, noether_defect
from collineate.symmetry.prolongation import Prolongation, prolong
from collineate.symmetry.system import (
    QuasilinearSystem,
    euler_lagrange,
    lagrangian,
    make_system,
    potential_sources,
    variational_derivative,
    volume_element,
)

__all__ = [
    "Current",
    "Generator",
    "JetSpace",
    "LieCheckResult",
    "NoetherCheckResult",
    "OnShellResult",
    "Prolongation",
    "QuasilinearSystem",
    "check_lie_condition",
    "check_noether_condition",
    "check_on_shell_divergence",
    "conservation_current",
    "currents_agree",
    "euler_lagrange",
    "hamiltonian_tensor",
    "lagrangian",
    "lie_residual",
    "make_system",
    "noether_defect",
    "on_shell",
    "potential_sources",
    "prolong",
    "theorem_current",
    "variational_derivative",
    "volume_element",
]

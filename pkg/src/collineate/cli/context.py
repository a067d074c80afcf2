"""
Per-run settings resolved from the command line, the problem file and the
configuration, in that order.
"""

from argparse import Namespace
from typing import Optional

from collineate.collineations import AnsatzSpec, default_ansatz
from collineate.core.config import Config
from collineate.core.utils import EngineContext
from collineate.geometry import Metric
from collineate.validators import ProblemOptions


def _first(*values):
    return next((v for v in values if v is not None), None)


def engine_context(args: Namespace, options: Optional[ProblemOptions] = None) -> EngineContext:
    options = options or ProblemOptions()
    return EngineContext.from_config(
        Config(),
        seed=_first(getattr(args, "seed", None), options.seed),
        samples=_first(getattr(args, "samples", None), options.samples),
        precision=_first(getattr(args, "precision", None), options.precision),
    )


def tolerance(args: Namespace, options: Optional[ProblemOptions] = None) -> str:
    options = options or ProblemOptions()
    return str(_first(getattr(args, "tol", None), options.tolerance, Config().tolerance))


def ansatz_for(
    metric: Metric, args: Namespace, options: Optional[ProblemOptions], ctx: EngineContext
) -> Optional[AnsatzSpec]:
    """Ansatz with the degree and kernel window overrides, None when nothing is overridden."""
    options = options or ProblemOptions()
    degree = _first(getattr(args, "degree", None), options.degree)
    if degree is None and options.kernel_window is None:
        return None
    return default_ansatz(metric, degree=degree, window=options.kernel_window, ctx=ctx)

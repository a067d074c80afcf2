"""
collineate - Lie and Noether point symmetries of quasilinear systems

Symmetries of second-order systems derived from a Lagrangian are read off
the collineations (Killing, homothetic, conformal and affine vectors) of the
metric g of the independent variables and the metric H of the fields.
"""

__version__ = "0.1.0"

from collineate.core.config import Config
from collineate.core.logger import Logger
from collineate.core.exceptions import CollineateError

__all__ = [
    "CollineateError",
    "Config",
    "Logger",
    "__version__",
]

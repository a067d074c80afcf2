"""
Base class for built-in cases.

A case builds one system, names the collineation bounds and published
symmetry counts that go with it, and carries its closed-form solutions and
named generators for verification.
"""

from abc import ABC, abstractmethod
from functools import cached_property
from typing import Any, Dict, List, Optional

from collineate.assembler import AssemblyResult, SymmetryAssembler
from collineate.cases.solutions import FieldSolution
from collineate.cases.verify import ResidualReport, SolutionVerifier
from collineate.collineations import AnsatzSpec
from collineate.core.logger import Logger
from collineate.core.utils import EngineContext
from collineate.symmetry import Generator, QuasilinearSystem


class BaseCase(ABC):
    """
    Abstract base class for built-in cases.

    Subclasses set the class attributes and implement :meth:`build`.
    """

    NAME: str = "base"
    DISPLAY_NAME: str = "Base case"
    DESCRIPTION: str = ""

    # Key into the closed-form dimension bounds
    BOUND_CASE: Optional[str] = None

    # Published symmetry counts, reported next to the computed ones
    LIE_REFERENCE: Optional[int] = None
    NOETHER_REFERENCE: Optional[int] = None

    # Options accepted from the command line, with defaults
    OPTIONS: Dict[str, Any] = {}

    def __init__(self, verbose: bool = False, ctx: Optional[EngineContext] = None, **options: Any):
        """
        Initialize the case.

        Args:
            verbose: Enable verbose logging.
            ctx: Engine context (from the configuration by default).
            options: Case options overriding :attr:`OPTIONS`; None values are ignored.
        """
        self.verbose = verbose
        self.ctx = ctx or EngineContext.from_config()
        self.logger = Logger(verbose=verbose)
        self.options = {**self.OPTIONS, **{k: v for k, v in options.items() if v is not None}}

    @abstractmethod
    def build(self) -> QuasilinearSystem:
        """Construct the system."""

    @cached_property
    def system(self) -> QuasilinearSystem:
        self.logger.debug(f"building {self.NAME} with {self.options or 'defaults'}")
        return self.build()

    def solutions(self) -> List[FieldSolution]:
        return []

    def generators(self) -> Dict[str, Generator]:
        return {}

    def checks(self) -> Dict[str, Any]:
        """Case-specific consistency checks, keyed by name."""
        return {}

    def ansatz(self) -> Dict[str, Optional[AnsatzSpec]]:
        """Ansatz overrides for g and H (solver defaults otherwise)."""
        return {"g": None, "H": None}

    def symmetries(self, lie: bool = True, noether: bool = True) -> AssemblyResult:
        assembler = SymmetryAssembler(verbose=self.verbose, ctx=self.ctx)
        ansatz = self.ansatz()
        return assembler.run(
            self.system,
            lie=lie,
            noether=noether,
            g_ansatz=ansatz["g"],
            H_ansatz=ansatz["H"],
            bound_case=self.BOUND_CASE,
            lie_reference=self.LIE_REFERENCE,
            noether_reference=self.NOETHER_REFERENCE,
        )

    def verify_solutions(self, **options: Any) -> List[ResidualReport]:
        verifier = SolutionVerifier(verbose=self.verbose, ctx=self.ctx)
        return verifier.verify_all(self.system, self.solutions(), **options)

    def describe(self) -> Dict[str, Any]:
        return {
            "name": self.NAME,
            "display_name": self.DISPLAY_NAME,
            "description": self.DESCRIPTION,
            "options": {k: str(v) for k, v in self.options.items()},
            "bound_case": self.BOUND_CASE,
            "lie_reference": self.LIE_REFERENCE,
            "noether_reference": self.NOETHER_REFERENCE,
        }

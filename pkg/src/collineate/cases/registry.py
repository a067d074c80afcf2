"""
Case registry for collineate.

Handles registration and lookup of the built-in cases.
"""

from typing import Any, Dict, List, Optional, Type

from collineate.cases.base import BaseCase
from collineate.core.exceptions import CaseError
from collineate.core.utils import EngineContext


class CaseRegistry:
    """Registry for built-in cases, keyed by case name."""

    _cases: Dict[str, Type[BaseCase]] = {}

    @classmethod
    def register(cls, case_class: Type[BaseCase]) -> None:
        cls._cases[case_class.NAME] = case_class

    @classmethod
    def get(cls, name: str) -> Optional[Type[BaseCase]]:
        return cls._cases.get(name.lower())

    @classmethod
    def list_names(cls) -> List[str]:
        return sorted(cls._cases)

    @classmethod
    def list_cases(cls) -> List[Dict[str, Any]]:
        """
        List all registered cases with info.

        Returns:
            List of case information dictionaries.
        """
        return [
            {
                "name": c.NAME,
                "display_name": c.DISPLAY_NAME,
                "description": c.DESCRIPTION,
                "options": {k: str(v) for k, v in c.OPTIONS.items()},
            }
            for _, c in sorted(cls._cases.items())
        ]


def get_case(
    name: str, verbose: bool = False, ctx: Optional[EngineContext] = None, **options: Any
) -> BaseCase:
    """
    Get a case instance by name.

    Raises:
        CaseError: If the case is unknown or an option is not accepted.
    """
    _import_cases()

    case_class = CaseRegistry.get(name)
    if not case_class:
        raise CaseError(
            f"unknown case: {name}", f"available cases: {', '.join(CaseRegistry.list_names())}"
        )
    unknown = sorted(k for k, v in options.items() if v is not None and k not in case_class.OPTIONS)
    if unknown:
        raise CaseError(
            f"case '{name}' does not take {', '.join(unknown)}",
            f"options: {', '.join(case_class.OPTIONS) or 'none'}",
        )
    return case_class(verbose=verbose, ctx=ctx, **options)


def list_cases() -> List[Dict[str, Any]]:
    _import_cases()
    return CaseRegistry.list_cases()


def _import_cases() -> None:
    """Import all case modules to trigger registration."""
    from collineate.cases import gup  # noqa: F401
    from collineate.cases import laplace  # noqa: F401
    from collineate.cases import sigma  # noqa: F401

"""
Utility helpers for collineate.

Run context plumbing, deterministic random generators and JSON helpers.
"""

import hashlib
import json
import random
from contextlib import contextmanager
from dataclasses import dataclass, replace
from typing import Any, Iterator, Optional, Type

from sympy.polys.polyerrors import BasePolynomialError

from collineate.core.config import Config
from collineate.core.exceptions import CollineateError


@dataclass(frozen=True)
class EngineContext:
    """
    Resolved per-run settings passed explicitly into the engine.

    Every random draw derives from ``seed`` and a salt naming what is being
    sampled, so results do not depend on evaluation order or threads.
    """

    seed: int = 0
    samples: int = 20
    precision: int = 30
    dimension_warning: int = 6

    @classmethod
    def from_config(
        cls,
        config: Optional[Config] = None,
        seed: Optional[int] = None,
        samples: Optional[int] = None,
        precision: Optional[int] = None,
    ) -> "EngineContext":
        """
        Build a context, explicit arguments winning over configuration.

        Args:
            config: Configuration to fall back to (the singleton by default).
            seed: Random seed override.
            samples: Zero-test sample count override.
            precision: Working precision override (decimal digits).
        """
        config = config or Config()
        return cls(
            seed=config.seed if seed is None else seed,
            samples=config.zero_samples if samples is None else samples,
            precision=config.precision if precision is None else precision,
            dimension_warning=config.dimension_warning,
        )

    def with_overrides(self, **changes: Any) -> "EngineContext":
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    def rng(self, *salt: Any) -> random.Random:
        """
        Return a generator seeded from the context seed and a salt.

        Args:
            salt: Values identifying the draw (e.g. a printed expression).
        """
        digest = hashlib.sha256(repr((self.seed,) + salt).encode("utf-8")).digest()
        return random.Random(int.from_bytes(digest[:8], "big"))


_LIBRARY_ERRORS = (BasePolynomialError, NotImplementedError, ZeroDivisionError)


@contextmanager
def library_errors(error: Type[CollineateError], label: str) -> Iterator[None]:
    """
    Re-raise sympy failures inside the block as ``error``.

    Args:
        error: Domain error class to raise.
        label: What was being computed, used as the message.
    """
    try:
        yield
    except _LIBRARY_ERRORS as e:
        raise error(f"{label} failed", f"{type(e).__name__}: {e}") from e


def dump_json(payload: Any) -> str:
    """Serialize a payload deterministically (sorted keys, fixed indent)."""
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)

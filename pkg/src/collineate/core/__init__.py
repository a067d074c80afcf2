"""Core modules for collineate."""

from collineate.core.config import Config
from collineate.core.exceptions import CollineateError
from collineate.core.logger import Logger
from collineate.core.utils import EngineContext, dump_json

__all__ = [
    "CollineateError",
    "Config",
    "EngineContext",
    "Logger",
    "dump_json",
]

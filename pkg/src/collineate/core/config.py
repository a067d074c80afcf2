"""
Global configuration management for collineate.
"""

import copy
import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml

from collineate.core.exceptions import ConfigError


DEFAULT_CONFIG_PATH = Path.home() / ".config" / "collineate" / "config.yaml"

DEFAULT_CONFIG: Dict[str, Any] = {
    "engine": {
        "seed": 0,
        "zero_samples": 20,
        "precision": 30,
        "tolerance": "1e-8",
    },
    "ansatz": {
        "degree": 2,
        "kernel_window": [-2, 2],
        "closure_depth": 2,
    },
    "geometry": {
        "dimension_warning": 6,
    },
    "output": {
        "schema": 1,
    },
}


def config_path() -> Path:
    """Return the configuration file path, honouring COLLINEATE_CONFIG."""
    override = os.environ.get("COLLINEATE_CONFIG")
    return Path(override) if override else DEFAULT_CONFIG_PATH


class Config:
    """
    Configuration manager for collineate.

    Handles loading, saving, and accessing configuration values from
    the user config file and environment variables.
    """

    _instance: Optional["Config"] = None
    _config: Dict[str, Any] = {}

    def __new__(cls) -> "Config":
        """Singleton pattern to ensure single config instance."""
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._load_config()
        return cls._instance

    def _load_config(self) -> None:
        """Load configuration from file and merge with defaults."""
        self._config = copy.deepcopy(DEFAULT_CONFIG)

        path = config_path()
        if path.exists():
            try:
                with open(path, "r") as f:
                    file_config = yaml.safe_load(f) or {}
            except (OSError, yaml.YAMLError) as e:
                raise ConfigError(f"Invalid configuration file: {path}", str(e))
            if not isinstance(file_config, dict):
                raise ConfigError(f"Configuration file must hold a mapping: {path}")
            self._config = self._deep_merge(self._config, file_config)

        self._load_env_overrides()

    def _load_env_overrides(self) -> None:
        """Load configuration overrides from environment variables."""
        env_mappings: Dict[str, Tuple[Tuple[str, str], type]] = {
            "COLLINEATE_SEED": (("engine", "seed"), int),
            "COLLINEATE_SAMPLES": (("engine", "zero_samples"), int),
            "COLLINEATE_PRECISION": (("engine", "precision"), int),
        }

        for env_var, ((section, key), cast) in env_mappings.items():
            value = os.environ.get(env_var)
            if value:
                try:
                    self._config[section][key] = cast(value)
                except ValueError:
                    raise ConfigError(f"{env_var} must be an integer, got {value!r}")

    def _deep_merge(self, base: Dict, override: Dict) -> Dict:
        """Deep merge two dictionaries."""
        result = copy.deepcopy(base)
        for key, value in override.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = self._deep_merge(result[key], value)
            else:
                result[key] = value
        return result

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get a configuration value.

        Args:
            key: Configuration key (supports dot notation for nested values).
            default: Default value if key is not found.

        Returns:
            Configuration value or default.
        """
        value: Any = self._config
        for k in key.split("."):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def set(self, key: str, value: Any) -> None:
        """
        Set a configuration value.

        Args:
            key: Configuration key (supports dot notation).
            value: Value to set.
        """
        keys = key.split(".")
        config = self._config
        for k in keys[:-1]:
            config = config.setdefault(k, {})
        config[keys[-1]] = value

    @property
    def seed(self) -> int:
        return int(self.get("engine.seed", 0))

    @property
    def zero_samples(self) -> int:
        return int(self.get("engine.zero_samples", 20))

    @property
    def precision(self) -> int:
        return int(self.get("engine.precision", 30))

    @property
    def tolerance(self) -> str:
        return str(self.get("engine.tolerance", "1e-8"))

    @property
    def ansatz_degree(self) -> int:
        return int(self.get("ansatz.degree", 2))

    @property
    def kernel_window(self) -> Tuple[int, int]:
        low, high = self.get("ansatz.kernel_window", [-2, 2])
        return int(low), int(high)

    @property
    def closure_depth(self) -> int:
        return int(self.get("ansatz.closure_depth", 2))

    @property
    def dimension_warning(self) -> int:
        return int(self.get("geometry.dimension_warning", 6))

    def reload(self) -> None:
        """Reload configuration from disk."""
        self._load_config()

    @classmethod
    def reset_instance(cls) -> None:
        """
        Reset the singleton instance.

        Forces a fresh config load on next access.
        """
        cls._instance = None
        cls._config = {}

    def save(self, path: Optional[Path] = None) -> bool:
        """
        Save current configuration to file.

        Args:
            path: Optional path to save to. Defaults to the user config path.

        Returns:
            True if saved successfully, False otherwise.
        """
        save_path = path or config_path()
        try:
            save_path.parent.mkdir(parents=True, exist_ok=True)
            with open(save_path, "w") as f:
                yaml.safe_dump(self._config, f, default_flow_style=False, sort_keys=False)
            return True
        except OSError:
            return False

    def to_dict(self) -> Dict[str, Any]:
        """Return configuration as dictionary."""
        return copy.deepcopy(self._config)

    def upgrade(self, path: Optional[Path] = None) -> Dict[str, Any]:
        """
        Upgrade a configuration file with new defaults.

        User values are preserved; keys missing from the file are added.

        Args:
            path: Optional path to config file. Defaults to the user config path.

        Returns:
            Dictionary with ``added_keys`` and ``upgraded`` (and ``error`` on failure).
        """
        target = path or config_path()

        user_config: Dict[str, Any] = {}
        if target.exists():
            try:
                with open(target, "r") as f:
                    user_config = yaml.safe_load(f) or {}
            except (OSError, yaml.YAMLError):
                user_config = {}

        added_keys = self._find_missing_keys(DEFAULT_CONFIG, user_config)
        merged = self._deep_merge(DEFAULT_CONFIG, user_config)

        if added_keys:
            try:
                target.parent.mkdir(parents=True, exist_ok=True)
                with open(target, "w") as f:
                    yaml.safe_dump(merged, f, default_flow_style=False, sort_keys=False)
                self._config = merged
            except OSError as e:
                return {"added_keys": [], "upgraded": False, "error": str(e)}

        return {"added_keys": added_keys, "upgraded": bool(added_keys)}

    def _find_missing_keys(self, defaults: Dict, user: Dict, prefix: str = "") -> List[str]:
        """List dot-notation keys present in defaults but missing from user."""
        missing: List[str] = []
        for key, value in defaults.items():
            full_key = f"{prefix}.{key}" if prefix else key
            if key not in user:
                missing.append(full_key)
            elif isinstance(value, dict) and isinstance(user.get(key), dict):
                missing.extend(self._find_missing_keys(value, user[key], full_key))
        return missing

"""Configuration resolution with precedence: CLI > project > user > ENV > defaults."""

import os
from typing import Any

from .env import ENV_PREFIX, env_key
from .errors import ConfigError
from .project import EnlatticeRC
from .user import UserConfig

BUDGET_FALLBACK = f"{ENV_PREFIX}BUDGET"


class ConfigResolver:
    """Keys are dotted paths such as budget.samples."""

    def __init__(
        self,
        cli_args: dict[str, Any] | None = None,
        project_config: EnlatticeRC | None = None,
        user_config: UserConfig | None = None,
        defaults: dict[str, Any] | None = None,
    ):
        self.cli_args = cli_args or {}
        self.project_config = project_config
        self.user_config = user_config
        self.defaults = defaults or {}

    def resolve(self, key: str) -> Any:
        # Check CLI args first
        if key in self.cli_args and self.cli_args[key] is not None:
            return self.cli_args[key]

        if self.project_config:
            value = self._get_nested(self.project_config, key)
            if value is not None:
                return value

        if self.user_config:
            value = self._get_nested(self.user_config, key)
            if value is not None:
                return value

        # A specific ENV key wins over the blanket ENLATTICE_BUDGET
        specific = env_key(key)
        if specific in os.environ:
            return os.environ[specific]
        if key.startswith("budget.") and key != "budget.max_degree" and BUDGET_FALLBACK in os.environ:
            return os.environ[BUDGET_FALLBACK]

        if key in self.defaults:
            return self.defaults[key]

        raise ConfigError(f"Configuration key not found: {key}")

    def resolve_int(self, key: str) -> int | None:
        value = self.resolve(key)
        if value is None:
            return None
        try:
            return int(value)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"{key} must be an integer, got {value!r}") from e

    def _get_nested(self, config: Any, key: str) -> Any | None:
        current = config
        for part in key.split("."):
            if hasattr(current, part):
                current = getattr(current, part)
            else:
                return None
        return current


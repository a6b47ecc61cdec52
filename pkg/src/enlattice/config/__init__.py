"""enlattice configuration system.

This module provides:
- ENLATTICE_* environment variable namespacing, with ENLATTICE_BUDGET as a
  blanket override for search budgets
- Project configuration (.enlatticerc.yaml)
- User configuration (~/.config/enlattice/config.yaml)
- Configuration precedence resolution into RunSettings
"""

from pathlib import Path
from typing import Any

from .env import get_env_var, load_enlattice_env_vars
from .errors import ConfigError
from .project import (
    DEFAULTS,
    RC_FILENAME,
    BudgetConfig,
    EnlatticeRC,
    LimitsConfig,
    OutputConfig,
    SamplingConfig,
    load_enlatticerc,
    validate_enlatticerc,
)
from .resolver import ConfigResolver
from .settings import RunSettings
from .user import UserConfig, get_user_config_path, load_user_config

__all__ = [
    # Errors
    "ConfigError",
    # Environment variables
    "get_env_var",
    "load_enlattice_env_vars",
    # Project configuration
    "BudgetConfig",
    "EnlatticeRC",
    "LimitsConfig",
    "OutputConfig",
    "SamplingConfig",
    "load_enlatticerc",
    "validate_enlatticerc",
    # User configuration
    "UserConfig",
    "get_user_config_path",
    "load_user_config",
    # Resolution
    "ConfigResolver",
    "RunSettings",
    "load_config",
    "load_settings",
]


def load_config(
    project_path: str | Path = ".", cli_args: dict[str, Any] | None = None
) -> tuple[EnlatticeRC | None, UserConfig, ConfigResolver]:
    """Load complete configuration from all sources."""
    project_config = load_enlatticerc(Path(project_path) / RC_FILENAME)
    user_config = load_user_config()
    resolver = ConfigResolver(
        cli_args=cli_args or {},
        project_config=project_config,
        user_config=user_config,
        defaults=dict(DEFAULTS),
    )
    return project_config, user_config, resolver


def load_settings(cli_args: dict[str, Any] | None = None, project_path: str | Path = ".") -> RunSettings:
    _, _, resolver = load_config(project_path, cli_args)
    return RunSettings.from_resolver(resolver)

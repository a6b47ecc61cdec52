"""Environment variable loading with ENLATTICE_ prefix."""

import os

ENV_PREFIX = "ENLATTICE_"


def load_enlattice_env_vars() -> dict[str, str]:
    """Load only ENLATTICE_* prefixed environment variables, prefix stripped."""
    return {
        key[len(ENV_PREFIX) :]: value
        for key, value in os.environ.items()
        if key.startswith(ENV_PREFIX)
    }


def get_env_var(key: str, default: str | None = None) -> str | None:
    """Get an ENLATTICE_* prefixed environment variable."""
    full_key = f"{ENV_PREFIX}{key.upper()}"
    return os.environ.get(full_key, default)


def env_key(key: str) -> str:
    """budget.samples -> ENLATTICE_BUDGET_SAMPLES"""
    return f"{ENV_PREFIX}{key.upper().replace('.', '_')}"

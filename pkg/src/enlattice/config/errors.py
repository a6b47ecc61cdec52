"""Configuration error classes for enlattice."""


class ConfigError(Exception):
    """Raised when configuration is invalid or missing."""

    pass

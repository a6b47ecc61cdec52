"""Tests for RunSettings validation."""

import pytest
from pydantic import ValidationError

from enlattice.config import DEFAULTS, ConfigError, ConfigResolver, RunSettings
from enlattice.constants import DEFAULT_SAMPLE_COUNT, MAX_LATTICE_RANK


class TestRunSettings:
    """Test settings defaults and validation."""

    def test_defaults(self):
        """Test the defaults match the constants."""
        settings = RunSettings()
        assert settings.samples == DEFAULT_SAMPLE_COUNT
        assert settings.max_rank == MAX_LATTICE_RANK
        assert settings.output_format == "table"
        assert settings.max_degree is None

    def test_positive_budgets(self):
        """Test budgets must be positive."""
        with pytest.raises(ValidationError):
            RunSettings(samples=0)

    def test_output_format(self):
        """Test only table and json are accepted."""
        with pytest.raises(ValidationError):
            RunSettings(output_format="csv")

    def test_from_resolver_wraps_errors(self, monkeypatch):
        """Test invalid resolved values surface as ConfigError."""
        monkeypatch.setenv("ENLATTICE_BUDGET_SAMPLES", "0")
        resolver = ConfigResolver(defaults=dict(DEFAULTS))
        with pytest.raises(ConfigError, match="Invalid settings"):
            RunSettings.from_resolver(resolver)

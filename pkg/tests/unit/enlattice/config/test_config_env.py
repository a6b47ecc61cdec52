"""Tests for environment variable loading (ENLATTICE_* prefix)."""

from enlattice.config import get_env_var, load_enlattice_env_vars
from enlattice.config.env import env_key


class TestLoadEnlatticeEnvVars:
    """Test loading ENLATTICE_* prefixed environment variables."""

    def test_only_prefixed_vars_loaded(self, monkeypatch):
        """Test only ENLATTICE_* variables are loaded, prefix stripped."""
        monkeypatch.setenv("ENLATTICE_BUDGET_SAMPLES", "500")
        monkeypatch.setenv("BUDGET_SAMPLES", "should-not-load")

        vars = load_enlattice_env_vars()

        assert vars == {"BUDGET_SAMPLES": "500"}

    def test_empty_when_no_vars(self):
        """Test returns empty dict when no ENLATTICE_* vars present."""
        assert load_enlattice_env_vars() == {}


class TestGetEnvVar:
    """Test single-variable lookup."""

    def test_key_is_upper_cased(self, monkeypatch):
        """Test lower-case keys find the upper-case variable."""
        monkeypatch.setenv("ENLATTICE_BUDGET", "42")
        assert get_env_var("budget") == "42"

    def test_default(self):
        """Test the default is returned for a missing variable."""
        assert get_env_var("missing", "fallback") == "fallback"

    def test_env_key(self):
        """Test dotted keys map to ENLATTICE_SECTION_NAME."""
        assert env_key("budget.dgon_nodes") == "ENLATTICE_BUDGET_DGON_NODES"

"""Tests for .enlatticerc.yaml and the user config file."""

import pytest

from enlattice.config import (
    RC_FILENAME,
    ConfigError,
    get_user_config_path,
    load_enlatticerc,
    load_user_config,
)


class TestLoadEnlatticeRC:
    """Test project configuration loading."""

    def test_missing_file(self, tmp_path):
        """Test a missing file gives None."""
        assert load_enlatticerc(tmp_path / RC_FILENAME) is None

    def test_valid_file(self, tmp_path):
        """Test a valid file is parsed into sections."""
        path = tmp_path / RC_FILENAME
        path.write_text("budget:\n  samples: 500\nsampling:\n  seed: 3\noutput:\n  format: json\n")

        config = load_enlatticerc(path)

        assert config.budget.samples == 500
        assert config.sampling.seed == 3
        assert config.output.format == "json"
        assert config.budget.dgon_nodes is None

    def test_empty_file(self, tmp_path):
        """Test an empty file is an empty config."""
        path = tmp_path / RC_FILENAME
        path.write_text("")
        assert load_enlatticerc(path).budget.samples is None

    def test_invalid_yaml(self, tmp_path):
        """Test broken YAML raises ConfigError."""
        path = tmp_path / RC_FILENAME
        path.write_text("budget: [unclosed\n")
        with pytest.raises(ConfigError, match="Invalid YAML"):
            load_enlatticerc(path)

    def test_not_a_mapping(self, tmp_path):
        """Test a top-level list is refused."""
        path = tmp_path / RC_FILENAME
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ConfigError, match="mapping"):
            load_enlatticerc(path)

    def test_negative_budget(self, tmp_path):
        """Test budgets must be positive."""
        path = tmp_path / RC_FILENAME
        path.write_text("budget:\n  samples: -1\n")
        with pytest.raises(ConfigError, match="schema"):
            load_enlatticerc(path)

    def test_unknown_format(self, tmp_path):
        """Test output.format is restricted."""
        path = tmp_path / RC_FILENAME
        path.write_text("output:\n  format: xml\n")
        with pytest.raises(ConfigError, match="output.format"):
            load_enlatticerc(path)


class TestUserConfig:
    """Test the user configuration file."""

    def test_path_uses_xdg(self, isolated_config):
        """Test the path lives under XDG_CONFIG_HOME."""
        assert get_user_config_path() == isolated_config / "enlattice" / "config.yaml"

    def test_missing_gives_defaults(self):
        """Test a missing file gives an empty config."""
        assert load_user_config().budget.samples is None

    def test_loaded(self, isolated_config):
        """Test values are read from the file."""
        path = isolated_config / "enlattice" / "config.yaml"
        path.parent.mkdir()
        path.write_text("budget:\n  orbit_cap: 1000\n")
        assert load_user_config().budget.orbit_cap == 1000

    def test_invalid_falls_back(self, isolated_config, caplog):
        """Test an invalid file warns and falls back to defaults."""
        path = isolated_config / "enlattice" / "config.yaml"
        path.parent.mkdir()
        path.write_text("budget:\n  samples: zero\n")
        config = load_user_config()
        assert config.budget.samples is None
        assert "Could not load user config" in caplog.text

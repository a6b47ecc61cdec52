"""Tests for the main CLI entry point."""

import json

import pytest
from click.testing import CliRunner

from enlattice import __version__
from enlattice.cli.main import cli


class TestCLIVersion:
    """Tests for the --version flag."""

    def test_cli_version(self):
        """Test CLI version output."""
        runner = CliRunner()
        result = runner.invoke(cli, ["--version"])

        assert result.exit_code == 0
        assert "enlattice" in result.output
        assert __version__ in result.output


class TestCLIHelp:
    """Tests for CLI help."""

    def test_cli_help(self):
        """Test help lists every command."""
        runner = CliRunner()
        result = runner.invoke(cli, ["--help"])

        assert result.exit_code == 0
        for command in ("enum", "rootsys", "algebra", "branch", "verify", "export"):
            assert command in result.output

    def test_cli_help_shows_examples(self):
        """Test help shows examples."""
        runner = CliRunner()
        result = runner.invoke(cli, ["--help"])

        assert "Examples:" in result.output
        assert "del Pezzo" in result.output


class TestCLIConfig:
    """Tests for the --config env file."""

    @pytest.fixture
    def clean_format_env(self, monkeypatch):
        # record the variable so teardown removes what load_dotenv sets
        monkeypatch.setenv("ENLATTICE_OUTPUT_FORMAT", "table")
        monkeypatch.delenv("ENLATTICE_OUTPUT_FORMAT")

    def test_env_file_sets_format(self, tmp_path, monkeypatch, clean_format_env):
        """Test settings from the env file reach the commands."""
        monkeypatch.chdir(tmp_path)
        env_file = tmp_path / "enlattice.env"
        env_file.write_text("ENLATTICE_OUTPUT_FORMAT=json\n")

        runner = CliRunner()
        result = runner.invoke(cli, ["--config", str(env_file), "enum", "--n", "3"])

        assert result.exit_code == 0
        assert json.loads(result.output)["count"] == 6

    def test_missing_env_file(self):
        """Test a missing env file is a usage error."""
        runner = CliRunner()
        result = runner.invoke(cli, ["--config", "/nonexistent/enlattice.env", "enum", "--n", "3"])

        assert result.exit_code == 2

    def test_invalid_project_config(self, tmp_path, monkeypatch):
        """Test a broken .enlatticerc.yaml aborts with a message."""
        monkeypatch.chdir(tmp_path)
        (tmp_path / ".enlatticerc.yaml").write_text("budget: [unclosed\n")

        runner = CliRunner()
        result = runner.invoke(cli, ["enum", "--n", "3"])

        assert result.exit_code == 1
        assert "Configuration error" in result.output

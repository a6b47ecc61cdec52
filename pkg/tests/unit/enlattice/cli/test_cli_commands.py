"""Tests for the enum, rootsys, algebra, branch, verify and export commands."""

import json

import pytest
from click.testing import CliRunner

from enlattice.cli.main import cli


@pytest.fixture
def runner(tmp_path, monkeypatch):
    """CliRunner in an empty project directory."""
    monkeypatch.chdir(tmp_path)
    return CliRunner()


class TestEnumCommand:
    """Tests for enlattice enum."""

    def test_lines_table(self, runner):
        """Test the 27 lines as a table."""
        result = runner.invoke(cli, ["enum", "--n", "6", "--kind", "lines"])

        assert result.exit_code == 0
        assert "27 lines on X_6" in result.output
        assert "2H-L1-L2-L3-L4-L5" in result.output

    def test_rulings_json(self, runner):
        """Test JSON output carries counts and the query."""
        result = runner.invoke(cli, ["enum", "--n", "7", "--kind", "rulings", "--format", "json"])

        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["count"] == 126
        assert (data["self_int"], data["k_int"]) == (0, -2)
        assert len(data["classes"]) == 126

    def test_dot_with(self, runner):
        """Test a linear constraint filters classes."""
        result = runner.invoke(
            cli, ["enum", "--n", "6", "--kind", "lines", "--dot-with", "[0,-1,0,0,0,0,0]=1", "--format", "json"]
        )

        assert result.exit_code == 0
        # lines meeting L1 once: H-L1-Lj and 2H minus five points including L1
        assert json.loads(result.output)["count"] == 10

    def test_custom_kind(self, runner):
        """Test a custom query on X_9 with a degree bound."""
        result = runner.invoke(
            cli,
            ["enum", "--n", "9", "--kind", "custom", "--self-int", "-1", "--k-int", "-1", "--max-degree", "1"],
        )

        assert result.exit_code == 0
        assert "custom on X_9" in result.output

    def test_custom_needs_ints(self, runner):
        """Test --kind custom without --self-int is a usage error."""
        result = runner.invoke(cli, ["enum", "--n", "6", "--kind", "custom", "--k-int", "-1"])

        assert result.exit_code == 2
        assert "--self-int" in result.output

    def test_ints_need_custom(self, runner):
        """Test --self-int with a named kind is a usage error."""
        result = runner.invoke(cli, ["enum", "--n", "6", "--kind", "lines", "--self-int", "-1"])

        assert result.exit_code == 2

    def test_malformed_class(self, runner):
        """Test an unparsable class is a usage error."""
        result = runner.invoke(cli, ["enum", "--n", "6", "--dot-with", "[1,x]=0"])

        assert result.exit_code == 2
        assert "--dot-with" in result.output

    def test_class_rank_mismatch(self, runner):
        """Test a class of the wrong rank is a usage error."""
        result = runner.invoke(cli, ["enum", "--n", "6", "--dot-with", "[1,1]=0"])

        assert result.exit_code == 2

    def test_x9_needs_degree_bound(self, runner):
        """Test the infinite census on X_9 reports an error."""
        result = runner.invoke(cli, ["enum", "--n", "9"])

        assert result.exit_code == 1

    def test_n_out_of_range(self, runner):
        """Test --n above 10 is rejected."""
        result = runner.invoke(cli, ["enum", "--n", "11"])

        assert result.exit_code == 2

    def test_rank_limit_from_rc(self, runner, tmp_path):
        """Test limits.max_rank in .enlatticerc.yaml caps --n."""
        (tmp_path / ".enlatticerc.yaml").write_text("limits:\n  max_rank: 5\n")

        result = runner.invoke(cli, ["enum", "--n", "6"])

        assert result.exit_code == 2
        assert "max_rank=5" in result.output
        assert runner.invoke(cli, ["enum", "--n", "5"]).exit_code == 0


class TestRootsysCommand:
    """Tests for enlattice rootsys."""

    def test_cartan_json(self, runner):
        """Test the E6 Cartan matrix."""
        result = runner.invoke(cli, ["rootsys", "--n", "6", "--format", "json"])

        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["type"] == "E6"
        assert len(data["cartan"]) == 6
        assert all(row[i] == 2 for i, row in enumerate(data["cartan"]))

    def test_orbit(self, runner):
        """Test the orbit of a line on X_5 is the 16 lines."""
        result = runner.invoke(cli, ["rootsys", "--n", "5", "--show", "orbit", "--seed", "[1,1,1,0,0,0]"])

        assert result.exit_code == 0
        assert "16 classes in the orbit of H-L1-L2" in result.output

    def test_order(self, runner):
        """Test |W(D5)| on X_5."""
        result = runner.invoke(cli, ["rootsys", "--n", "5", "--show", "order"])

        assert result.exit_code == 0
        assert "1920" in result.output

    def test_order_refused_above_6(self, runner):
        """Test group generation is refused for E7."""
        result = runner.invoke(cli, ["rootsys", "--n", "7", "--show", "order"])

        assert result.exit_code == 2


class TestAlgebraCommand:
    """Tests for enlattice algebra."""

    def test_jacobi(self, runner):
        """Test exhaustive Jacobi on E4."""
        result = runner.invoke(cli, ["algebra", "--n", "4", "--check", "jacobi"])

        assert result.exit_code == 0
        assert "jacobi.E4" in result.output
        assert "identities verified" in result.output

    def test_module_axiom_json(self, runner):
        """Test the module axiom report as JSON."""
        result = runner.invoke(cli, ["algebra", "--n", "3", "--check", "module-axiom", "--format", "json"])

        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["suite"] == "algebra.module-axiom"
        assert all(r["verified"] for r in data["records"])

    def test_forms_range(self, runner):
        """Test forms are refused below n = 5."""
        result = runner.invoke(cli, ["algebra", "--n", "4", "--check", "forms"])

        assert result.exit_code == 2

    def test_forms_x5(self, runner):
        """Test the q5 checks pass."""
        result = runner.invoke(cli, ["algebra", "--n", "5", "--check", "forms"])

        assert result.exit_code == 0
        assert "forms.q5.gram" in result.output

    def test_sampled_jacobi_warns(self, runner):
        """Test --samples marks the run as sampled and warns."""
        result = runner.invoke(cli, ["algebra", "--n", "4", "--check", "jacobi", "--samples", "50"])

        assert result.exit_code == 0
        assert "sampled" in result.output
        assert "identities sampled, not exhaustive" in result.output


class TestBranchCommand:
    """Tests for enlattice branch."""

    def test_fixed_line_table(self, runner):
        """Test the fixed-line decomposition tables."""
        result = runner.invoke(cli, ["branch", "--n", "6", "--fix", "line"])

        assert result.exit_code == 0
        assert "fixed-line(L6)" in result.output
        assert "R_5(-L)" in result.output

    def test_fixed_ruling_json(self, runner):
        """Test a fixed ruling given on the command line."""
        result = runner.invoke(
            cli, ["branch", "--n", "7", "--fix", "ruling", "--r", "[1,0,1,0,0,0,0,0]", "--format", "json"]
        )

        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["suite"] == "branch.ruling"
        assert data["inputs"]["spec"] == "fixed-ruling(H-L2)"
        assert all(r["verified"] for r in data["records"])

    def test_section(self, runner):
        """Test the root section L1 - L2 on X_5."""
        result = runner.invoke(cli, ["branch", "--n", "5", "--fix", "section", "--s", "[0,-1,1,0,0,0]"])

        assert result.exit_code == 0

    def test_parity_needs_x8(self, runner):
        """Test --fix parity below n = 8."""
        result = runner.invoke(cli, ["branch", "--n", "7", "--fix", "parity"])

        assert result.exit_code == 2

    def test_invalid_spec(self, runner):
        """Test a class that is not a ruling is reported with exit 1."""
        result = runner.invoke(cli, ["branch", "--n", "6", "--fix", "ruling", "--r", "[0,-1,0,0,0,0,0]"])

        assert result.exit_code == 1
        assert "not a ruling" in result.output

    def test_x2_line_outside_orbit(self, runner):
        """Test H-L1-L2 on X_2 cannot be moved to L2."""
        result = runner.invoke(cli, ["branch", "--n", "2", "--fix", "line", "--l", "[1,1,1]"])

        assert result.exit_code == 1
        assert "Weyl orbit" in result.output


class TestVerifyCommand:
    """Tests for enlattice verify."""

    def test_census(self, runner):
        """Test the census suite up to X_6."""
        result = runner.invoke(cli, ["verify", "census", "--n-max", "6"])

        assert result.exit_code == 0
        assert "Running census up to n = 6" in result.output
        assert "census.X6.lines" in result.output

    def test_json_timing(self, runner):
        """Test JSON output with timing."""
        result = runner.invoke(cli, ["verify", "small-n", "--n-max", "4", "--timing", "--format", "json"])

        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["suite"] == "small-n"
        assert "small-n" in data["timing"]

    def test_unknown_suite(self, runner):
        """Test suite names are checked by click."""
        result = runner.invoke(cli, ["verify", "nope"])

        assert result.exit_code == 2


class TestExportCommand:
    """Tests for enlattice export."""

    def test_dot_stdout(self, runner):
        """Test DOT output on stdout."""
        result = runner.invoke(cli, ["export", "--n", "6"])

        assert result.exit_code == 0
        assert result.output.startswith('graph "line-incidence-X6" {')
        assert result.output.count(" -- ") == 135

    def test_json_file(self, runner, tmp_path):
        """Test writing node-link JSON to a file."""
        target = tmp_path / "bitangents.json"
        result = runner.invoke(
            cli, ["export", "--n", "7", "--graph", "bitangent-pairs", "--format", "json", "-o", str(target)]
        )

        assert result.exit_code == 0
        assert "Wrote bitangent-pairs graph of X_7" in result.output
        data = json.loads(target.read_text())
        assert len(data["nodes"]) == 56
        assert len(data["edges"]) == 28

    def test_rank_limit_from_env(self, runner, monkeypatch):
        """Test ENLATTICE_LIMITS_MAX_RANK caps --n."""
        monkeypatch.setenv("ENLATTICE_LIMITS_MAX_RANK", "6")

        result = runner.invoke(cli, ["export", "--n", "7"])

        assert result.exit_code == 2
        assert "max_rank=6" in result.output

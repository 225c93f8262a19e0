"""Tests for the hmcat command line."""

import json
from pathlib import Path

import pytest
import yaml
from typer.testing import CliRunner

from hmcat.cli import app
from hmcat.verify.fixtures import FIXTURES_DIR


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


class TestStructureCommands:
    """Tests for validate and the construction commands."""

    def test_validate_fixture(self, runner: CliRunner) -> None:
        """Test that a packaged fixture validates."""
        result = runner.invoke(app, ["validate", "swap"])
        assert result.exit_code == 0
        assert "ok" in result.output

    def test_validate_broken(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test that a broken action exits 1 and names the violation."""
        data = yaml.safe_load((FIXTURES_DIR / "swap.yaml").read_text())
        data["action"]["s"]["morphisms"]["a"] = "a"
        path = tmp_path / "broken.yaml"
        path.write_text(yaml.safe_dump(data))
        result = runner.invoke(app, ["validate", str(path)])
        assert result.exit_code == 1

    def test_unknown_document(self, runner: CliRunner) -> None:
        """Test that an unknown name exits 1 with a message."""
        result = runner.invoke(app, ["validate", "nope"])
        assert result.exit_code == 1
        assert "Unknown fixture" in result.output

    def test_quotient_writes_document(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test that quotient -o writes a graded document."""
        out = tmp_path / "q.yaml"
        result = runner.invoke(app, ["quotient", "swap", "-o", str(out)])
        assert result.exit_code == 0
        data = yaml.safe_load(out.read_text())
        assert len(data["objects"]) == 1
        assert "grading" in data

    def test_quotient_non_free(self, runner: CliRunner) -> None:
        """Test that a non-free action is reported, not raised."""
        result = runner.invoke(app, ["quotient", "sign"])
        assert result.exit_code == 1
        assert "resolving_category" in result.output

    def test_skew_then_classes(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test that a skew document feeds hh --classes."""
        out = tmp_path / "skew.yaml"
        assert runner.invoke(app, ["skew", "triv", "-o", str(out)]).exit_code == 0
        result = runner.invoke(app, ["hh", str(out), "-n", "2", "--classes", "-f", "json"])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["dimensions"] == [2, 0, 0]

    def test_resolve_and_transversal(self, runner: CliRunner) -> None:
        """Test that resolve and transversal print YAML documents."""
        resolved = runner.invoke(app, ["resolve", "sign"])
        assert resolved.exit_code == 0
        assert len(yaml.safe_load(resolved.stdout)["objects"]) == 2
        transversal = runner.invoke(app, ["transversal", "swap", "-t", "y"])
        assert transversal.exit_code == 0
        assert yaml.safe_load(transversal.stdout)["objects"]


class TestHomologyCommands:
    """Tests for hh and hhcoh."""

    def test_hh_json(self, runner: CliRunner) -> None:
        """Test HH_* of k[t]/(t^2) as JSON."""
        result = runner.invoke(app, ["hh", "sign", "-n", "3", "-f", "json"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["dimensions"] == [2, 1, 1, 1]

    def test_hh_field_option(self, runner: CliRunner) -> None:
        """Test that --field rebinds the document to F2."""
        result = runner.invoke(app, ["hh", "sign", "-n", "2", "-k", "2", "-f", "json"])
        assert json.loads(result.stdout)["dimensions"] == [2, 2, 2]

    def test_hh_coinvariants(self, runner: CliRunner) -> None:
        """Test the coinvariant columns."""
        result = runner.invoke(app, ["hh", "sign", "-n", "2", "--coinvariants", "-f", "json"])
        data = json.loads(result.stdout)
        assert data["H_n((C_•)_G)"] == [1, 0, 0]

    def test_hh_table(self, runner: CliRunner) -> None:
        """Test the default table output."""
        result = runner.invoke(app, ["hh", "matrix2", "-n", "1"])
        assert result.exit_code == 0
        assert "dim HH_n" in result.output

    def test_classes_need_grading(self, runner: CliRunner) -> None:
        """Test that --classes on an ungraded document exits 1."""
        result = runner.invoke(app, ["hh", "sign", "-n", "1", "--classes"])
        assert result.exit_code == 1
        assert "no grading" in result.output

    def test_hhcoh_invariants(self, runner: CliRunner) -> None:
        """Test HH^* with invariants as YAML."""
        result = runner.invoke(app, ["hhcoh", "sign", "-n", "2", "--invariants", "-f", "yaml"])
        assert result.exit_code == 0
        data = yaml.safe_load(result.stdout)
        assert data["dimensions"] == [2, 1, 1]
        assert data["H^n(C^•^G)"] == [1, 1, 1]

    def test_cup(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test the cup product of the unit with the derivation t ↦ t."""
        one = tmp_path / "one.yaml"
        one.write_text("degree: 0\nentries:\n  - {path: [], value: '1'}\n")
        d = tmp_path / "d.yaml"
        d.write_text("degree: 1\nentries:\n  - {path: [t], value: t}\n")
        result = runner.invoke(app, ["hhcoh", "sign", "--cup", str(one), "--cup", str(d)])
        assert result.exit_code == 0
        assert yaml.safe_load(result.stdout) == {"degree": 1, "entries": [{"path": ["t"], "value": "t", "coeff": 1}]}

    def test_cup_needs_two_files(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test that a single --cup is refused."""
        one = tmp_path / "one.yaml"
        one.write_text("degree: 0\nentries: []\n")
        result = runner.invoke(app, ["hhcoh", "sign", "--cup", str(one)])
        assert result.exit_code == 1
        assert "exactly two" in result.output


class TestVerifyCommand:
    """Tests for verify and the listings."""

    def test_single_theorem(self, runner: CliRunner) -> None:
        """Test a verified check exits 0."""
        result = runner.invoke(app, ["verify", "galois", "swap", "-n", "2", "-p", "quick"])
        assert result.exit_code == 0
        assert "verified" in result.output

    def test_hypothesis_not_met_exits_zero(self, runner: CliRunner) -> None:
        """Test that a non-free galois check is not a failure."""
        result = runner.invoke(app, ["verify", "galois", "sign", "-n", "1", "-f", "json"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)[0]["verdict"] == "hypothesis-not-met"

    def test_closed_forms_run_dir(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test that -o writes the run directory with a Markdown report."""
        result = runner.invoke(app, ["verify", "closed-forms", "-n", "2", "-o", str(tmp_path)])
        assert result.exit_code == 0
        latest = tmp_path / "latest"
        assert (latest / "report.md").exists()
        assert json.loads((latest / "config.json").read_text())["theorem"] == "closed-forms"

    def test_unknown_theorem(self, runner: CliRunner) -> None:
        """Test that an unknown theorem id exits 1."""
        result = runner.invoke(app, ["verify", "nope"])
        assert result.exit_code == 1
        assert "Unknown theorem" in result.output

    def test_random(self, runner: CliRunner) -> None:
        """Test a small random run."""
        result = runner.invoke(app, ["verify", "random", "--count", "2", "--seed", "3", "-n", "1", "-f", "json"])
        assert result.exit_code == 0
        assert len(json.loads(result.stdout)) == 6

    def test_fixtures(self, runner: CliRunner) -> None:
        """Test the fixture listing."""
        result = runner.invoke(app, ["fixtures"])
        assert result.exit_code == 0
        assert "s3-regular" in result.output

    def test_profiles(self, runner: CliRunner) -> None:
        """Test the profile listing."""
        result = runner.invoke(app, ["profiles"])
        assert {"default", "quick", "char2"} <= set(result.output.split())

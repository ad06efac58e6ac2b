"""
Tests for the Command-Line Interface
"""

import io
import json
import math

import pandas as pd
import pytest

from cli.commands import fmt, load_graph
from cli.main import EXIT_INPUT, EXIT_OK, apply_overrides, build_parser, main
from simulation.models import GENERATOR
from src.config import Settings
from src.exact.constants import ETA, TRIE_NORM


def run_json(capsys, argv):
    """Run the CLI with --json and return (exit code, report)."""
    code = main([*argv, "--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestFormatting:
    """Tests for number formatting and graph loading."""

    @pytest.mark.parametrize(
        "value, places, expected",
        [(0.5, 0, "0"), (1.5, 0, "2"), (2.5, 0, "2"), (ETA[2], 6, "1.154701"), (1.0, 3, "1.000")],
    )
    def test_round_half_even(self, value, places, expected):
        """Test ties round to even."""
        assert fmt(value, places) == expected

    def test_nan(self):
        """Test NaN renders as nan."""
        assert fmt(float("nan")) == "nan"

    def test_load_catalog_name(self):
        """Test a catalog name resolves to its graph."""
        assert load_graph("trie").to_text() == "111\n110\n100"

    def test_load_file(self, tmp_path):
        """Test a text file is parsed."""
        path = tmp_path / "g.txt"
        path.write_text("11\n01\n")
        assert load_graph(str(path)).shape == (2, 2)

    def test_load_stdin(self, monkeypatch):
        """Test '-' reads JSON from stdin."""
        monkeypatch.setattr("sys.stdin", io.StringIO('{"m": 1, "n": 2, "rows": ["11"]}'))
        assert load_graph("-").shape == (1, 2)


class TestParser:
    """Tests for argument parsing and overrides."""

    def test_overrides(self):
        """Test solver flags replace the settings values."""
        args = build_parser().parse_args(["norm", "trie", "--tol", "1e-4", "--restarts", "3"])
        settings = apply_overrides(Settings(), args)
        assert settings.bounds.tol == 1e-4
        assert settings.bounds.restarts == 3
        assert settings.bounds.max_iters == Settings().bounds.max_iters

    def test_no_overrides(self):
        """Test the settings object is returned unchanged without flags."""
        settings = Settings()
        args = build_parser().parse_args(["catalog"])
        assert apply_overrides(settings, args) is settings

    def test_certificate_tol_is_separate(self):
        """Test verify-certs --tol does not touch the solver tolerance."""
        args = build_parser().parse_args(["verify-certs", "--tol", "1e-8"])
        assert args.cert_tol == 1e-8
        assert apply_overrides(Settings(), args).bounds.tol == Settings().bounds.tol

    def test_remark56_subcommand(self):
        """Test remark56 is registered, with obstruction-norms as an alias."""
        parser = build_parser()
        for name in ("remark56", "obstruction-norms"):
            args = parser.parse_args([name])
            assert args.handler.__name__ == "cmd_remark56"

    def test_witnesses_flag(self):
        """Test --witnesses and --witness both set the witness option."""
        parser = build_parser()
        assert parser.parse_args(["norm", "E2", "--witnesses"]).witness is True
        assert parser.parse_args(["norm", "E2", "--witness"]).witness is True
        assert parser.parse_args(["norm", "E2"]).witness is False

    def test_enumerate_check_flag(self):
        """Test enumerate accepts --check."""
        args = build_parser().parse_args(["enumerate", "--max-m", "4", "--max-n", "4", "--check"])
        assert args.check is True
        assert (args.max_m, args.max_n) == (4, 4)

    def test_version(self, capsys):
        """Test --version exits cleanly."""
        with pytest.raises(SystemExit) as info:
            main(["--version"])
        assert info.value.code == 0
        assert "schur-norms" in capsys.readouterr().out

    def test_no_command(self):
        """Test a bare invocation is an input error."""
        assert main([]) == EXIT_INPUT


class TestCommands:
    """Tests for the subcommands end to end."""

    def test_catalog(self, capsys):
        """Test the catalog lists the named graphs."""
        assert main(["catalog"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "trie" in out
        assert "gee6-cycle" in out

    def test_catalog_json(self, capsys):
        """Test the JSON report of a single catalog entry."""
        code, report = run_json(capsys, ["catalog", "trie"])
        assert code == EXIT_OK
        assert report["command"] == "catalog"
        assert report["generator"] == GENERATOR
        assert report["results"][0]["exact"] == pytest.approx(TRIE_NORM)
        assert report["passed"] is True

    def test_unknown_name(self, capsys):
        """Test an unknown graph name exits with the input code."""
        assert main(["norm", "nosuch"]) == EXIT_INPUT
        assert "error" in capsys.readouterr().err

    def test_norm(self, capsys):
        """Test norm reports a converged interval around sqrt(4/3)."""
        code, report = run_json(capsys, ["norm", "E2"])
        assert code == EXIT_OK
        results = report["results"]
        assert results["converged"] is True
        assert results["lower"] <= ETA[2] + 1e-9
        assert results["upper"] >= ETA[2] - 1e-9
        assert report["seeds"] == {"bounds": 0}

    def test_norm_witness(self, capsys):
        """Test --witness includes the witness matrices."""
        code, report = run_json(capsys, ["norm", "single-edge", "--witness"])
        assert code == EXIT_OK
        assert "witness_U" in report["results"]
        assert "factorization" in report["results"]

    def test_norm_witnesses(self, capsys):
        """Test --witnesses includes the witness matrices."""
        code, report = run_json(capsys, ["norm", "sigma:2,2", "--witnesses"])
        assert code == EXIT_OK
        assert "witness_U" in report["results"]
        assert "factorization" in report["results"]

    def test_enumerate_check(self, capsys):
        """Test enumerate --check runs the cross-checks and prints the label histogram."""
        assert main(["enumerate", "--max-m", "2", "--max-n", "2", "--check"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "labels:" in out
        assert "oracle failures: 0" in out
        assert "gap failures: 0" in out

    def test_enumerate_check_json(self, capsys):
        """Test the JSON report records that the checks ran."""
        code, report = run_json(capsys, ["enumerate", "--max-m", "2", "--max-n", "2", "--check"])
        assert code == EXIT_OK
        results = report["results"]
        assert results["checked"] is True
        assert results["matrices"] == 26
        assert sum(results["histogram"].values()) == 26

    def test_enumerate_without_check(self, capsys):
        """Test a plain sweep reports labels but no cross-check results."""
        assert main(["enumerate", "--max-m", "1", "--max-n", "2"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "labels:" in out
        assert "oracle failures" not in out

    def test_invalid_tolerance(self):
        """Test an out-of-range --tol is an input error."""
        assert main(["norm", "E2", "--tol", "0.5"]) == EXIT_INPUT

    def test_bad_config(self, tmp_path):
        """Test a malformed settings file is an input error."""
        path = tmp_path / "solver.yaml"
        path.write_text("bounds: [unclosed\n")
        assert main(["catalog", "--config", str(path)]) == EXIT_INPUT

    def test_classify_structure(self, capsys):
        """Test classify with structure reports."""
        code, report = run_json(capsys, ["classify", "E4", "--structure"])
        assert code == EXIT_OK
        assert report["results"]["label"] == "Eta(4)"
        assert len(report["results"]["structure"]) == 1
        assert report["results"]["structure"][0]["degree_three"]["E4"] is True

    def test_verify_certs(self, capsys):
        """Test every stored certificate passes."""
        assert main(["verify-certs", "--bracket-max-n", "3"]) == EXIT_OK
        assert "FAIL" not in capsys.readouterr().out

    def test_witness_path(self, capsys):
        """Test the path construction satisfies its invariants."""
        code, report = run_json(capsys, ["witness", "--path-n", "3"])
        assert code == EXIT_OK
        assert max(report["results"]["defects"].values()) <= 1e-9

    def test_witness_graph(self, capsys):
        """Test a stored certificate is dumped and verified."""
        assert main(["witness", "--graph", "gee7"]) == EXIT_OK
        assert "PASS" in capsys.readouterr().out

    def test_witness_needs_target(self):
        """Test witness without arguments is an input error."""
        assert main(["witness"]) == EXIT_INPUT

    def test_paths_csv(self, tmp_path, capsys):
        """Test the paths table is written as CSV."""
        path = tmp_path / "paths.csv"
        assert main(["paths", "--max-n", "3", "--csv", str(path)]) == EXIT_OK
        frame = pd.read_csv(path)
        assert list(frame["n"]) == [1, 2, 3]
        assert frame["path_norm"].iloc[1] == pytest.approx(ETA[2])
        assert (frame["numeric_lower"] <= frame["path_norm"] + 1e-6).all()

    def test_random_exhaustive(self, capsys):
        """Test the exact 2x2 expectation through the CLI."""
        code, report = run_json(capsys, ["random", "--m", "2", "--n", "2", "--exhaustive"])
        assert code == EXIT_OK
        assert report["results"]["mean"] == pytest.approx((11.0 + 4.0 * ETA[2]) / 16.0, abs=1e-9)
        assert report["seeds"]["master_seed"] == 42

    def test_random_growth(self, capsys):
        """Test the growth check passes for a small Monte Carlo run."""
        code, report = run_json(
            capsys, ["random", "--m", "4", "--n", "4", "--trials", "10", "--growth", "--seed", "3"]
        )
        assert code == EXIT_OK
        assert report["results"]["growth"]["holds"] is True
        assert len(report["results"]["per_trial_values"]) == 10

    def test_random_invalid_probability(self):
        """Test p outside (0, 1) is an input error."""
        assert main(["random", "--m", "2", "--n", "2", "--p", "1.5"]) == EXIT_INPUT

    def test_growth_needs_half(self):
        """Test the growth bound is refused for p != 1/2."""
        argv = ["random", "--m", "2", "--n", "2", "--p", "0.3", "--trials", "2", "--growth"]
        assert main(argv) == EXIT_INPUT

    def test_sign_survey(self, capsys):
        """Test the 2x2 sign survey."""
        code, report = run_json(capsys, ["signs", "--survey", "2", "2"])
        assert code == EXIT_OK
        assert report["results"]["max_norm"] == pytest.approx(math.sqrt(2.0), abs=1e-5)

    def test_sign_average_too_large(self, tmp_path):
        """Test the sign-averaging check rejects 4x4 input."""
        path = tmp_path / "g.txt"
        path.write_text("1100\n0110\n0011\n0001\n")
        assert main(["signs", str(path)]) == EXIT_INPUT

    @pytest.mark.slow
    def test_table(self, capsys):
        """Test the nine exact norms are reproduced and certified."""
        code, report = run_json(capsys, ["table"])
        assert code == EXIT_OK
        assert len(report["results"]) == 9
        assert all(row["certificate"] == "PASS" for row in report["results"])

    @pytest.mark.slow
    def test_remark_values(self, capsys):
        """Test the obstruction norms match to five decimals."""
        code, report = run_json(capsys, ["remark56"])
        assert code == EXIT_OK
        assert [row["graph"] for row in report["results"]][0] == "obstruction:5.4"

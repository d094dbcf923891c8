"""End-to-end tests for the command-line tool."""

import json

import pytest

from src.analysis import formulas
from src.analysis.formulas import GammaPair
from src.cli.main import EXIT_FAILURE, EXIT_LIMIT, EXIT_OK, EXIT_USAGE, main
from src.config import settings


def _write(tmp_path, name: str, text: str):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


class TestIdentify:
    """Tests for the identify command."""

    def test_xor(self, xor_file, capsys):
        assert main(["identify", str(xor_file), "--seed", "1", "--threads", "1"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "\nC=11 c_n=0\n" in out
        assert "unanimous" in out

    def test_xnor(self, xnor_file, capsys):
        assert main(["identify", str(xnor_file), "--seed", "1", "--threads", "1"]) == EXIT_OK
        assert "\nC=11 c_n=1\n" in capsys.readouterr().out

    def test_linear_mode(self, xnor_file, capsys):
        assert main(["identify", str(xnor_file), "--mode", "linear", "--threads", "1"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "\nC=11\n" in out
        assert "c_n" not in out.split("votes:")[0].splitlines()[1]

    def test_deterministic_output(self, tmp_path, capsys):
        path = _write(tmp_path, "f.bfn", "n=3\n0-1-0110\n")
        args = ["identify", path, "--seed", "42", "--trials", "10", "--oracle", "vote"]
        assert main(args + ["--threads", "1"]) == EXIT_OK
        first = capsys.readouterr().out
        assert main(args + ["--threads", "3"]) == EXIT_OK
        assert capsys.readouterr().out == first

    def test_json(self, xor_file, capsys):
        assert main(["identify", str(xor_file), "--json", "--trials", "2"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert (report["C"], report["c_n"]) == ("11", 0)
        assert report["shots"] == 4
        assert report["counts"]["d"] == 0

    def test_warns_on_dont_care_majority(self, tmp_path, capsys):
        path = _write(tmp_path, "half.bfn", "n=2\n0--1\n")
        assert main(["identify", path, "--trials", "5"]) == EXIT_OK
        captured = capsys.readouterr()
        assert "warning: dont_care_majority" in captured.err
        assert "anomalies: dont_care_majority" in captured.out

    def test_in_class_reruns_agree(self, tmp_path, capsys):
        path = _write(tmp_path, "masked.bfn", "n=3\n01100-10\n")
        correct = 0
        for seed in range(100):
            assert main(["identify", path, "--seed", str(seed), "--threads", "1"]) == EXIT_OK
            correct += "\nC=011 c_n=0\n" in capsys.readouterr().out
        assert correct >= 95

    def test_parse_error(self, tmp_path, capsys):
        path = _write(tmp_path, "bad.bfn", "n=2\n011\n")
        assert main(["identify", path]) == EXIT_USAGE
        assert "line 2, column 4" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert main(["identify", str(tmp_path / "nope.bfn")]) == EXIT_USAGE

    def test_register_limit(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setattr(settings, "max_register_qubits", 2)
        path = _write(tmp_path, "big.bfn", "n=3\n01101001\n")
        assert main(["identify", path]) == EXIT_LIMIT
        assert "exceeds the configured limit" in capsys.readouterr().err


class TestProb:
    """Tests for the prob command."""

    def test_completely_specified(self, xor_file, capsys):
        assert main(["prob", str(xor_file)]) == EXIT_OK
        out = capsys.readouterr().out
        assert "completions=1" in out
        assert "P_L analytic=1.000000000 simulated=1.000000000 delta=0.000000000" in out

    def test_half_dont_care_quarter(self, tmp_path, capsys):
        path = _write(tmp_path, "half.bfn", "n=2\n0--1\n")
        assert main(["prob", path]) == EXIT_OK
        out = capsys.readouterr().out
        assert "completions=2" in out
        assert out.count("P_L analytic=n/a simulated=0.250000000") == 2

    def test_masked_instance_agrees(self, tmp_path, capsys):
        path = _write(tmp_path, "masked.bfn", "n=3\n00--1100\n")
        assert main(["prob", path, "--json"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        for completion in report["completions"]:
            assert completion["linear_delta"] < 1e-9
            assert completion["joint_delta"] < 1e-9

    def test_no_completion(self, tmp_path, capsys):
        path = _write(tmp_path, "and.bfn", "n=2\n0001\n")
        assert main(["prob", path]) == EXIT_FAILURE
        assert "no affine completion" in capsys.readouterr().err

    def test_outcomes_reported(self, xor_file, capsys):
        assert main(["prob", str(xor_file), "--json"]) == EXIT_OK
        outcomes = json.loads(capsys.readouterr().out)["outcomes"]
        assert (outcomes[0]["C"], outcomes[0]["c_n"]) == ("11", 0)
        assert outcomes[0]["probability"] == pytest.approx(1.0, abs=1e-9)

    def test_outcomes_ranked(self, tmp_path, capsys):
        path = _write(tmp_path, "half.bfn", "n=2\n0--1\n")
        assert main(["prob", path, "--json"]) == EXIT_OK
        outcomes = json.loads(capsys.readouterr().out)["outcomes"]
        probabilities = [o["probability"] for o in outcomes]
        assert 1 <= len(outcomes) <= 4
        assert probabilities == sorted(probabilities, reverse=True)
        assert sum(probabilities) <= 1.0 + 1e-9

    def test_outcomes_rendered(self, xor_file, capsys):
        assert main(["prob", str(xor_file)]) == EXIT_OK
        out = capsys.readouterr().out
        assert "\noutcomes:\n  C=11 c_n=0  " in out


class TestSweep:
    """Tests for the sweep command."""

    def test_writes_csv(self, tmp_path, capsys):
        out = tmp_path / "linear.csv"
        assert main(["sweep", "--mode", "linear", "--steps", "10", "--out", str(out)]) == EXIT_OK
        lines = out.read_text().splitlines()
        assert lines[0] == "D,D1,P,in_class"
        assert lines[1] == "0.000000000,0.000000000,1.000000000,true"
        assert len(lines) == 1 + 55
        assert "wrote 55 rows" in capsys.readouterr().out

    def test_reports_class_coverage(self, tmp_path, capsys):
        out = tmp_path / "auto.csv"
        args = ["sweep", "--mode", "affine", "--steps", "20", "--oracle", "auto", "--out", str(out)]
        assert main(args) == EXIT_OK
        line = next(
            line for line in capsys.readouterr().out.splitlines() if line.startswith("class_coverage=")
        )
        coverage, oracle = line.split()
        assert 0.0 < float(coverage.split("=")[1]) <= 1.0
        assert oracle == "oracle=auto"

    def test_affine_lower_corner(self, tmp_path):
        out = tmp_path / "affine.csv"
        assert main(["sweep", "--mode", "affine", "--steps", "400", "--out", str(out)]) == EXIT_OK
        last_d = "0.498750000"
        corner = next(
            line for line in out.read_text().splitlines() if line.startswith(f"{last_d},0.000000000,")
        )
        P, in_class = corner.split(",")[2:]
        assert float(P) == pytest.approx(0.0214, abs=1e-3)
        assert in_class == "false"

    def test_small_grid(self, tmp_path):
        assert main(["sweep", "--steps", "1", "--out", str(tmp_path / "x.csv")]) == EXIT_USAGE

    def test_unwritable(self, tmp_path):
        assert main(["sweep", "--out", str(tmp_path / "missing" / "x.csv")]) == EXIT_USAGE


class TestClassify:
    """Tests for the classify command."""

    def test_trivial(self, capsys):
        assert main(["classify", "--n", "4", "--d0", "0", "--d1", "0"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "P=1.000000000" in out
        assert "in_class=true" in out

    def test_inside_affine_class(self, capsys):
        assert main(["classify", "--n", "4", "--d0", "0", "--d1", "6"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "D=0.375000000 D0=0.000000000 D1=0.375000000" in out
        assert "threshold=0.3229085" in out
        assert "in_class=true" in out

    @pytest.mark.parametrize("mode", ["linear", "affine"])
    def test_outside_both_classes(self, mode, capsys):
        assert main(["classify", "--n", "4", "--d0", "6", "--d1", "0", "--mode", mode]) == EXIT_OK
        assert "in_class=false" in capsys.readouterr().out

    def test_json(self, capsys):
        assert main(["classify", "--n", "4", "--d0", "0", "--d1", "6", "--json"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["probability"] == pytest.approx(0.79239, abs=1e-5)

    def test_domain_violation(self, capsys):
        assert main(["classify", "--n", "4", "--d0", "4", "--d1", "4"]) == EXIT_USAGE
        assert "error:" in capsys.readouterr().err


class TestVerify:
    """Tests for the verify command."""

    def test_passes(self, capsys):
        args = ["verify", "--max-n", "2", "--masks", "5", "--shots", "400", "--seed", "3"]
        assert main(args) == EXIT_OK
        out = capsys.readouterr().out
        assert "result: pass" in out
        assert "FAIL" not in out

    def test_smallest_register(self, capsys):
        assert main(["verify", "--max-n", "1", "--masks", "2", "--shots", "100"]) == EXIT_OK

    def test_detects_wrong_amplitudes(self, mocker, capsys):
        real = formulas.gammas

        def swapped(n, d0, d1):
            pair = real(n, d0, d1)
            return GammaPair(gamma0=pair.gamma1, gamma1=pair.gamma0)

        mocker.patch.object(formulas, "gammas", side_effect=swapped)
        args = ["verify", "--max-n", "3", "--masks", "5", "--shots", "100", "--seed", "3"]
        assert main(args) == EXIT_FAILURE
        out = capsys.readouterr().out
        assert "FAIL formula_agreement" in out
        assert "counterexample:" in out


class TestUsage:
    """Tests for argument handling."""

    def test_missing_argument(self, capsys):
        assert main(["identify"]) == EXIT_USAGE
        assert "error:" in capsys.readouterr().err

    def test_unknown_command(self):
        assert main(["frobnicate"]) == EXIT_USAGE

    def test_help(self, capsys):
        assert main(["classify", "--help"]) == EXIT_OK
        assert "--d0" in capsys.readouterr().out

import json
import subprocess
import sys

import pytest

import fixtures
from bessel_interlace.cli import main, parse_grid, to_json


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestZerosCommand:
    def test_csv_table(self, capsys):
        code, out, _ = run_cli(capsys, "zeros", "--kind", "j", "--nu", "0", "--smax", "2")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "kind,nu,s,value,bracket_lo,bracket_hi,residual"
        assert len(lines) == 3
        vals = [float(line.split(",")[3]) for line in lines[1:]]
        assert vals[0] == pytest.approx(fixtures.ORACLE_ZEROS[("j", 0.0, 1)], abs=1e-12)
        assert vals[1] == pytest.approx(fixtures.ORACLE_ZEROS[("j", 0.0, 2)], abs=1e-12)

    def test_conventional_jprime_row(self, capsys):
        code, out, _ = run_cli(capsys, "zeros", "--kind", "jp", "--nu", "0", "--smax", "1")
        assert code == 0
        row = out.strip().split("\n")[1].split(",")
        assert float(row[3]) == 0.0

    def test_domain_error_names_flag(self, capsys):
        code, _, err = run_cli(capsys, "zeros", "--kind", "j", "--nu", "-1", "--smax", "1")
        assert code == 2
        assert "--nu" in err

    def test_bad_kind(self, capsys):
        code, _, err = run_cli(capsys, "zeros", "--kind", "q", "--nu", "0", "--smax", "1")
        assert code == 2
        assert "--kind" in err

    def test_csv_json_same_numbers(self, capsys):
        _, csv_out, _ = run_cli(capsys, "zeros", "--kind", "y", "--nu", "2.5", "--smax", "3")
        _, json_out, _ = run_cli(capsys, "zeros", "--kind", "y", "--nu", "2.5", "--smax", "3", "--format", "json")
        csv_vals = [float(line.split(",")[3]) for line in csv_out.strip().split("\n")[1:]]
        json_vals = [z["value"] for z in json.loads(json_out)["zeros"]]
        assert csv_vals == json_vals


class TestChainCommand:
    def test_clean_sweep_exits_zero(self, capsys):
        code, out, _ = run_cli(capsys, "chain", "--nu", "0.5", "--eps", "0.5", "--smax", "20")
        assert code == 0
        assert all(line.endswith("true") for line in out.strip().split("\n")[1:])

    def test_breaking_sweep_exits_one(self, capsys):
        code, out, _ = run_cli(capsys, "chain", "--nu", "0", "--eps", "2", "--smax", "5")
        assert code == 1
        assert any(line.endswith("false") for line in out.strip().split("\n")[1:])

    def test_zero_eps_rejected(self, capsys):
        code, _, err = run_cli(capsys, "chain", "--nu", "1", "--eps", "0", "--smax", "5")
        assert code == 2
        assert "--eps" in err


class TestVerifyCommand:
    def test_all_suite_small_grid(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "all", "--nu-grid", "0:2:0.5", "--smax", "5")
        assert code == 0
        doc = json.loads(out)
        assert doc["suite"] == "all"
        assert doc["violations"] == []
        assert doc["grid"]["smax"] == 5

    def test_proposition_exemption_notes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "proposition", "--nu-grid", "0:0:1", "--smax", "20")
        assert code == 0
        doc = json.loads(out)
        assert doc["violations"] == []
        assert any(n["suite"] == "proposition" for n in doc["exemptions"])

    def test_bogus_suite(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--suite", "bogus", "--nu-grid", "0:1:1")
        assert code == 2
        assert "--suite" in err

    def test_csv_format_rejected(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--suite", "all", "--nu-grid", "0:1:1", "--format", "csv")
        assert code == 2

    def test_thread_determinism(self, capsys, monkeypatch):
        args = ("verify", "--suite", "theorem2", "--nu-grid", "0:3:0.5", "--smax", "6")
        _, serial, _ = run_cli(capsys, *args)
        monkeypatch.setenv("BESSEL_INTERLACE_THREADS", "4")
        _, threaded, _ = run_cli(capsys, *args)
        assert serial == threaded


class TestBreakCommand:
    def test_finds_rank_one(self, capsys):
        code, out, _ = run_cli(capsys, "break", "--nu", "0", "--eps", "2", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["s"] == 1
        assert doc["y_value"] - doc["j_value"] == pytest.approx(fixtures.BREAK_GAP_NU0_EPS2, abs=1e-9)

    def test_larger_order_needs_higher_rank(self, capsys):
        code, out, _ = run_cli(capsys, "break", "--nu", "10", "--eps", "1.25", "--scap", "500", "--format", "json")
        assert code == 0
        assert json.loads(out)["s"] > 1

    def test_eps_below_regime(self, capsys):
        code, _, err = run_cli(capsys, "break", "--nu", "0", "--eps", "0.5")
        assert code == 2
        assert "--eps" in err

    def test_cap_exhausted_exits_one(self, capsys):
        code, out, _ = run_cli(capsys, "break", "--nu", "10", "--eps", "1.25", "--scap", "2", "--format", "json")
        assert code == 1
        assert json.loads(out)["found"] is False


class TestWronskianCommand:
    def test_small_gap_profile(self, capsys):
        code, out, _ = run_cli(capsys, "wronskian", "--nu", "0", "--mu", "0.5", "--smax", "10")
        assert code == 0
        assert "# all_same_sign=true" in out
        assert "first_zero=none" in out

    def test_wide_gap_has_zero(self, capsys):
        code, out, _ = run_cli(capsys, "wronskian", "--nu", "0", "--mu", "2", "--smax", "10", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["first_zero"] == pytest.approx(fixtures.W_0_2_FIRST_ZERO, abs=1e-9)

    def test_equal_orders_rejected(self, capsys):
        code, _, err = run_cli(capsys, "wronskian", "--nu", "1", "--mu", "1")
        assert code == 2


class TestCounterexampleCommand:
    def test_both_orderings(self, capsys):
        code, out, _ = run_cli(
            capsys, "counterexample", "--eps", "1", "--nu-list", "0,599", "--s", "1", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        orders = {w["ordering"]: w["nu"] for w in doc["witnesses"]}
        assert orders == {"greater": 0.0, "less": 599.0}

    def test_single_ordering_exits_one(self, capsys):
        code, _, _ = run_cli(capsys, "counterexample", "--eps", "0.1", "--nu-list", "0.5,5", "--s", "1")
        assert code == 1

    def test_bad_nu_list(self, capsys):
        code, _, err = run_cli(capsys, "counterexample", "--eps", "0.1", "--nu-list", "a,b", "--s", "1")
        assert code == 2


class TestHarness:
    def test_unknown_command_exits_two(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_malformed_number_exits_two(self, capsys):
        assert main(["zeros", "--kind", "j", "--nu", "abc", "--smax", "1"]) == 2

    def test_no_arguments_exits_two(self, capsys):
        assert main([]) == 2

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "zeros.csv"
        code = main(["zeros", "--kind", "j", "--nu", "0", "--smax", "1", "--out", str(target)])
        capsys.readouterr()
        assert code == 0
        data = target.read_bytes()
        assert data.endswith(b"\n")
        assert b"\r" not in data

    def test_seventeen_digit_round_trip(self):
        import math

        rendered = to_json({"x": math.pi})
        assert json.loads(rendered)["x"] == math.pi

    def test_grid_parsing(self):
        assert parse_grid("0:1:0.5") == [0.0, 0.5, 1.0]
        assert parse_grid("2:2:1") == [2.0]
        with pytest.raises(Exception):
            parse_grid("1:0:0.5")

    def test_console_script_entry(self):
        proc = subprocess.run(
            [sys.executable, "-m", "bessel_interlace.cli", "zeros", "--kind", "y", "--nu", "0.5", "--smax", "1"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.startswith("kind,nu,s,value")

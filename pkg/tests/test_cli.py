import csv
import json
import subprocess
import sys

import pytest

from gammaprod.cli import main


def run_main(args):
    return main(args)


class TestEval:
    def test_half(self, capsys):
        assert run_main(["eval", "1/2", "--digits", "30"]) == 0
        out = capsys.readouterr().out
        assert "1.772453850905516027298" in out  # sqrt(pi)

    def test_one(self, capsys):
        assert run_main(["eval", "1/1"]) == 0
        out = capsys.readouterr().out
        assert "Gamma(1)   = 1.0" in out

    def test_third_consistent_with_pair_sum(self, capsys):
        assert run_main(["eval", "1/3", "--digits", "40"]) == 0
        out = capsys.readouterr().out
        # lnGamma(1/3) = ln(2 pi / sqrt 3) - lnGamma(2/3) = 0.9854206469...
        assert "0.98542064692776" in out

    def test_parse_error(self):
        assert run_main(["eval", "abc"]) == 2

    def test_domain_error(self):
        assert run_main(["eval", "-1/2"]) == 3


class TestVerify:
    def test_theorem1_range(self, tmp_path):
        out = tmp_path / "t1.json"
        code = run_main(["verify", "theorem1", "--n-max", "64",
                         "--format", "json", "--out", str(out), "--jobs", "1"])
        assert code == 0
        records = [json.loads(line) for line in out.read_text().splitlines()]
        assert len(records) == 63
        assert all(r["pass"] for r in records)
        assert [r["parameter"] for r in records] == list(range(2, 65))
        assert all(r["identity_id"] == "theorem1_direct" for r in records)

    def test_all_catalog(self, tmp_path):
        out = tmp_path / "all.json"
        code = run_main(["verify", "all", "--n-max", "16", "--N", "16",
                         "--format", "json", "--out", str(out), "--jobs", "1"])
        assert code == 0
        records = [json.loads(line) for line in out.read_text().splitlines()]
        assert {r["identity_id"] for r in records} == {
            "eq1", "theorem1_direct", "theorem1_inversion", "midpoint",
            "geometric_mean", "farey_product", "psi_lcm", "sine_lcm",
            "sine_cyclotomic",
        }
        assert all(r["pass"] for r in records)

    def test_farey_below_domain_is_usage_error(self):
        assert run_main(["verify", "farey_product", "--N", "1"]) == 2

    def test_unknown_identity_is_usage_error(self):
        assert run_main(["verify", "bogus", "--n-max", "4"]) == 2

    def test_json_round_trip_bit_exact(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for path in (a, b):
            assert run_main(["verify", "eq1", "--n-max", "12",
                             "--format", "json", "--out", str(path), "--jobs", "1"]) == 0
        recs_a = [json.loads(line) for line in a.read_text().splitlines()]
        recs_b = [json.loads(line) for line in b.read_text().splitlines()]
        for ra, rb in zip(recs_a, recs_b):
            ra.pop("elapsed_ms")
            rb.pop("elapsed_ms")
            assert ra == rb

    def test_jobs_parallel_matches_serial(self, tmp_path):
        serial, par = tmp_path / "s.json", tmp_path / "p.json"
        args = ["verify", "midpoint", "--n-max", "10", "--format", "json"]
        assert run_main(args + ["--out", str(serial), "--jobs", "1"]) == 0
        assert run_main(args + ["--out", str(par), "--jobs", "2"]) == 0
        strip = lambda lines: [
            {k: v for k, v in json.loads(l).items() if k != "elapsed_ms"}
            for l in lines.splitlines()
        ]
        assert strip(serial.read_text()) == strip(par.read_text())

    def test_csv_column_order(self, tmp_path):
        out = tmp_path / "r.csv"
        assert run_main(["verify", "eq1", "--n-max", "4",
                         "--format", "csv", "--out", str(out), "--jobs", "1"]) == 0
        rows = list(csv.reader(out.read_text().splitlines()))
        assert rows[0] == ["identity_id", "parameter", "prec_bits", "lhs", "rhs",
                           "abs_err", "rel_err", "pass", "elapsed_ms"]
        assert all(row[7] == "true" for row in rows[1:])

    def test_env_precision_override(self, tmp_path, monkeypatch):
        monkeypatch.setenv("GAMMAPROD_PREC", "128")
        out = tmp_path / "e.json"
        assert run_main(["verify", "eq1", "--n-max", "3",
                         "--format", "json", "--out", str(out), "--jobs", "1"]) == 0
        recs = [json.loads(line) for line in out.read_text().splitlines()]
        assert all(r["prec_bits"] == 128 for r in recs)

    def test_digits_converts_to_bits(self, tmp_path):
        out = tmp_path / "d.json"
        assert run_main(["verify", "eq1", "--n-max", "3", "--digits", "50",
                         "--format", "json", "--out", str(out), "--jobs", "1"]) == 0
        recs = [json.loads(line) for line in out.read_text().splitlines()]
        assert all(r["prec_bits"] == 183 for r in recs)  # ceil(50*3.3219)+16


class TestTable:
    def test_phi(self, capsys):
        assert run_main(["table", "phi", "--n-max", "12"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[-1].split() == ["12", "4"]

    def test_cyclotomic(self, capsys):
        assert run_main(["table", "cyclotomic", "--n-max", "6"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[-1] == "6  x^2 - x + 1"

    def test_farey(self, capsys):
        assert run_main(["table", "farey", "--N", "5"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 9
        assert lines[0] == "1/5" and lines[-1] == "4/5"

    def test_lambda_symbolic(self, capsys):
        assert run_main(["table", "lambda", "--n-max", "8"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[7].startswith("8  1*log 2  0.693147180")


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gammaprod.cli", "verify", "psi_lcm", "--N", "20"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "PASS" in proc.stdout

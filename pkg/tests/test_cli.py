from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from zetabound.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_json_certified(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--from", "3", "--to", "50", "--coeff", "0.75",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "certified" and doc["c"] == "0.75"
    cert = tmp_path / "cert.json"
    cert.write_text(out)
    code, out, _ = run(capsys, "verify", "--check-cert", str(cert), "--format", "json")
    assert code == 0
    assert json.loads(out)["checked_status"] == "certified"


def test_verify_output_file_and_csv_payload(capsys, tmp_path):
    js, cs = tmp_path / "c.json", tmp_path / "c.csv"
    assert run(capsys, "verify", "--from", "3", "--to", "12", "--format", "json", "-o", str(js))[0] == 0
    assert run(capsys, "verify", "--from", "3", "--to", "12", "--format", "csv", "-o", str(cs))[0] == 0
    leaves = json.loads(js.read_text())["leaves"]
    rows = list(csv.DictReader(io.StringIO(cs.read_text())))
    assert rows == leaves


def test_verify_falsified_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--from", "2.2", "--to", "2.3", "--coeff", "0.75")
    assert code == 1 and "falsified" in out


def test_verify_inconclusive_exit_code(capsys):
    code, _, _ = run(capsys, "verify", "--from", "2.3912", "--to", "2.5", "--max-depth", "0")
    assert code == 2


def test_optimize_table(capsys):
    code, out, _ = run(capsys, "optimize", "--t0", "1e8", "--k-max", "14", "--m-max", "7",
                       "--a1-max", "30", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert float(doc["ratio_hi"]) <= 0.74982
    assert doc["m"] == 6 and doc["A1"] == "23.0"


def test_backlund(capsys):
    code, out, _ = run(capsys, "backlund", "--m", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert float(doc["threshold_lo"]) <= 49.3851 and float(doc["threshold_hi"]) >= 49.385


def test_backlund_not_found(capsys):
    code, _, err = run(capsys, "backlund", "--m", "2")
    assert code == 1 and "not found" in err


def test_crossing_and_eval(capsys):
    code, out, _ = run(capsys, "crossing", "--coeff", "0.75", "--lo", "2", "--hi", "3", "--format", "csv")
    row = next(csv.DictReader(io.StringIO(out)))
    assert code == 0 and float(row["crossing_lo"]) <= 2.391 <= float(row["crossing_hi"])
    code, out, _ = run(capsys, "eval", "--t", "10", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and float(doc["abs_lo"]) <= 1.3946152133053 <= float(doc["abs_hi"])


def test_expsum_check(capsys):
    code, out, _ = run(capsys, "expsum-check", "--a", "500", "--t", "1e4")
    assert code == 0 and "true" in out
    code, out, _ = run(capsys, "expsum-check", "--random", "3", "--seed", "1", "--format", "csv")
    assert code == 0 and len(out.strip().splitlines()) == 4


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["verify", "--from", "1", "--to", "3"],
    ["verify", "--from", "3", "--to", "abc"],
    ["verify", "--from", "3", "--to", "5", "--coeff", "-1"],
    ["verify", "--from", "3", "--to", "5", "--jobs", "0"],
    ["backlund"],
    ["expsum-check", "--a", "3"],
    ["crossing", "--coeff", "1", "--lo", "3", "--hi", "2"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 64 and err


def test_domain_error_from_module(capsys):
    code, _, err = run(capsys, "expsum-check", "--a", "10", "--t", "3000")
    assert code == 64 and "8*pi*a^2" in err


def test_jobs_environment(capsys, monkeypatch):
    monkeypatch.setenv("ZETABOUND_JOBS", "2")
    code, out, _ = run(capsys, "verify", "--from", "3", "--to", "8", "--format", "json")
    assert code == 0 and json.loads(out)["status"] == "certified"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zetabound", "backlund", "--m", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "49.385" in proc.stdout

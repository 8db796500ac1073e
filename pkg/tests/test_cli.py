import json
import subprocess
import sys

import pytest

from ringlab.concrete import builtin_table_path


def run_cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "ringlab.cli", *args],
        capture_output=True, text=True, cwd=cwd)


@pytest.fixture
def z_matrix(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"ring": "Z", "rows": [["2", "4"], ["6", "8"]]}))
    return path


def test_reduce_writes_verified_certificate(z_matrix, tmp_path):
    out = tmp_path / "cert.json"
    res = run_cli("reduce", str(z_matrix), "--out", str(out))
    assert res.returncode == 0, res.stderr
    assert "D = diag(2, 4)" in res.stdout
    assert "2 | 4" in res.stdout
    cert = json.loads(out.read_text())
    assert cert["verified"] is True
    assert set(cert) >= {"P", "Pinv", "D", "Q", "Qinv", "verified"}


def test_reduce_verify_roundtrip(z_matrix, tmp_path):
    out = tmp_path / "cert.json"
    assert run_cli("reduce", str(z_matrix), "--out", str(out)).returncode == 0
    res = run_cli("reduce", str(z_matrix), "--verify", str(out))
    assert res.returncode == 0
    assert "VERIFIED" in res.stdout


def test_reduce_verify_rejects_tampered(z_matrix, tmp_path):
    out = tmp_path / "cert.json"
    run_cli("reduce", str(z_matrix), "--out", str(out))
    cert = json.loads(out.read_text())
    cert["D"][0][0] = "7"
    tampered = tmp_path / "bad.json"
    tampered.write_text(json.dumps(cert))
    res = run_cli("reduce", str(z_matrix), "--verify", str(tampered))
    assert res.returncode == 3
    assert "REJECTED" in res.stdout


def test_reduce_parse_error_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"ring": "wat:7", "rows": [["1"]]}')
    assert run_cli("reduce", str(bad)).returncode == 2
    bad.write_text("not json")
    assert run_cli("reduce", str(bad)).returncode == 2


def test_reduce_failure_exit_3(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({
        "ring": f"table:{builtin_table_path()}",
        "rows": [["2", "4"], ["0", "0"]],
    }))
    res = run_cli("reduce", str(path))
    assert res.returncode == 3
    assert "irreducible" in res.stderr


def test_reduce_unsupported_ring_exit_5(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"ring": "dualint", "rows": [["1", "0"],
                                                            ["0", "1"]]}))
    assert run_cli("reduce", str(path)).returncode == 5


def test_classify_finite_and_structural(tmp_path):
    out = tmp_path / "r.json"
    res = run_cli("classify", "Zn:12", "--out", str(out))
    assert res.returncode == 0
    rep = json.loads(out.read_text())
    assert rep["predicates"]["feckly_zero_adequate"]["verdict"] is True
    assert rep["predicates"]["clean"]["verdict"] is True
    res = run_cli("classify", "zloc:{3,5}")
    assert res.returncode == 0
    rep = json.loads(res.stdout)
    assert rep["predicates"]["feckly_zero_adequate"]["verdict"] is True
    assert rep["predicates"]["zero_adequate"]["status"] == "asserted_untested"
    res = run_cli("classify", f"table:{builtin_table_path()}")
    rep = json.loads(res.stdout)
    assert rep["predicates"]["bezout"]["verdict"] is False
    assert rep["predicates"]["bezout"]["counterexample"]["ideal"]


def test_classify_exit_codes():
    assert run_cli("classify", "Zn:0x").returncode == 2
    assert run_cli("classify", "Zn:5000").returncode == 4


def test_classify_export_table(tmp_path):
    out = tmp_path / "z6.json"
    res = run_cli("classify", "quot(Zn:12,2)", "--export-table", str(out))
    assert res.returncode == 0
    data = json.loads(out.read_text())
    assert data["size"] == 2 and "add" in data and "mul" in data


def test_adequate_command_variants(tmp_path):
    res = run_cli("adequate", "Z", "12", "10")
    assert res.returncode == 0
    rep = json.loads(res.stdout)
    assert (rep["r"], rep["s"]) == ("3", "4") and rep["clauses_hold"]
    res = run_cli("adequate", "Zn:12", "0", "5", "--variant", "feckly")
    rep = json.loads(res.stdout)
    assert rep["witness"] is not None
    res = run_cli("adequate", "dualint", "12+1/2 x", "10+0 x")
    rep = json.loads(res.stdout)
    assert rep["s"] == "3+1/2 x" and rep["t"] == "4-1/2 x"
    assert run_cli("adequate", "dualint", "0+1/2 x", "10").returncode == 5
    assert run_cli("adequate", "Z", "0", "5").returncode == 5
    assert run_cli("adequate", "Zn:12", "zzz", "5").returncode == 2


def test_check_theorems_small_corpus(tmp_path):
    corpus = tmp_path / "corpus.json"
    corpus.write_text(json.dumps(["Zn:6", "Zn:7"]))
    out = tmp_path / "report.json"
    res = run_cli("check-theorems", "--corpus", str(corpus),
                  "--checks", "T2.5,E2.10,ZALPHA", "--out", str(out))
    assert res.returncode == 0, res.stderr
    rep = json.loads(out.read_text())
    assert [r["id"] for r in rep["results"]] == ["T2.5", "E2.10", "ZALPHA"]
    assert rep["summary"]["fail"] == 0
    assert "summary:" in res.stderr


def test_case_study_command():
    res = run_cli("case-study")
    assert res.returncode == 0
    rep = json.loads(res.stdout)
    assert rep["divisible_pair_ideal"] == "(1-x)"


def test_unknown_flag_rejected(z_matrix):
    res = run_cli("reduce", str(z_matrix), "--bogus")
    assert res.returncode == 2


def test_strategy_ring_mismatch_exit_5(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"ring": "Zn:6", "rows": [["1", "2"],
                                                         ["3", "4"]]}))
    res = run_cli("reduce", str(path), "--strategy", "euclidean_Z")
    assert res.returncode == 5


def test_reduce_zloc_matrix(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"ring": "zloc:{3,5}",
                                "rows": [["45/2", "3"], ["5", "9/7"]]}))
    res = run_cli("reduce", str(path), "--strategy", "zloc_structural")
    assert res.returncode == 0
    assert "D = diag(" in res.stdout

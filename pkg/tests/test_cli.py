import json

import pytest

from gcdlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_example_pk_cli(capsys, tmp_path):
    out = tmp_path / "pk.csv"
    code, stdout, _ = run_cli(
        capsys, "example-pk", "--p", "2", "--epsilon", "3/5", "--kmax", "4",
        "--out", str(out),
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("k,m,n,")
    assert len(lines) == 5
    assert "all flagged+in-tube: True" in stdout


def test_example_pk_precondition_failure(capsys):
    code, _, err = run_cli(capsys, "example-pk", "--p", "2", "--epsilon", "7/10")
    assert code == 2
    assert "error" in err


def test_lrs_scan_cli_deterministic(capsys, tmp_path):
    cfg = {
        "F": {"terms": [{"coeff": ["0", "1"], "root": "2"}, {"coeff": ["1"], "root": "1"}]},
        "G": {"terms": [{"coeff": ["1"], "root": "2"}, {"coeff": ["1"], "root": "1"}]},
        "epsilon": "3/5",
        "N": 20,
    }
    cfg_path = tmp_path / "scan.json"
    cfg_path.write_text(json.dumps(cfg))
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    code1, _, _ = run_cli(capsys, "lrs-scan", "--config", str(cfg_path), "--out", str(out1))
    code2, _, _ = run_cli(capsys, "lrs-scan", "--config", str(cfg_path), "--out", str(out2))
    assert code1 == code2 == 0
    assert out1.read_bytes() == out2.read_bytes()
    header = out1.read_text().splitlines()[0]
    assert header == "m,n,lhs_logreal,lhs_decimal,threshold_decimal,flagged,cluster_id,notes"


def test_poly_gcd_cli(capsys, tmp_path):
    cfg = {
        "f": "x1 + 1",
        "g": "x2",
        "nvars": 2,
        "S": {"archimedean": True, "primes": [2]},
        "delta": "1/25",
        "count": 8,
    }
    cfg_path = tmp_path / "pg.json"
    cfg_path.write_text(json.dumps(cfg))
    out = tmp_path / "pg.csv"
    code, stdout, _ = run_cli(
        capsys, "poly-gcd", "--config", str(cfg_path), "--out", str(out), "--seed", "7"
    )
    assert code == 0
    assert out.read_text().splitlines()[0].startswith("index,u,")
    assert "exceptional-set candidates" in stdout


def test_sharpness_cli(capsys, tmp_path):
    out = tmp_path / "sh.csv"
    code, stdout, _ = run_cli(
        capsys, "sharpness", "--p", "2", "--delta", "1/5", "--trials", "2",
        "--out", str(out),
    )
    assert code == 0
    assert "window-certified" in stdout


def test_rec1_cli(capsys, tmp_path):
    cfg = {
        "F": {"terms": [{"coeff": ["1"], "root": "2"}, {"coeff": ["-1"], "root": "3"}]},
        "place": 5,
        "epsilon": "1/10",
        "N": 100,
    }
    cfg_path = tmp_path / "r1.json"
    cfg_path.write_text(json.dumps(cfg))
    code, stdout, _ = run_cli(capsys, "rec1-scan", "--config", str(cfg_path), "--out", "-")
    assert code == 0


def test_unit_eq_cli_and_truncation(capsys, tmp_path):
    code, stdout, _ = run_cli(
        capsys, "unit-eq", "--primes", "2,3", "--n", "1", "--bound", "1",
        "--out", str(tmp_path / "ue.csv"),
    )
    assert code == 0
    assert "9 nondegenerate" in stdout
    cfg = {"primes": [2, 3, 5], "n": 2, "bound": 2, "budget": 50}
    cfg_path = tmp_path / "ue.json"
    cfg_path.write_text(json.dumps(cfg))
    code, stdout, _ = run_cli(
        capsys, "unit-eq", "--config", str(cfg_path), "--out", str(tmp_path / "ue2.csv")
    )
    assert code == 3
    assert "TRUNCATED" in stdout


def test_bad_config_is_precondition_failure(capsys, tmp_path):
    cfg_path = tmp_path / "bad.json"
    cfg_path.write_text(json.dumps({"epsilon": "1/2"}))
    code, _, err = run_cli(capsys, "lrs-scan", "--config", str(cfg_path))
    assert code == 2

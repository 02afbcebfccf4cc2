"""CLI tests: exit codes, JSON I/O, and byte-identical determinism."""

import json

import numpy as np
import pytest

from modnorm import (
    MatrixFormatError,
    canonical_json,
    load_matrix,
    matrix_from_json,
    matrix_to_json,
    save_matrix,
)
from modnorm.cli import main


def _write(tmp_path, name, m):
    path = tmp_path / name
    save_matrix(np.asarray(m, dtype=complex), path)
    return str(path)


@pytest.fixture
def mats(tmp_path):
    e11 = np.diag([1.0, 0.0])
    e22 = np.diag([0.0, 1.0])
    a4 = np.zeros((4, 4))
    a4[0, 0] = a4[2, 2] = 1.0
    b4 = np.zeros((4, 4))
    b4[1, 0] = b4[3, 2] = 1.0
    return {
        "e11": _write(tmp_path, "e11.json", e11),
        "e22": _write(tmp_path, "e22.json", e22),
        "eye": _write(tmp_path, "eye.json", np.eye(2)),
        "a4": _write(tmp_path, "a4.json", a4),
        "b4": _write(tmp_path, "b4.json", b4),
    }


# ---------------------------------------------------------------------------
# serialization round trips
# ---------------------------------------------------------------------------

def test_matrix_round_trip_bit_exact():
    rng = np.random.default_rng(0)
    m = rng.standard_normal((3, 4)) + 1j * rng.standard_normal((3, 4))
    back = matrix_from_json(json.loads(canonical_json(matrix_to_json(m))))
    assert back.dtype == np.complex128
    assert np.array_equal(back, m)  # bit-exact, not merely close


def test_matrix_file_round_trip(tmp_path):
    rng = np.random.default_rng(1)
    m = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    path = tmp_path / "m.json"
    save_matrix(m, path)
    assert np.array_equal(load_matrix(path), m)


@pytest.mark.parametrize(
    "bad",
    [
        "not json at all",
        '{"rows": 2, "cols": 2}',
        '{"rows": 0, "cols": 2, "data": []}',
        '{"rows": 1, "cols": 2, "data": [[[0, 0]]]}',
        '{"rows": 1, "cols": 1, "data": [[[0]]]}',
        '{"rows": 1, "cols": 1, "data": [[["a", 0]]]}',
        '{"rows": 1, "cols": 1, "data": [[[Infinity, 0]]]}',
        "[1, 2, 3]",
    ],
)
def test_malformed_matrix_files(tmp_path, bad):
    path = tmp_path / "bad.json"
    path.write_text(bad, encoding="utf-8")
    with pytest.raises(MatrixFormatError):
        load_matrix(path)


def test_missing_file_raises():
    with pytest.raises(MatrixFormatError):
        load_matrix("/nonexistent/nowhere.json")


# ---------------------------------------------------------------------------
# exit codes
# ---------------------------------------------------------------------------

def test_check_exit_true(mats, capsys):
    assert main(["check", "pythagoras", mats["a4"], mats["b4"]]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["statements"]["definition"]["verdict"] is True


def test_check_exit_false(mats, capsys):
    assert main(["check", "triangle", mats["e11"], mats["e22"]]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["statements"]["norm_sum"]["verdict"] is False


def test_check_exit_hypothesis(mats, capsys):
    assert main(["check", "pythagoras-identity", mats["eye"], mats["eye"]]) == 2
    assert "hypothesis" in capsys.readouterr().err


def test_check_exit_input_error(tmp_path, mats, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    assert main(["check", "triangle", str(bad), mats["e11"]]) == 3
    assert main(["check", "triangle", mats["e11"]]) == 3  # missing second matrix
    assert main(["check", "triangle", mats["e11"], mats["a4"]]) == 3  # shape mismatch
    capsys.readouterr()


def test_boolean_checks(mats, capsys):
    assert main(["check", "bj", mats["e11"], mats["e22"]]) == 0
    assert main(["check", "roberts", mats["eye"], mats["eye"]]) == 1
    assert main(["check", "parallelogram", mats["a4"], mats["b4"]]) == 0
    assert main(["check", "product-norm", mats["e11"], mats["e22"]]) == 1
    capsys.readouterr()


def test_min_lambda_command(mats, capsys):
    assert main(["min-lambda", mats["eye"], mats["eye"]]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["value"] == pytest.approx(0.0, abs=1e-7)
    assert out["lambda_star"][0] == pytest.approx(-1.0, abs=1e-5)


def test_numrange_command(mats, capsys):
    assert main(["numrange", mats["e11"], "--angles", "36"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out["angles"]) == 36
    assert max(out["support_values"]) == pytest.approx(1.0, abs=1e-9)


def test_suite_command(mats, tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code = main(["suite", "corner-block", "--seed", "7", "--count", "3", "--out", str(out_path)])
    capsys.readouterr()
    assert code == 0
    report = json.loads(out_path.read_text())
    assert report["failures"] == []
    assert report["seed"] == 7


def test_suite_determinism_byte_identical(tmp_path, capsys):
    p1, p2 = tmp_path / "r1.json", tmp_path / "r2.json"
    args = ["suite", "rank-one", "--seed", "42", "--count", "5"]
    assert main([*args, "--out", str(p1)]) == 0
    assert main([*args, "--out", str(p2)]) == 0
    capsys.readouterr()
    assert p1.read_bytes() == p2.read_bytes()


def test_check_determinism_byte_identical(mats, tmp_path, capsys):
    p1, p2 = tmp_path / "c1.json", tmp_path / "c2.json"
    args = ["check", "pythagoras", mats["a4"], mats["b4"], "--seed", "9"]
    main([*args, "--out", str(p1)])
    main([*args, "--out", str(p2)])
    capsys.readouterr()
    assert p1.read_bytes() == p2.read_bytes()


def test_env_seed(mats, tmp_path, capsys, monkeypatch):
    p1, p2 = tmp_path / "s1.json", tmp_path / "s2.json"
    monkeypatch.setenv("MODNORM_SEED", "321")
    main(["suite", "rank-one", "--count", "3", "--out", str(p1)])
    monkeypatch.delenv("MODNORM_SEED")
    main(["suite", "rank-one", "--seed", "321", "--count", "3", "--out", str(p2)])
    capsys.readouterr()
    report = json.loads(p1.read_text())
    assert report["seed"] == 321
    assert p1.read_bytes() == p2.read_bytes()


def test_invalid_env_seed(mats, monkeypatch):
    monkeypatch.setenv("MODNORM_SEED", "not-a-number")
    with pytest.raises(SystemExit):
        main(["suite", "rank-one", "--count", "2"])


def test_tolerance_flags(mats, capsys):
    # an absurdly loose eps-opt turns the false triangle verdict true
    assert main(["check", "triangle", mats["e11"], mats["e22"], "--eps-opt", "10"]) == 0
    capsys.readouterr()

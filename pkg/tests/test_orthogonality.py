"""Tests for the orthogonality and norm-equality deciders."""

import numpy as np
import pytest

from modnorm import (
    DEFAULT_CONFIG,
    HypothesisViolation,
    evaluate,
    limit_relations_check,
    norm_additivity_report,
    parallelogram_law_check,
    parallelogram_two_imply_third,
    product_norm_check,
    pythagoras_identity,
    pythagoras_orthogonal,
    pythagoras_via_bj_parallelogram,
    pythagoras_witness_vector,
    roberts_check,
    scaled_pythagoras_report,
    spectral_norm,
    triangle_equality,
    triangle_witness,
    unimodular_reduction,
)
from modnorm.orthogonality import scaled_triangle_persistence

CFG = DEFAULT_CONFIG

E11 = np.diag([1.0, 0.0]).astype(complex)
E22 = np.diag([0.0, 1.0]).astype(complex)
FLIP = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)


def _outer(i, j, n=2):
    m = np.zeros((n, n), dtype=complex)
    m[i, j] = 1.0
    return m


def _gate_true_pair():
    """4-dim pair with zero inner product, full rank gate, Pythagoras true."""
    a = _outer(0, 0, 4) + _outer(2, 2, 4)
    b = _outer(1, 0, 4) + _outer(3, 2, 4)
    return a, b


def _gate_false_pair():
    """Zero inner product, gates pass, top norming subspaces disjoint."""
    a = _outer(0, 0, 4) + _outer(2, 2, 4)
    b = _outer(1, 1, 4)
    return a, b


# ---------------------------------------------------------------------------
# triangle equalities
# ---------------------------------------------------------------------------

def test_triangle_equality_true():
    rep = triangle_equality(E11, 2 * E11, CFG)
    assert rep.verdict("norm_sum")
    assert rep.verdict("sum_square_in_range")
    assert rep.verdict("product_in_inner_range")
    assert rep.consistent
    labels = dict(rep.witnesses)
    phi = labels["shared_maximizing_state"]
    assert abs(evaluate(phi, E11)) == pytest.approx(1.0, abs=1e-6)


def test_triangle_equality_false():
    rep = triangle_equality(E11, E22, CFG)
    assert not rep.verdict("norm_sum")
    assert not rep.verdict("sum_square_in_range")
    assert not rep.verdict("product_in_inner_range")
    assert rep.consistent


def test_triangle_equality_random_consistency():
    rng = np.random.default_rng(0)
    for _ in range(15):
        x = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        y = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        assert triangle_equality(x, y, CFG).consistent


def test_scaled_triangle_persistence():
    # equality persists under nonnegative rescaling of an aligned pair
    assert scaled_triangle_persistence(E11, 2 * E11, 0.7, 3.1, CFG)
    with pytest.raises(ValueError):
        scaled_triangle_persistence(E11, E11, -1.0, 1.0, CFG)


def test_unimodular_reduction():
    holds, u, v = unimodular_reduction(E11, E11, 2j, 3j, CFG)
    assert holds
    assert abs(u - 1j) <= 1e-12 and abs(v - 1j) <= 1e-12
    holds, _, _ = unimodular_reduction(E11, 2 * E11, 2j, 3.0, CFG)
    assert not holds
    with pytest.raises(ValueError):
        unimodular_reduction(E11, E11, 0.0, 1.0, CFG)


def test_triangle_witness_exists_iff_equality():
    out = triangle_witness(E11, 3 * E11, CFG)
    assert out is not None
    phi, c = out
    assert abs(evaluate(phi, c.conj().T @ c)) == pytest.approx(1.0, abs=1e-6)
    val = evaluate(phi, c.conj().T @ E11.conj().T @ (3 * E11) @ c)
    assert val.real == pytest.approx(3.0, abs=1e-5)
    assert triangle_witness(E11, E22, CFG) is None


# ---------------------------------------------------------------------------
# norm additivity
# ---------------------------------------------------------------------------

def test_norm_additivity_true():
    rep = norm_additivity_report(np.diag([1.0, 0.5]), np.diag([1.0, 0.3]), CFG)
    assert all(s.verdict for s in rep.statements.values())
    assert rep.consistent
    phi = dict(rep.witnesses)["joint_maximizing_state"]
    assert evaluate(phi, np.diag([1.0, 0.25])).real == pytest.approx(1.0, abs=1e-6)


def test_norm_additivity_false():
    rep = norm_additivity_report(E11, E22, CFG)
    assert not any(s.verdict for s in rep.statements.values())
    assert rep.consistent


def test_norm_additivity_zero_matrix():
    rep = norm_additivity_report(np.zeros((2, 2)), E11, CFG)
    assert all(s.verdict for s in rep.statements.values())
    assert rep.consistent


def test_product_norm_check():
    assert product_norm_check(np.eye(2), E11, CFG) == (True, True)
    assert product_norm_check(E11, E22, CFG) == (False, False)
    rng = np.random.default_rng(1)
    for _ in range(15):
        x = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        y = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        first, second = product_norm_check(x, y, CFG)
        assert first == second


def test_parallelogram_two_imply_third():
    rep = parallelogram_two_imply_third(E11, E11, CFG)
    assert all(s.verdict for s in rep.statements.values())
    assert rep.consistent

    rep = parallelogram_two_imply_third(E11, E22, CFG)
    assert not rep.verdict("parallelogram_at_one")
    assert not rep.verdict("maximizers_meet")
    assert rep.verdict("sum_diff_maximizers_meet")
    assert rep.consistent

    rng = np.random.default_rng(2)
    for _ in range(15):
        x = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        y = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        assert parallelogram_two_imply_third(x, y, CFG).consistent


# ---------------------------------------------------------------------------
# Pythagoras identities
# ---------------------------------------------------------------------------

def test_pythagoras_identity_true():
    x = np.diag([1.0, 1.0]).astype(complex)
    y = np.diag([0.0, 1j])
    rep = pythagoras_identity(x, y, CFG)
    for label in ("pythagoras", "sum_in_range", "zero_real_joint_state", "decomposed"):
        assert rep.verdict(label), label
    assert rep.verdict("scaled_lower_bound")
    assert rep.consistent
    phi = dict(rep.witnesses)["zero_real_joint_state"]
    re_inner = (x.conj().T @ y + (x.conj().T @ y).conj().T) / 2
    assert abs(evaluate(phi, re_inner)) <= 1e-5


def test_pythagoras_identity_false():
    rep = pythagoras_identity(E11, 1j * E22, CFG)
    for label in ("pythagoras", "sum_in_range", "zero_real_joint_state", "decomposed"):
        assert not rep.verdict(label), label
    assert rep.consistent


def test_pythagoras_identity_hypothesis():
    with pytest.raises(HypothesisViolation):
        pythagoras_identity(np.eye(2), np.eye(2), CFG)


def test_scaled_pythagoras_true():
    # shared-column rank ones: || alpha x + beta y ||^2 = |alpha|^2 + |beta|^2
    x = _outer(0, 0)
    y = _outer(1, 0)
    rep = scaled_pythagoras_report(x, y, CFG)
    assert all(s.verdict for s in rep.statements.values())
    assert "scaled_any_ratio" in rep.statements  # inner product is exactly zero
    assert rep.consistent


def test_scaled_pythagoras_false():
    rep = scaled_pythagoras_report(E11, 1j * E22, CFG)
    for label in ("pythagoras", "scaled_real_ratio", "modulus_product_norm", "maximizer_equality"):
        assert not rep.verdict(label), label
    assert rep.consistent


def test_scaled_pythagoras_hypothesis():
    with pytest.raises(HypothesisViolation):
        scaled_pythagoras_report(np.eye(2), np.eye(2), CFG)


# ---------------------------------------------------------------------------
# lattice-quantified orthogonality
# ---------------------------------------------------------------------------

def test_roberts_check():
    # diag(1,-1) vs the flip: conjugation by diag(1,-1) maps x+ly to x-ly
    assert roberts_check(np.diag([1.0, -1.0]), FLIP, CFG)
    assert not roberts_check(np.eye(2), np.eye(2), CFG)


def test_parallelogram_law_check():
    a, b = _gate_true_pair()
    assert parallelogram_law_check(a, b, CFG)
    assert not parallelogram_law_check(E11, E22, CFG)


def test_pythagoras_witness_vector():
    a, b = _gate_true_pair()
    xi = pythagoras_witness_vector(a, b, CFG)
    assert xi is not None
    assert np.linalg.norm(xi) == pytest.approx(1.0, abs=1e-9)
    assert np.linalg.norm(a @ xi) == pytest.approx(spectral_norm(a), abs=1e-6)
    assert np.linalg.norm(b @ xi) == pytest.approx(spectral_norm(b), abs=1e-6)
    assert abs(np.vdot(a @ xi, b @ xi)) <= 1e-5

    a2, b2 = _gate_false_pair()
    assert pythagoras_witness_vector(a2, b2, CFG) is None


def test_pythagoras_orthogonal_true():
    a, b = _gate_true_pair()
    rep = pythagoras_orthogonal(a, b, CFG)
    assert rep.verdict("definition")
    assert rep.verdict("rank_gate") and rep.verdict("positivity_gate")
    assert rep.verdict("witness_form")
    for label in ("roberts", "parallelogram", "bj_forward", "bj_reverse"):
        assert rep.verdict(label), label
    assert rep.verdict("symmetric") and rep.verdict("homogeneous")
    assert rep.consistent
    xi = dict(rep.witnesses)["norming_vector"]
    assert abs(np.vdot(a @ xi, b @ xi)) <= 1e-5


def test_pythagoras_orthogonal_false():
    a, b = _gate_false_pair()
    rep = pythagoras_orthogonal(a, b, CFG)
    assert not rep.verdict("definition")
    assert rep.verdict("rank_gate") and rep.verdict("positivity_gate")
    assert not rep.verdict("witness_form")
    assert rep.consistent


def test_pythagoras_orthogonal_rank_gate_blocks_witness_clause():
    # shared-column rank ones stay rank one at every shift: rank gate fails,
    # so the witness-form equivalence is not asserted even though the
    # definition holds
    rep = pythagoras_orthogonal(_outer(0, 0), _outer(1, 0), CFG)
    assert rep.verdict("definition")
    assert not rep.verdict("rank_gate")
    assert "witness_form" not in rep.statements
    assert rep.consistent


def test_pythagoras_via_bj_parallelogram():
    both = pythagoras_via_bj_parallelogram(np.zeros((2, 2)), 1j * np.eye(2), CFG)
    assert both == (True, True)
    both = pythagoras_via_bj_parallelogram(E11, 1j * np.eye(2), CFG)
    assert both == (False, False)
    with pytest.raises(HypothesisViolation):
        pythagoras_via_bj_parallelogram(E11, E11, CFG)  # |y|^2 not scalar


def test_limit_relations_check():
    a, b = _gate_true_pair()
    lam0 = -0.5
    ok, violation = limit_relations_check(a, b, lam0, 1.0, 1.0, 1.0, 0.0, CFG)
    assert ok
    assert violation <= 1e-6

    # perturbing the limit triple breaks the relations
    ok, _ = limit_relations_check(a, b, lam0, 1.0, 1.0, 1.0, 0.3, CFG)
    assert not ok

    with pytest.raises(ValueError):
        limit_relations_check(a, b, 0.0, 1.0, 1.0, 1.0, 0.0, CFG)
    with pytest.raises(ValueError):
        limit_relations_check(a, b, -1.0, 1.0, 1.0, 1.0, 0.0, CFG)
    with pytest.raises(ValueError):
        limit_relations_check(a, b, -0.5, 0.0, 1.0, 1.0, 0.0, CFG)
    with pytest.raises(HypothesisViolation):
        limit_relations_check(np.eye(2), np.eye(2), -0.5, 1.0, 1.0, 1.0, 0.0, CFG)


def test_reports_serialize():
    rep = triangle_equality(E11, E22, CFG)
    d = rep.to_dict()
    assert d["pair_id"] == "triangle"
    assert set(d) == {"pair_id", "consistent", "statements", "witness_labels"}
    for entry in d["statements"].values():
        assert set(entry) == {"verdict", "residual"}


def test_shape_mismatch():
    with pytest.raises(ValueError):
        triangle_equality(np.eye(2), np.eye(3), CFG)

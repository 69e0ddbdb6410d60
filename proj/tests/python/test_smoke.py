"""Smoke tests for the Python bindings: one happy path per exported call."""

import numpy as np
import pytest

import paulikit


def test_compose_single_z():
    p = paulikit.compose("Z")
    assert p.qubits == 1
    assert p.dim == 2
    np.testing.assert_array_equal(p.columns, [0, 1])
    np.testing.assert_array_equal(p.entries, [1.0 + 0.0j, -1.0 + 0.0j])
    assert p.real_valued


def test_compose_matches_kronecker():
    for label in ("X", "ZY", "IXZ", "YXIZ"):
        dense = paulikit.compose(label).to_dense()
        np.testing.assert_allclose(dense, paulikit.kron_naive(label), atol=0)
        np.testing.assert_allclose(dense, paulikit.kron_mixed(label), atol=0)
        np.testing.assert_allclose(dense, paulikit.kron_tree(label), atol=0)


def test_compose_weight_scales_entries():
    p = paulikit.compose("Y", 2.0j)
    np.testing.assert_allclose(p.entries, [2.0, -2.0])


def test_diagonal_composer_agrees():
    full = paulikit.compose("ZIZ", 0.5).to_dense()
    diag = paulikit.compose_diagonal("ZIZ", 0.5).to_dense()
    np.testing.assert_array_equal(full, diag)


def test_decompose_round_trip():
    rng = np.random.default_rng(7)
    h = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    result = paulikit.decompose(h)
    assert result.qubits == 3
    assert result.matrix_class == "nonhermitian"
    assert result.evaluated == 64
    back = paulikit.recompose(result.terms)
    np.testing.assert_allclose(back, h, atol=1e-10)


def test_decompose_diagonal_shortcut():
    result = paulikit.decompose(np.diag([1.0, -1.0, -1.0, 1.0]))
    assert result.matrix_class == "diagonal"
    assert result.evaluated == 4
    assert result.terms == {"ZZ": pytest.approx(1.0)}


def test_classify():
    assert paulikit.classify(np.eye(4)) == "diagonal"
    assert paulikit.classify(np.array([[0, 1], [1, 0]], dtype=float)) == "symmetric"


def test_pauli_coefficient():
    h = np.diag([1.0, -1.0])
    assert paulikit.pauli_coefficient(h, "Z") == pytest.approx(1.0)
    assert paulikit.pauli_coefficient(h, "I") == pytest.approx(0.0)


def test_build_weighted_sum():
    m = paulikit.build_weighted_sum([("X", 1.0), ("Z", 0.5)]).to_dense()
    np.testing.assert_allclose(m, np.array([[0.5, 1.0], [1.0, -0.5]]), atol=0)


def test_build_ising():
    diagonal = paulikit.build_ising([1.0, 2.0], [(0, 1, 3.0)])
    np.testing.assert_allclose(diagonal, [6.0, -4.0, -2.0, 0.0])


def test_pauli_exponential_unitary():
    u = paulikit.pauli_exponential(0.3, "XY").to_dense()
    np.testing.assert_allclose(u @ u.conj().T, np.eye(4), atol=1e-12)


def test_errors_surface_as_python_exceptions():
    with pytest.raises(paulikit.PauliError):
        paulikit.compose("Q")
    with pytest.raises(paulikit.PauliError):
        paulikit.decompose(np.zeros((3, 3)))

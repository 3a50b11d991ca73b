import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thermwerner.exceptions import DomainError, ValidationError
from thermwerner.linalg import eigh, frobenius_dist, mat_fn, matmul, sqrtm_psd, trace
from thermwerner.states import ModelParams, hamiltonian

from conftest import random_hermitian


def test_identity_spectrum():
    values, vectors = eigh(np.eye(4))
    np.testing.assert_allclose(values, [1, 1, 1, 1])
    np.testing.assert_allclose(vectors.conj().T @ vectors, np.eye(4), atol=1e-12)


def test_diagonal_sorted_descending():
    np.testing.assert_allclose(eigh(np.diag([3.0, 1.0, 2.0, 0.0])).values, [3, 2, 1, 0])


def test_hamiltonian_spectrum():
    # middle block [[-2,4],[4,-2]] -> -2 +/- 4; corners 2J+2B = 4 and 2J-2B = 0
    np.testing.assert_allclose(eigh(hamiltonian(ModelParams(1.0, 1.0))).values, [4, 2, 0, -6], atol=1e-12)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 8, 16])
def test_random_hermitian_against_lapack(rng, n):
    for _ in range(10):
        m = random_hermitian(rng, n)
        values, v = eigh(m)
        assert np.linalg.norm(v @ np.diag(values) @ v.conj().T - m) < 1e-10
        assert np.linalg.norm(v.conj().T @ v - np.eye(n)) < 1e-10
        np.testing.assert_allclose(values, np.linalg.eigvalsh(m)[::-1], atol=1e-10)
        assert abs(values.sum() - np.trace(m).real) < 1e-10


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1), st.floats(min_value=1e-6, max_value=1e6))
def test_reconstruction_property(seed, scale):
    m = scale * random_hermitian(np.random.default_rng(seed), 4)
    values, v = eigh(m)
    assert np.linalg.norm(v @ np.diag(values) @ v.conj().T - m) <= 1e-10 * max(1.0, scale)
    assert np.all(np.diff(values) <= 0)


def test_graded_matrix_keeps_small_eigenvalues():
    # eigenvalues 1 and 1e-12 in a rotated basis
    c, s = np.cos(0.3), np.sin(0.3)
    u = np.array([[c, -s], [s, c]])
    m = u @ np.diag([1.0, 1e-12]) @ u.T
    assert eigh(m).values[1] == pytest.approx(1e-12, rel=1e-3)


def test_deterministic(rng):
    m = random_hermitian(rng, 4)
    a, b = eigh(m), eigh(m)
    assert np.array_equal(a.values, b.values) and np.array_equal(a.vectors, b.vectors)


def test_rejects_non_hermitian():
    with pytest.raises(ValidationError):
        eigh(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(ValidationError):
        eigh(np.array([[1.0 + 1e-6j, 0.0], [0.0, 1.0]]))
    with pytest.raises(ValidationError):
        eigh(np.ones((2, 3)))


def test_mat_fn_cases(rng):
    np.testing.assert_allclose(mat_fn(np.diag([0.0, 1, 4, 9]), np.sqrt), np.diag([0.0, 1, 2, 3]), atol=1e-14)
    m = random_hermitian(rng, 4)
    np.testing.assert_allclose(mat_fn(m, lambda x: x), m, atol=1e-12)
    e = mat_fn(m, np.exp)
    assert abs(trace(e).real - np.exp(eigh(m).values).sum()) < 1e-10 * np.exp(eigh(m).values).sum()
    assert np.max(np.abs(e - e.conj().T)) < 1e-12


def test_mat_fn_boltzmann_spectrum():
    h = hamiltonian(ModelParams(1.0, 0.0))
    out = mat_fn(h, lambda x: np.exp(-x))
    np.testing.assert_allclose(np.sort(np.linalg.eigvalsh(out)), np.sort([np.e**6, np.e**-2, np.e**-2, np.e**-2]), rtol=1e-12)


def test_sqrt_domain():
    np.testing.assert_allclose(sqrtm_psd(np.diag([4.0, -1e-12])), np.diag([2.0, 0.0]))
    with pytest.raises(DomainError):
        sqrtm_psd(np.diag([1.0, -1e-6]))
    with pytest.raises(DomainError):
        mat_fn(np.diag([1.0, -1.0]), np.log)


def test_products_and_traces(rng):
    m = random_hermitian(rng, 4)
    assert trace(np.eye(4)) == 4
    np.testing.assert_array_equal(matmul(m, np.eye(4)), m)
    assert frobenius_dist(m, m) == 0.0
    assert abs(trace(m).imag) < 1e-12
    with pytest.raises(ValidationError):
        matmul(np.eye(2), np.eye(3))
    with pytest.raises(ValidationError):
        frobenius_dist(np.eye(2), np.eye(3))
    with pytest.raises(ValidationError):
        trace(np.ones((2, 3)))

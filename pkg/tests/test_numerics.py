import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixsim.errors import NonHermitian, NotPSD
from mixsim.numerics import herm_eig, kron, mat_sqrt_psd, trace_norm
from oracles import random_density

X = np.array([[0, 1], [1, 0]])
Z = np.diag([1, -1])

# partial transpose of |Phi+><Phi+| on qubit 1, worked out by hand
BELL_PT = 0.5 * np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])


def _kron_loops(a, b):
    ra, ca = a.shape
    rb, cb = b.shape
    out = np.zeros((ra * rb, ca * cb), dtype=complex)
    for i in range(ra):
        for j in range(ca):
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k, j * cb + l] = a[i, j] * b[k, l]
    return out


def test_kron_examples():
    np.testing.assert_array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))
    np.testing.assert_array_equal(kron(np.diag([1, 0]), np.diag([0, 1])), np.diag([0, 1, 0, 0]))
    expected = [[0, 0, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, -1, 0, 0]]
    np.testing.assert_array_equal(kron(X, Z), expected)


def test_kron_matches_index_definition(rng):
    a = rng.normal(size=(2, 3)) + 1j * rng.normal(size=(2, 3))
    b = rng.normal(size=(3, 2)) + 1j * rng.normal(size=(3, 2))
    np.testing.assert_allclose(kron(a, b), _kron_loops(a, b), atol=0)


def test_kron_associative(rng):
    for _ in range(20):
        a, b, c = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)) for _ in range(3))
        assert np.max(np.abs(kron(kron(a, b), c) - kron(a, kron(b, c)))) <= 1e-12


@pytest.mark.parametrize(
    "h, expected",
    [
        (Z, [-1, 1]),
        (BELL_PT, [-0.5, 0.5, 0.5, 0.5]),
        (np.eye(4) / 4, [0.25] * 4),
    ],
)
def test_herm_eig_examples(h, expected):
    w, v = herm_eig(h)
    np.testing.assert_allclose(w, expected, atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(dim=st.integers(1, 32), seed=st.integers(0, 2**32 - 1))
def test_herm_eig_reconstruction(dim, seed):
    rng = np.random.default_rng(seed)
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    h = g + g.conj().T
    w, v = herm_eig(h)
    assert np.all(np.diff(w) >= 0)
    assert np.max(np.abs(v @ np.diag(w) @ v.conj().T - h)) <= 1e-10
    assert np.max(np.abs(v.conj().T @ v - np.eye(dim))) <= 1e-10


def test_herm_eig_rejects_non_hermitian():
    with pytest.raises(NonHermitian):
        herm_eig(np.array([[0, 1], [0, 0]]))


def test_mat_sqrt_examples():
    np.testing.assert_allclose(mat_sqrt_psd(np.eye(3)), np.eye(3), atol=1e-12)
    np.testing.assert_allclose(mat_sqrt_psd(np.diag([4, 9])), np.diag([2, 3]), atol=1e-12)
    plus = np.full((2, 2), 0.5)
    np.testing.assert_allclose(mat_sqrt_psd(plus), plus, atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(dim=st.integers(1, 16), rank=st.integers(1, 16), seed=st.integers(0, 2**32 - 1))
def test_mat_sqrt_squares_back(dim, rank, seed):
    rng = np.random.default_rng(seed)
    g = rng.normal(size=(rank, dim)) + 1j * rng.normal(size=(rank, dim))
    h = g.conj().T @ g
    s = mat_sqrt_psd(h)
    assert np.max(np.abs(s - s.conj().T)) <= 1e-10
    assert herm_eig(s).eigenvalues[0] >= -1e-10
    assert np.max(np.abs(s @ s - h)) <= 1e-8


def test_mat_sqrt_clamps_roundoff_negatives():
    s = mat_sqrt_psd(np.diag([1.0, -5e-11]))
    np.testing.assert_allclose(s, np.diag([1.0, 0.0]), atol=0)


def test_mat_sqrt_rejects_indefinite():
    with pytest.raises(NotPSD):
        mat_sqrt_psd(np.diag([1.0, -1e-6]))


def test_trace_norm_examples(rng):
    assert trace_norm(random_density(rng, 3)) == pytest.approx(1.0, abs=1e-12)
    assert trace_norm(Z) == pytest.approx(2.0)
    assert trace_norm(BELL_PT) == pytest.approx(2.0, abs=1e-12)

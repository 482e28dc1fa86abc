"""Dense complex matrix kernels shared by the rest of the package."""

from typing import NamedTuple

import numpy as np

from mixsim.errors import NonHermitian, NotPSD

HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-10


class Spectrum(NamedTuple):
    """Eigen-decomposition of a Hermitian matrix.

    ``eigenvalues`` are sorted ascending and ``eigenvectors[:, i]`` belongs
    to ``eigenvalues[i]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def kron(a, b) -> np.ndarray:
    """Kronecker product, ``out[i*rb + k, j*cb + l] = a[i, j] * b[k, l]``."""
    a = np.atleast_2d(np.asarray(a, dtype=complex))
    b = np.atleast_2d(np.asarray(b, dtype=complex))
    ra, ca = a.shape
    rb, cb = b.shape
    return (a[:, None, :, None] * b[None, :, None, :]).reshape(ra * rb, ca * cb)


def _check_hermitian(h: np.ndarray, tol: float = HERMITIAN_TOL) -> np.ndarray:
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise NonHermitian(f"expected a square matrix, got shape {h.shape}")
    dev = np.max(np.abs(h - h.conj().T)) if h.size else 0.0
    if dev > tol:
        raise NonHermitian(f"matrix is not Hermitian: max |h - h^dagger| = {dev:.3e}")
    return h


def herm_eig(h, tol: float = HERMITIAN_TOL) -> Spectrum:
    """Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix.

    Raises:
        NonHermitian: if ``max|h - h^dagger| > tol``.
    """
    h = _check_hermitian(h, tol)
    # LAPACK reads one triangle only; symmetrize so both halves count.
    w, v = np.linalg.eigh(0.5 * (h + h.conj().T))
    return Spectrum(w, v)


def mat_sqrt_psd(h) -> np.ndarray:
    """Principal square root of a positive semidefinite Hermitian matrix.

    Eigenvalues in ``[-1e-10, 0)`` are treated as roundoff and clamped to 0,
    as are positive eigenvalues below the numerical-rank cutoff
    ``dim * eps * max|lambda|`` (their square roots would otherwise inject
    errors of order ``sqrt(eps)``).

    Raises:
        NonHermitian: if the input is not Hermitian.
        NotPSD: if an eigenvalue is below ``-1e-10``.
    """
    w, v = herm_eig(h)
    if w.size and w[0] < -PSD_TOL:
        raise NotPSD(f"matrix has eigenvalue {w[0]:.3e} < -{PSD_TOL:g}")
    cutoff = w.size * np.finfo(float).eps * np.max(np.abs(w), initial=0.0)
    root = np.sqrt(np.where(w > cutoff, w, 0.0))
    return (v * root) @ v.conj().T


def trace_norm(a) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    w, _ = herm_eig(a)
    return float(np.sum(np.abs(w)))

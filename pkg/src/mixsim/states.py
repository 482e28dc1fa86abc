"""Pure and mixed state construction.

Density matrices are plain ``complex`` numpy arrays of shape ``(2**N, 2**N)``.
Constructors in this module only produce valid ones; matrices coming from
outside the package go through :func:`validate_density`.
"""

from typing import Sequence

import numpy as np

from mixsim.errors import (
    BadDimension,
    DimensionMismatch,
    NonHermitian,
    NotNormalized,
    NotPSD,
    OutOfRange,
    TraceNotOne,
    WeightError,
)
from mixsim.numerics import herm_eig

DENSITY_TOL = 1e-10
NORM_TOL = 1e-8
WEIGHT_TOL = 1e-10


def n_qubits(dim: int) -> int:
    """Number of qubits for a Hilbert space of dimension ``dim``."""
    n = int(dim).bit_length() - 1
    if dim < 2 or 2**n != dim:
        raise BadDimension(f"dimension {dim} is not a power of two >= 2")
    return n


def ket(index: int, n_qubits: int) -> np.ndarray:
    """Computational basis vector ``|index>`` on ``n_qubits`` qubits."""
    if n_qubits < 1 or not 0 <= index < 2**n_qubits:
        raise OutOfRange(f"basis index {index} out of range for {n_qubits} qubits")
    psi = np.zeros(2**n_qubits, dtype=complex)
    psi[index] = 1.0
    return psi


def state(psi) -> np.ndarray:
    """Projector ``|psi><psi|`` of a normalised state vector."""
    psi = np.asarray(psi, dtype=complex).ravel()
    n_qubits(psi.size)
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > NORM_TOL:
        raise NotNormalized(f"state vector has norm {norm:.12g}")
    return np.outer(psi, psi.conj())


def mix_states(weights: Sequence[float], states: Sequence[np.ndarray]) -> np.ndarray:
    """Convex combination ``sum_i w_i rho_i``.

    Weights must be non-negative and sum to one within 1e-10; they are not
    renormalised.
    """
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1 or len(w) != len(states) or len(w) == 0:
        raise WeightError(f"need one weight per state, got {w.size} for {len(states)}")
    if np.any(w < 0):
        raise WeightError(f"negative mixture weight in {w.tolist()}")
    if abs(w.sum() - 1.0) > WEIGHT_TOL:
        raise WeightError(f"mixture weights sum to {w.sum():.12g}, not 1")
    shapes = {np.shape(s) for s in states}
    if len(shapes) != 1:
        raise DimensionMismatch(f"states have differing shapes {sorted(shapes)}")
    out = np.zeros(np.shape(states[0]), dtype=complex)
    for wi, rho in zip(w, states):
        out += wi * np.asarray(rho, dtype=complex)
    return out


def maximally_mixed(n_qubits: int) -> np.ndarray:
    d = 2**n_qubits
    return np.eye(d, dtype=complex) / d


def noisy_state(rho0, p: float) -> np.ndarray:
    """Depolarizing mixture ``(1 - p) rho0 + p I/d``."""
    if not 0.0 <= p <= 1.0:
        raise OutOfRange(f"noise level p={p} outside [0, 1]")
    rho0 = np.asarray(rho0, dtype=complex)
    d = rho0.shape[0]
    return (1.0 - p) * rho0 + p * np.eye(d, dtype=complex) / d


def validate_density(rho, tol: float = DENSITY_TOL) -> np.ndarray:
    """Check that ``rho`` is a density matrix and return it as a complex array.

    Raises:
        BadDimension: not square, or side not a power of two.
        NonHermitian: ``max|rho - rho^dagger| > tol``.
        TraceNotOne: ``|tr rho - 1| > tol``.
        NotPSD: smallest eigenvalue below ``-tol``.
    """
    rho = np.array(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise BadDimension(f"density matrix must be square, got shape {rho.shape}")
    n_qubits(rho.shape[0])
    dev = np.max(np.abs(rho - rho.conj().T))
    if dev > tol:
        raise NonHermitian(f"density matrix is not Hermitian (deviation {dev:.3e})")
    tr = np.trace(rho)
    if abs(tr - 1.0) > tol:
        raise TraceNotOne(f"density matrix trace is {tr.real:.12g}{tr.imag:+.3g}j")
    lam_min = herm_eig(rho, tol=tol).eigenvalues[0]
    if lam_min < -tol:
        raise NotPSD(f"density matrix has negative eigenvalue {lam_min:.3e}")
    return rho


def purity(rho) -> float:
    """``tr(rho^2)``."""
    rho = np.asarray(rho)
    return float(np.real(np.sum(rho * rho.T)))

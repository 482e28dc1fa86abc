"""Entanglement tests and state-comparison measures."""

import numpy as np

from mixsim.errors import DimensionMismatch, LabelError, LengthMismatch, ValidationError
from mixsim.numerics import herm_eig, mat_sqrt_psd, trace_norm
from mixsim.partial_ops import Qubits, as_qubit_set, ptranspose
from mixsim.states import n_qubits

PROB_NEG_TOL = 1e-12
PROB_SUM_TOL = 1e-10
NEGATIVITY_AGREEMENT_TOL = 1e-10


def prob_dist(values) -> np.ndarray:
    """Validated probability vector.

    Entries down to ``-1e-12`` are treated as roundoff and set to 0; a total
    that drifted by at most 1e-10 from 1 is renormalised.
    """
    p = np.array(values, dtype=float).ravel()
    if p.size == 0:
        raise ValidationError("empty probability distribution")
    if np.any(p < -PROB_NEG_TOL):
        raise ValidationError(f"negative probability {p.min():.3e}")
    p[p < 0] = 0.0
    total = p.sum()
    if abs(total - 1.0) > PROB_SUM_TOL:
        raise ValidationError(f"probabilities sum to {total:.12g}")
    return p / total


def _proper_bipartition(rho, q: Qubits):
    rho = np.asarray(rho, dtype=complex)
    n = n_qubits(rho.shape[0])
    q = as_qubit_set(q, n)
    if len(q) == 0 or len(q) == n:
        raise LabelError(f"bipartition {q.labels} of {n} qubits must be proper and nonempty")
    return rho, q


def negativity(rho, q: Qubits) -> float:
    """Sum of the magnitudes of the negative eigenvalues of ``rho^T_q``.

    The trace-norm form ``(||rho^T_q||_1 - 1) / 2`` is evaluated as well and
    must agree within 1e-10.
    """
    rho, q = _proper_bipartition(rho, q)
    pt = ptranspose(rho, q)
    w = herm_eig(pt).eigenvalues
    neg = float(np.sum(np.clip(-w, 0.0, None)))
    via_norm = (trace_norm(pt) - 1.0) / 2.0
    if abs(neg - via_norm) > NEGATIVITY_AGREEMENT_TOL:
        raise ValidationError(
            f"negativity formulas disagree: eigenvalue sum {neg:.3e}, trace norm {via_norm:.3e}"
        )
    return neg


def is_ppt(rho, q: Qubits, tol: float = 1e-10) -> bool:
    """True when the partial transpose has no eigenvalue below ``-tol``."""
    rho, q = _proper_bipartition(rho, q)
    return bool(herm_eig(ptranspose(rho, q)).eigenvalues[0] >= -tol)


def fidelity(rho1, rho2) -> float:
    """Uhlmann fidelity ``tr sqrt(sqrt(rho1) rho2 sqrt(rho1))``, clipped to [0, 1]."""
    rho1 = np.asarray(rho1, dtype=complex)
    rho2 = np.asarray(rho2, dtype=complex)
    if rho1.shape != rho2.shape:
        raise DimensionMismatch(f"cannot compare states of shapes {rho1.shape} and {rho2.shape}")
    s = mat_sqrt_psd(rho1)
    inner = s @ rho2 @ s
    inner = 0.5 * (inner + inner.conj().T)
    f = np.trace(mat_sqrt_psd(inner)).real
    return float(np.clip(f, 0.0, 1.0))


def measure_computational(rho) -> np.ndarray:
    """Outcome distribution of measuring every qubit in the computational basis.

    This is the fine-grained measurement of ``Z (x) Z (x) ... (x) Z``: one
    outcome per basis state, ``p[i] = <i|rho|i>``.
    """
    return prob_dist(np.real(np.diagonal(np.asarray(rho))))


def _pair(p1, p2):
    p1 = np.asarray(p1, dtype=float)
    p2 = np.asarray(p2, dtype=float)
    if p1.shape != p2.shape:
        raise LengthMismatch(f"distributions of lengths {p1.size} and {p2.size}")
    return p1, p2


def fidelity_prob(p1, p2) -> float:
    """Bhattacharyya coefficient ``sum_x sqrt(p1(x) p2(x))``."""
    p1, p2 = _pair(p1, p2)
    return float(np.sum(np.sqrt(p1) * np.sqrt(p2)))


def chi_square(p1, p2) -> float:
    """``sum_x (p1(x) - m(x))**2 / m(x)`` with the midpoint ``m = (p1 + p2) / 2``.

    Outcomes with ``m(x) = 0`` contribute nothing.
    """
    p1, p2 = _pair(p1, p2)
    m = 0.5 * (p1 + p2)
    nz = m > 0
    return float(np.sum((p1[nz] - m[nz]) ** 2 / m[nz]))


def trace_distance_prob(p1, p2) -> float:
    """Total variation distance ``(1/2) sum_x |p1(x) - p2(x)|``."""
    p1, p2 = _pair(p1, p2)
    return float(0.5 * np.sum(np.abs(p1 - p2)))

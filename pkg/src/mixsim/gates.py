"""Gates, embedding into N-qubit space, and density-matrix evolution."""

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from mixsim.errors import DimensionMismatch, LabelError, UnknownGate
from mixsim.registers import QubitSet, insertion_table

UNITARY_TOL = 1e-10

_SQ2 = 1.0 / np.sqrt(2.0)

_GATES = {
    "I": np.eye(2),
    "X": np.array([[0, 1], [1, 0]]),
    "Y": np.array([[0, -1j], [1j, 0]]),
    "Z": np.diag([1, -1]),
    "H": _SQ2 * np.array([[1, 1], [1, -1]]),
    "S": np.diag([1, 1j]),
    "T": np.diag([1, np.exp(1j * np.pi / 4)]),
    "CNOT": np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    "SWAP": np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]),
}


def std_gate(name: str, theta: float = None) -> np.ndarray:
    """Textbook gate matrix by name.

    Known names are I, X, Y, Z, H, S, T, CNOT, SWAP and ``phase`` (which needs
    ``theta`` and returns ``diag(1, exp(i theta))``). CNOT uses its first,
    most significant qubit as control.
    """
    key = name.upper()
    if key == "PHASE":
        if theta is None:
            raise UnknownGate("phase gate needs an angle")
        return np.diag([1.0, np.exp(1j * theta)]).astype(complex)
    try:
        return _GATES[key].astype(complex)
    except KeyError:
        raise UnknownGate(f"unknown gate {name!r}") from None


def is_unitary(u, tol: float = UNITARY_TOL) -> bool:
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return bool(np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0]))) <= tol)


def _gate_qubits(u) -> int:
    d = np.shape(u)[0]
    k = d.bit_length() - 1
    if np.ndim(u) != 2 or np.shape(u)[1] != d or d < 2 or 2**k != d:
        raise DimensionMismatch(f"gate must be 2^k x 2^k, got shape {np.shape(u)}")
    return k


def lift(u, targets: Sequence[int], n: int) -> np.ndarray:
    """Embed a k-qubit gate into an n-qubit register.

    ``targets`` lists, in order, which register qubit plays the role of each
    qubit of ``u`` (its first entry receives ``u``'s most significant qubit).
    The order may be non-monotone; every other qubit sees the identity.
    """
    k = _gate_qubits(u)
    targets = [int(t) for t in targets]
    if len(targets) != k:
        raise LabelError(f"{k}-qubit gate given {len(targets)} targets {targets}")
    q = QubitSet.of(targets, n)
    table = insertion_table(q)
    # u's basis word (bits in target order) -> insert word (bits in label order)
    order = np.argsort(targets)
    words = np.array([[(i >> (k - 1 - j)) & 1 for j in range(k)] for i in range(2**k)])
    sorted_word = words[:, order] @ (1 << np.arange(k - 1, -1, -1))
    idx = table[:, sorted_word]
    full = np.zeros((2**n, 2**n), dtype=complex)
    full[idx[:, :, None], idx[:, None, :]] = np.asarray(u, dtype=complex)[None, :, :]
    return full


def controlled(u, n_controls: int = 1) -> np.ndarray:
    """``u`` conditioned on ``n_controls`` leading control qubits all being 1."""
    u = np.asarray(u, dtype=complex)
    d = u.shape[0]
    total = d * 2**n_controls
    out = np.eye(total, dtype=complex)
    out[total - d:, total - d:] = u
    return out


def qft(n: int) -> np.ndarray:
    """Quantum Fourier transform on n qubits, ``F[j, k] = w**(j*k) / sqrt(2**n)``.

    This is the DFT matrix in computational-basis order, i.e. the output
    bit-reversal is already included.
    """
    d = 2**n
    jk = np.outer(np.arange(d), np.arange(d)) % d
    return np.exp(2j * np.pi * jk / d) / np.sqrt(d)


def evolve(gate, rho) -> np.ndarray:
    """``U rho U^dagger``."""
    gate = np.asarray(gate, dtype=complex)
    rho = np.asarray(rho, dtype=complex)
    if gate.shape != rho.shape:
        raise DimensionMismatch(f"gate {gate.shape} does not match state {rho.shape}")
    return gate @ rho @ gate.conj().T


@dataclass
class CircuitSpec:
    """An n-qubit circuit as an ordered list of ``(gate, targets)`` steps."""

    n_qubits: int
    steps: List[Tuple[np.ndarray, Tuple[int, ...]]] = field(default_factory=list)

    def __post_init__(self):
        for u, targets in self.steps:
            self._check_step(u, targets)

    def _check_step(self, u, targets):
        k = _gate_qubits(u)
        if len(targets) != k:
            raise LabelError(f"{k}-qubit gate given targets {tuple(targets)}")
        QubitSet.of(targets, self.n_qubits)

    def append(self, u, targets: Sequence[int]) -> "CircuitSpec":
        targets = tuple(int(t) for t in targets)
        self._check_step(u, targets)
        self.steps.append((np.asarray(u, dtype=complex), targets))
        return self

    def lifted(self):
        """Yield each step as a full ``2**n x 2**n`` unitary."""
        for u, targets in self.steps:
            yield lift(u, targets, self.n_qubits)

    def unitary(self) -> np.ndarray:
        """Product of all steps, first step rightmost."""
        out = np.eye(2**self.n_qubits, dtype=complex)
        for g in self.lifted():
            out = g @ out
        return out

    def run(self, rho) -> np.ndarray:
        """Fold the steps left to right through :func:`evolve`."""
        rho = np.asarray(rho, dtype=complex)
        if rho.shape != (2**self.n_qubits,) * 2:
            raise DimensionMismatch(f"{self.n_qubits}-qubit circuit given state {rho.shape}")
        for g in self.lifted():
            rho = evolve(g, rho)
        return rho

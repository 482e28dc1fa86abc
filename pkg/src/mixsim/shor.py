"""The 7-qubit order-finding circuit for N = 15 and its identity reference.

Layout: qubits 1-3 form the counting register (qubit 1 most significant),
qubits 4-7 the work register holding an integer mod 15.
"""

from math import gcd

import numpy as np

from mixsim.errors import NotCoprime, UnsupportedModulus
from mixsim.gates import CircuitSpec, controlled, qft, std_gate

N_COUNTING = 3
N_WORK = 4
N_QUBITS = N_COUNTING + N_WORK
MODULUS = 15

COUNTING_QUBITS = tuple(range(1, N_COUNTING + 1))
WORK_QUBITS = tuple(range(N_COUNTING + 1, N_QUBITS + 1))


def mod_mult_gate(a: int, modulus: int = MODULUS) -> np.ndarray:
    """Permutation ``|x> -> |a x mod 15>`` on four qubits.

    ``|15>`` is outside the residues and is left fixed.
    """
    if modulus != MODULUS:
        raise UnsupportedModulus(f"only modulus {MODULUS} fits the 4-qubit work register")
    if gcd(a, modulus) != 1:
        raise NotCoprime(f"{a} is not coprime to {modulus}")
    d = 2**N_WORK
    u = np.zeros((d, d), dtype=complex)
    for x in range(d):
        u[(a * x) % modulus if x < modulus else x, x] = 1.0
    return u


def multiplicative_order(a: int, modulus: int = MODULUS) -> int:
    if gcd(a, modulus) != 1:
        raise NotCoprime(f"{a} is not coprime to {modulus}")
    r, x = 1, a % modulus
    while x != 1:
        x = (x * a) % modulus
        r += 1
    return r


def shor_circuit(a: int = 7) -> CircuitSpec:
    """Quantum part of order finding for ``a`` modulo 15.

    1. X on qubit 7, so the work register starts in ``|1>``;
    2. H on each counting qubit;
    3. counting qubit j controls multiplication by ``a**(2**(3 - j)) mod 15``;
    4. inverse QFT on the counting register.
    """
    if not 1 < a < MODULUS:
        raise NotCoprime(f"base a={a} must lie in 2..{MODULUS - 1}")
    if gcd(a, MODULUS) != 1:
        raise NotCoprime(f"{a} is not coprime to {MODULUS}")
    circ = CircuitSpec(N_QUBITS)
    circ.append(std_gate("X"), (N_QUBITS,))
    h = std_gate("H")
    for j in COUNTING_QUBITS:
        circ.append(h, (j,))
    for j in COUNTING_QUBITS:
        power = pow(a, 2 ** (N_COUNTING - j), MODULUS)
        circ.append(controlled(mod_mult_gate(power), 1), (j,) + WORK_QUBITS)
    circ.append(qft(N_COUNTING).conj().T, COUNTING_QUBITS)
    return circ


def trivial_circuit() -> CircuitSpec:
    """The 7-qubit identity circuit (no steps)."""
    return CircuitSpec(N_QUBITS)

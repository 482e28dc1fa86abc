"""Partial transpose and partial trace over arbitrary qubit subsets.

Both operations are driven by the register insertion map of
:func:`mixsim.registers.build_binary_vector`:

* partial transpose:
  ``<a| rho^T_Q |b> = <V(a, b)| rho |V(b, a)>`` where ``V(a, b)`` copies the
  bits of ``b`` on the qubits in Q and the bits of ``a`` elsewhere;
* partial trace:
  ``<a| tr_Q rho |b> = sum_k <W(a, k)| rho |W(b, k)>`` where ``W(a, k)``
  places the word ``k`` on the qubits in Q and ``a`` on the rest.

Note that ``q`` in :func:`ptrace` names the qubits that are traced *out*.
"""

from typing import Iterable, Union

import numpy as np

from mixsim.errors import LabelError
from mixsim.registers import QubitSet, insertion_table, split_index
from mixsim.states import n_qubits

Qubits = Union[QubitSet, Iterable[int]]


def as_qubit_set(q: Qubits, n: int) -> QubitSet:
    if isinstance(q, QubitSet):
        if q.n != n:
            return QubitSet(q.labels, n)
        return q
    return QubitSet.of(q, n)


def ptranspose(rho, q: Qubits) -> np.ndarray:
    """Partial transpose of ``rho`` with respect to the qubits in ``q``.

    The result is Hermitian with unit trace but may have negative
    eigenvalues, so it is returned as a plain matrix.
    """
    rho = np.asarray(rho, dtype=complex)
    q = as_qubit_set(q, n_qubits(rho.shape[0]))
    table = insertion_table(q)
    outer, inner = split_index(q)
    # row word V(a, b) and column word V(b, a) for every (a, b)
    rows = table[outer[:, None], inner[None, :]]
    return rho[rows, rows.T]


def ptrace(rho, q: Qubits) -> np.ndarray:
    """Reduced state on the complement of ``q`` (the qubits in ``q`` are traced out).

    Tracing out every qubit is not supported here; use ``np.trace`` for that.
    """
    rho = np.asarray(rho, dtype=complex)
    n = n_qubits(rho.shape[0])
    q = as_qubit_set(q, n)
    if len(q) == n:
        raise LabelError("cannot trace out every qubit; the result would be the scalar trace")
    w = insertion_table(q)  # w[a, k] = W(a, k)
    return rho[w[:, None, :], w[None, :, :]].sum(axis=-1)


def total_trace(rho) -> complex:
    return complex(np.trace(np.asarray(rho)))


def reduced_state(rho, keep: Qubits) -> np.ndarray:
    """Reduced state on the qubits in ``keep`` (order of labels is ignored)."""
    rho = np.asarray(rho, dtype=complex)
    n = n_qubits(rho.shape[0])
    return ptrace(rho, as_qubit_set(keep, n).complement())

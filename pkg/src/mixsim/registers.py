"""Register notation: basis indices <-> qubit bit vectors.

Conventions used everywhere in the package:

* qubits are labelled 1..N, qubit 1 being the leftmost tensor factor;
* qubit 1 is the most significant bit of a basis index, so
  ``|1> (x) |0> (x) |0>`` is basis state 4 of a 3-qubit register.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from mixsim.errors import LabelError, LengthMismatch, OutOfRange


@dataclass(frozen=True)
class QubitSet:
    """Sorted, duplicate-free set of 1-based qubit labels out of ``n`` qubits."""

    labels: tuple
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise LabelError(f"qubit count must be positive, got {self.n}")
        labels = tuple(self.labels)
        if any(not isinstance(q, (int, np.integer)) for q in labels):
            raise LabelError(f"qubit labels must be integers: {labels}")
        if list(labels) != sorted(set(labels)):
            raise LabelError(f"qubit labels must be strictly increasing: {labels}")
        if labels and (labels[0] < 1 or labels[-1] > self.n):
            raise LabelError(f"qubit labels {labels} outside 1..{self.n}")
        object.__setattr__(self, "labels", tuple(int(q) for q in labels))

    @classmethod
    def of(cls, labels: Iterable[int], n: int) -> "QubitSet":
        """Build from any iterable, sorting it; repeated labels are an error."""
        labels = list(labels)
        if len(set(labels)) != len(labels):
            raise LabelError(f"repeated qubit labels: {labels}")
        return cls(tuple(sorted(labels)), n)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def complement(self) -> "QubitSet":
        return QubitSet(tuple(i for i in range(1, self.n + 1) if i not in self.labels), self.n)


def dec2binvec(d: int, n: int) -> tuple:
    """MSB-first bit vector of length ``n`` for basis index ``d``.

    >>> dec2binvec(3, 4)
    (0, 0, 1, 1)
    """
    if n < 1:
        raise OutOfRange(f"bit count must be positive, got {n}")
    if not 0 <= d < 2**n:
        raise OutOfRange(f"index {d} does not fit in {n} bits")
    return tuple((d >> (n - 1 - i)) & 1 for i in range(n))


def binvec2dec(bits: Sequence[int]) -> int:
    """Inverse of :func:`dec2binvec`."""
    d = 0
    for b in bits:
        d = (d << 1) | int(b)
    return d


def build_binary_vector(base: Sequence[int], insert: Sequence[int], q: QubitSet) -> int:
    """Basis index of the N-bit word that carries ``insert`` on the qubits of ``q``.

    Position ``i`` of the word takes ``insert[j]`` when ``i`` is the j-th label
    of ``q``, otherwise the next unused bit of ``base``. The same insertion
    realises both the partial-trace word W(alpha, k) and the partial-transpose
    word V(alpha, beta).
    """
    if len(insert) != len(q.labels) or len(base) + len(insert) != q.n:
        raise LengthMismatch(
            f"base ({len(base)} bits) + insert ({len(insert)} bits) "
            f"does not match {len(q.labels)} of {q.n} qubits"
        )
    d = 0
    bi = ii = 0
    labels = q.labels
    for pos in range(1, q.n + 1):
        if ii < len(labels) and labels[ii] == pos:
            bit = insert[ii]
            ii += 1
        else:
            bit = base[bi]
            bi += 1
        d = (d << 1) | int(bit)
    return d


@lru_cache(maxsize=256)
def insertion_table(q: QubitSet) -> np.ndarray:
    """``table[b, k] = build_binary_vector(bits(b), bits(k), q)`` for every pair.

    Rows run over the ``2**(N-n)`` words of the qubits outside ``q`` and
    columns over the ``2**n`` words of the qubits in ``q``. The result is
    read-only and cached per ``q``.
    """
    m = q.n - len(q)
    n = len(q)
    bases = [dec2binvec(b, m) if m else () for b in range(2**m)]
    inserts = [dec2binvec(k, n) if n else () for k in range(2**n)]
    table = np.empty((2**m, 2**n), dtype=np.intp)
    for b, base in enumerate(bases):
        for k, ins in enumerate(inserts):
            table[b, k] = build_binary_vector(base, ins, q)
    table.setflags(write=False)
    return table


@lru_cache(maxsize=256)
def split_index(q: QubitSet) -> tuple:
    """For every N-bit index, its (outside-q word, inside-q word) pair.

    Inverse of :func:`insertion_table`: ``table[outer[i], inner[i]] == i``.
    """
    table = insertion_table(q)
    outer = np.empty(2**q.n, dtype=np.intp)
    inner = np.empty(2**q.n, dtype=np.intp)
    b, k = np.indices(table.shape)
    outer[table] = b
    inner[table] = k
    outer.setflags(write=False)
    inner.setflags(write=False)
    return outer, inner

"""Depolarizing-noise sweep over the order-finding and identity circuits.

For every noise level p the initial state ``(1 - p)|0...0><0...0| + p I/d``
is pushed through the circuit, reduced to the measured qubits, and compared
with the p = 0 result of the same circuit.
"""

import csv
import math
from dataclasses import astuple, dataclass
from typing import List, Tuple

from mixsim.analysis import (
    chi_square,
    fidelity,
    fidelity_prob,
    measure_computational,
    trace_distance_prob,
)
from mixsim.errors import ConfigError, LabelError, MixsimError
from mixsim.partial_ops import reduced_state
from mixsim.registers import QubitSet
from mixsim.shor import COUNTING_QUBITS, N_QUBITS, shor_circuit, trivial_circuit
from mixsim.states import ket, noisy_state, state

CSV_HEADER = ("p", "fidelity_density", "fidelity_prob", "chi_square", "trace_distance")
GRID_DECIMALS = 12
# slack for floor() when (end - start) / step lands just below an integer
_GRID_EPS = 1e-9


@dataclass(frozen=True)
class SweepConfig:
    circuit: str = "shor"
    a: int = 7
    p_start: float = 0.0
    p_end: float = 1.0
    p_step: float = 0.01
    measured_qubits: Tuple[int, ...] = COUNTING_QUBITS
    out_path: str = None

    def validate(self) -> None:
        if self.circuit not in ("shor", "trivial"):
            raise ConfigError(f"circuit: expected 'shor' or 'trivial', got {self.circuit!r}")
        for name in ("p_start", "p_end", "p_step"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and 0.0 <= v <= 1.0):
                raise ConfigError(f"{name}: {v!r} is not in [0, 1]")
        if self.p_step <= 0:
            raise ConfigError(f"p_step: must be positive, got {self.p_step}")
        if self.p_start > self.p_end:
            raise ConfigError(f"p_start: {self.p_start} exceeds p_end {self.p_end}")
        if not self.measured_qubits:
            raise ConfigError("measured_qubits: must be nonempty")
        try:
            QubitSet.of(self.measured_qubits, N_QUBITS)
        except LabelError as exc:
            raise ConfigError(f"measured_qubits: {exc}") from None


@dataclass(frozen=True)
class SweepRecord:
    p: float
    fidelity_density: float
    fidelity_prob: float
    chi_square: float
    trace_distance: float


def p_grid(p_start: float, p_end: float, p_step: float) -> List[float]:
    """Inclusive grid ``p_start + i * p_step``, rounded to 12 decimals."""
    count = math.floor((p_end - p_start) / p_step + _GRID_EPS) + 1
    return [round(p_start + i * p_step, GRID_DECIMALS) for i in range(count)]


def build_circuit(config: SweepConfig):
    if config.circuit == "shor":
        try:
            return shor_circuit(config.a)
        except MixsimError as exc:
            raise ConfigError(f"a: {exc}") from None
    return trivial_circuit()


def run_sweep(config: SweepConfig) -> List[SweepRecord]:
    config.validate()
    circuit = build_circuit(config)
    keep = QubitSet.of(config.measured_qubits, N_QUBITS)
    rho0 = state(ket(0, N_QUBITS))

    def reduced_output(p):
        return reduced_state(circuit.run(noisy_state(rho0, p)), keep)

    ideal = reduced_output(0.0)
    ideal_dist = measure_computational(ideal)

    records = []
    for p in p_grid(config.p_start, config.p_end, config.p_step):
        rho = reduced_output(p)
        dist = measure_computational(rho)
        records.append(
            SweepRecord(
                p=p,
                fidelity_density=fidelity(ideal, rho),
                fidelity_prob=fidelity_prob(ideal_dist, dist),
                chi_square=chi_square(ideal_dist, dist),
                trace_distance=trace_distance_prob(ideal_dist, dist),
            )
        )
    return records


def format_value(x: float) -> str:
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def write_csv(records: List[SweepRecord], path) -> None:
    """Write records as UTF-8 CSV with ``\\n`` line endings."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for rec in records:
            w.writerow([format_value(v) for v in astuple(rec)])


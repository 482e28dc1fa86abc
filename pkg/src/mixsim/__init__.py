"""Mixed-state quantum circuit simulation with register-indexed partial operations."""

from mixsim.analysis import (
    chi_square,
    fidelity,
    fidelity_prob,
    is_ppt,
    measure_computational,
    negativity,
    prob_dist,
    trace_distance_prob,
)
from mixsim.gates import CircuitSpec, controlled, evolve, lift, qft, std_gate
from mixsim.numerics import herm_eig, kron, mat_sqrt_psd, trace_norm
from mixsim.partial_ops import ptrace, ptranspose, reduced_state
from mixsim.registers import QubitSet, binvec2dec, build_binary_vector, dec2binvec
from mixsim.shor import mod_mult_gate, shor_circuit, trivial_circuit
from mixsim.states import ket, mix_states, noisy_state, state, validate_density

__version__ = "0.1.0"

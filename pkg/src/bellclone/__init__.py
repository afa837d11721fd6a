"""State-vector simulation of Bell-pair identification and Bell-basis cloning."""

from .bell import (
    BELL_INDICES,
    bell_decode_circuit,
    bell_encode_circuit,
    bell_index_of,
    bell_state,
    origin_bits,
)
from .cloning import (
    UCM_REFERENCE,
    CloneReport,
    IdentificationResult,
    clone,
    clone_circuit,
    identify,
    tag_circuit,
)
from .stateio import StateFileError, read_state_file
from .statevector import (
    Circuit,
    DensityMatrix,
    Gate,
    MeasurementRecord,
    StateVector,
    apply_circuit,
    apply_gate,
    basis_state,
    circuit_unitary,
    cnot,
    fidelity_mixed,
    fidelity_pure,
    hadamard,
    inner_product,
    measure,
    measurement_distribution,
    partial_trace,
    pauli_x,
    pauli_z,
    single_qubit,
    tensor,
)
from .verification import CheckResult, run_all_checks

__all__ = [
    "BELL_INDICES",
    "CheckResult",
    "Circuit",
    "CloneReport",
    "DensityMatrix",
    "Gate",
    "IdentificationResult",
    "MeasurementRecord",
    "StateFileError",
    "StateVector",
    "UCM_REFERENCE",
    "apply_circuit",
    "apply_gate",
    "basis_state",
    "bell_decode_circuit",
    "bell_encode_circuit",
    "bell_index_of",
    "bell_state",
    "circuit_unitary",
    "clone",
    "clone_circuit",
    "cnot",
    "fidelity_mixed",
    "fidelity_pure",
    "hadamard",
    "identify",
    "inner_product",
    "measure",
    "measurement_distribution",
    "origin_bits",
    "partial_trace",
    "pauli_x",
    "pauli_z",
    "read_state_file",
    "run_all_checks",
    "single_qubit",
    "tag_circuit",
    "tensor",
]

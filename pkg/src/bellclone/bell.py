"""The Bell basis and the circuits that move between it and the computational basis.

Indexing follows the usual two-bit labels: index 0 and 2 are the even-parity
pairs (|00> +/- |11>)/sqrt(2), index 1 and 3 the odd-parity pairs
(|01> +/- |10>)/sqrt(2), with the minus sign on indices 2 and 3.  The encode
circuit sends |bin(i)> to the Bell state of index i; decode is its inverse.
"""

from __future__ import annotations

import numpy as np

from .statevector import SQRT1_2, Circuit, StateVector, cnot, fidelity_pure, hadamard

BELL_INDICES = (0, 1, 2, 3)

_BELL_MATCH_THRESHOLD = 1.0 - 1e-10


def bell_state(index: int) -> StateVector:
    """Bell basis element of the given index (0..3)."""
    if index not in BELL_INDICES:
        raise ValueError(f"Bell index must be 0..3, got {index!r}")
    amps = np.zeros(4, dtype=complex)
    if index in (0, 2):
        amps[0] = SQRT1_2
        amps[3] = SQRT1_2 if index == 0 else -SQRT1_2
    else:
        amps[1] = SQRT1_2
        amps[2] = SQRT1_2 if index == 1 else -SQRT1_2
    return StateVector(2, amps)


def origin_bits(index: int) -> str:
    """Two-bit label whose basis state encodes to the Bell state of this index."""
    if index not in BELL_INDICES:
        raise ValueError(f"Bell index must be 0..3, got {index!r}")
    return format(index, "02b")


def bell_encode_circuit() -> Circuit:
    """Maps |bin(i)> to the Bell state of index i: Hadamard on the left qubit, then CNOT."""
    return Circuit(2, (hadamard(0), cnot(0, 1)))


def bell_decode_circuit() -> Circuit:
    """Inverse of bell_encode_circuit: CNOT, then Hadamard on the left qubit."""
    return Circuit(2, (cnot(0, 1), hadamard(0)))


def bell_index_of(state: StateVector) -> int | None:
    """Index of the Bell state this two-qubit state equals up to global phase, else None."""
    if state.num_qubits != 2:
        raise ValueError(f"expected a 2-qubit state, got {state.num_qubits} qubits")
    for index in BELL_INDICES:
        if fidelity_pure(state, bell_state(index)) > _BELL_MATCH_THRESHOLD:
            return index
    return None

"""Nondestructive identification and exact cloning over the Bell basis.

The tagging transform acts on four qubits: an input pair on positions (0, 1)
and two ancillas on (2, 3) prepared in |00>.  When the pair is a Bell basis
element of index i, the transform writes bin(i) onto the ancillas and returns
the pair unchanged.  Measuring the ancillas therefore identifies the pair
without disturbing it, and re-encoding the ancillas produces a second copy.

Both behaviors are special to the four-state orthonormal input alphabet; on a
superposition of Bell states the transform entangles pair and ancillas and the
clone fidelities drop, as the no-cloning bound demands.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bell import bell_decode_circuit, bell_encode_circuit, bell_index_of
from .statevector import (
    Circuit,
    DensityMatrix,
    StateVector,
    apply_circuit,
    basis_state,
    cnot,
    fidelity_mixed,
    hadamard,
    measure,
    partial_trace,
    tensor,
)

# Best clone fidelity any machine can reach on arbitrary unknown qubit
# states; the benchmark our restricted-alphabet cloner is measured against.
UCM_REFERENCE = 5.0 / 6.0


@dataclass(frozen=True, eq=False)
class IdentificationResult:
    """What one identification run produced.

    ``index`` is the Bell index read off the ancillas, ``outcome_bits`` the
    raw two-bit measurement record, ``probability`` its Born probability, and
    ``residual_state`` the pair left behind after the ancillas are measured.
    """

    index: int
    outcome_bits: str
    probability: float
    residual_state: StateVector


@dataclass(frozen=True, eq=False)
class CloneReport:
    """Fidelities of both halves of a cloning run against the original pair.

    ``input_label`` names the input: the Bell index as a string when the pair
    is a basis element, "superposition" otherwise.  The two fidelities compare
    the reduced states on (0, 1) and (2, 3) of ``joint_state`` with the input
    pair.  ``ucm_reference`` restates UCM_REFERENCE for side-by-side reading.
    """

    input_label: str
    joint_state: StateVector
    fidelity_original: float
    fidelity_clone: float
    ucm_reference: float


def tag_circuit() -> Circuit:
    """Four-qubit transform writing a Bell pair's index onto ancillas (2, 3).

    Realized as decode on the pair, CNOT fan-out of both decoded bits onto
    the ancillas, then re-encode: on span{Bell x |00>} this acts exactly as
    the tagging map, and it is unitary everywhere.
    """
    decode = bell_decode_circuit().gates
    encode = bell_encode_circuit().gates
    fanout = (cnot(0, 2), cnot(1, 3))
    return Circuit(4, decode + fanout + encode)


def clone_circuit() -> Circuit:
    """tag_circuit followed by Bell-encoding the ancillas into a second pair."""
    return Circuit(4, tag_circuit().gates + (hadamard(2), cnot(2, 3)))


def identify(pair: StateVector, seed: int) -> IdentificationResult:
    """Identify a Bell pair by tagging ancillas and measuring them.

    The pair goes in on qubits (0, 1) with fresh |00> ancillas on (2, 3).
    For Bell basis input the outcome is deterministic (probability 1) and the
    residual pair equals the input; the seed only matters on superpositions,
    where the Born rule genuinely has something to sample.
    """
    if pair.num_qubits != 2:
        raise ValueError(f"expected a 2-qubit pair, got {pair.num_qubits} qubits")
    joint = apply_circuit(tensor(pair, basis_state("00")), tag_circuit())
    record = measure(joint, (2, 3), seed)
    residual_rows = record.post_state.amplitudes.reshape(4, 4)
    residual = StateVector(2, residual_rows[:, int(record.outcome, 2)])
    return IdentificationResult(
        index=int(record.outcome, 2),
        outcome_bits=record.outcome,
        probability=record.probability,
        residual_state=residual,
    )


def clone(pair: StateVector) -> CloneReport:
    """Run the cloning circuit and score both output pairs against the input.

    Reduced states are compared rather than the joint vector so the report is
    honest on superposition inputs, where the two pairs come out entangled.
    """
    if pair.num_qubits != 2:
        raise ValueError(f"expected a 2-qubit pair, got {pair.num_qubits} qubits")
    joint = apply_circuit(tensor(pair, basis_state("00")), clone_circuit())
    original = partial_trace(joint, (0, 1))
    copy = partial_trace(joint, (2, 3))
    index = bell_index_of(pair)
    return CloneReport(
        input_label="superposition" if index is None else str(index),
        joint_state=joint,
        fidelity_original=fidelity_mixed(original, pair),
        fidelity_clone=fidelity_mixed(copy, pair),
        ucm_reference=UCM_REFERENCE,
    )

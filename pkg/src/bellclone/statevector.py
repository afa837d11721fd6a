"""n-qubit state-vector engine: gates, measurement, partial trace, dense oracle.

Amplitude ordering: index k encodes the ket |q0 q1 ... q_{n-1}>, read left to
right, with qubit 0 the most significant bit of k.  On two qubits |01> sits at
index 1 and |10> at index 2.  Gates address qubits by these positions.

Everything here is a pure function over value-semantic containers: inputs are
never mutated and stored arrays are frozen.  Gate application walks the
amplitude vector with strided index arithmetic; the only dense-matrix code
path is circuit_unitary(), kept separate so it can serve as an independent
cross-check of the strided kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

SQRT1_2 = 1.0 / np.sqrt(2.0)

HADAMARD = np.array([[SQRT1_2, SQRT1_2], [SQRT1_2, -SQRT1_2]], dtype=complex)
PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
for _m in (HADAMARD, PAULI_X, PAULI_Z):
    _m.setflags(write=False)

# Dense unitaries above this size stop being a desk-scale cross-check.
MAX_DENSE_QUBITS = 12

_NORM_ATOL = 1e-12
_HERMITIAN_ATOL = 1e-12
_TRACE_ATOL = 1e-12
_EIGENVALUE_FLOOR = -1e-10
_PROBABILITY_SLACK = 1e-12

_GATE_KINDS = ("hadamard", "pauli_x", "pauli_z", "cnot", "single_qubit")


def _frozen_complex_array(values, shape=None) -> np.ndarray:
    arr = np.array(values, dtype=complex)
    if shape is not None and arr.shape != shape:
        raise ValueError(f"expected array of shape {shape}, got {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalized pure state of ``num_qubits`` qubits."""

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError("num_qubits must be positive")
        amps = _frozen_complex_array(self.amplitudes, shape=(2**self.num_qubits,))
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > _NORM_ATOL:
            raise ValueError(f"state is not normalized: |norm - 1| = {abs(norm - 1.0):.3e}")
        object.__setattr__(self, "amplitudes", amps)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, positive-semidefinite, trace-1 operator on ``num_qubits`` qubits."""

    num_qubits: int
    matrix: np.ndarray

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError("num_qubits must be positive")
        dim = 2**self.num_qubits
        mat = _frozen_complex_array(self.matrix, shape=(dim, dim))
        if not np.all(np.isfinite(mat)):
            raise ValueError("matrix entries must be finite")
        if np.max(np.abs(mat - mat.conj().T)) > _HERMITIAN_ATOL:
            raise ValueError("matrix is not Hermitian")
        if abs(np.trace(mat) - 1.0) > _TRACE_ATOL:
            raise ValueError("matrix trace is not 1")
        if np.min(np.linalg.eigvalsh(mat)) < _EIGENVALUE_FLOOR:
            raise ValueError("matrix is not positive semidefinite")
        object.__setattr__(self, "matrix", mat)


@dataclass(frozen=True, eq=False)
class Gate:
    """One gate application: a named kind plus the qubit positions it acts on.

    ``matrix`` is only set for kind "single_qubit" and must be 2x2 unitary.
    Use the factory helpers (hadamard, pauli_x, pauli_z, cnot, single_qubit)
    rather than constructing Gate directly.
    """

    kind: str
    target: int
    control: int | None = None
    matrix: np.ndarray | None = None

    def __post_init__(self):
        if self.kind not in _GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.target < 0:
            raise ValueError("target index must be non-negative")
        if self.kind == "cnot":
            if self.control is None:
                raise ValueError("cnot requires a control index")
            if self.control < 0:
                raise ValueError("control index must be non-negative")
            if self.control == self.target:
                raise ValueError("cnot control and target must differ")
        elif self.control is not None:
            raise ValueError(f"{self.kind} takes no control qubit")
        if self.kind == "single_qubit":
            mat = _frozen_complex_array(self.matrix, shape=(2, 2))
            if np.max(np.abs(mat.conj().T @ mat - np.eye(2))) > 1e-12:
                raise ValueError("single_qubit matrix is not unitary")
            object.__setattr__(self, "matrix", mat)
        elif self.matrix is not None:
            raise ValueError(f"{self.kind} takes no matrix")

    @property
    def qubits(self) -> tuple[int, ...]:
        if self.kind == "cnot":
            return (self.control, self.target)
        return (self.target,)


def hadamard(target: int) -> Gate:
    return Gate("hadamard", target)


def pauli_x(target: int) -> Gate:
    return Gate("pauli_x", target)


def pauli_z(target: int) -> Gate:
    return Gate("pauli_z", target)


def cnot(control: int, target: int) -> Gate:
    return Gate("cnot", target, control=control)


def single_qubit(target: int, matrix) -> Gate:
    return Gate("single_qubit", target, matrix=matrix)


@dataclass(frozen=True, eq=False)
class Circuit:
    """An ordered gate sequence on a fixed number of qubits."""

    num_qubits: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError("num_qubits must be positive")
        gates = tuple(self.gates)
        for gate in gates:
            for q in gate.qubits:
                if q >= self.num_qubits:
                    raise ValueError(
                        f"gate on qubit {q} does not fit a {self.num_qubits}-qubit circuit"
                    )
        object.__setattr__(self, "gates", gates)


@dataclass(frozen=True, eq=False)
class MeasurementRecord:
    """Outcome of one projective measurement.

    ``outcome`` lists one bit per measured qubit, in the order the qubits
    were requested.  ``probability`` is the Born probability of that outcome
    and ``post_state`` the renormalized projection of the input.
    """

    measured_qubits: tuple[int, ...]
    outcome: str
    probability: float
    post_state: StateVector

    def __post_init__(self):
        object.__setattr__(self, "measured_qubits", tuple(self.measured_qubits))
        if len(self.outcome) != len(self.measured_qubits):
            raise ValueError("outcome length must match the number of measured qubits")
        if not -_PROBABILITY_SLACK <= self.probability <= 1.0 + _PROBABILITY_SLACK:
            raise ValueError(f"probability {self.probability!r} outside [0, 1]")


def basis_state(bits: str) -> StateVector:
    """Computational basis state |bits>, e.g. basis_state("01")."""
    if not bits or any(c not in "01" for c in bits):
        raise ValueError(f"bits must be a non-empty string of 0s and 1s, got {bits!r}")
    amps = np.zeros(2 ** len(bits), dtype=complex)
    amps[int(bits, 2)] = 1.0
    return StateVector(len(bits), amps)


def _one_qubit_matrix(gate: Gate) -> np.ndarray:
    if gate.kind == "hadamard":
        return HADAMARD
    if gate.kind == "pauli_x":
        return PAULI_X
    if gate.kind == "pauli_z":
        return PAULI_Z
    return gate.matrix


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    """Apply one gate and return the new state; the input is untouched."""
    n = state.num_qubits
    for q in gate.qubits:
        if q >= n:
            raise ValueError(f"gate on qubit {q} does not fit a {n}-qubit state")
    amps = state.amplitudes.copy()
    index = np.arange(amps.size)
    if gate.kind == "cnot":
        control_bit = 1 << (n - 1 - gate.control)
        target_bit = 1 << (n - 1 - gate.target)
        amps = amps[np.where(index & control_bit, index ^ target_bit, index)]
    else:
        mat = _one_qubit_matrix(gate)
        stride = 1 << (n - 1 - gate.target)
        i0 = index[(index & stride) == 0]
        i1 = i0 | stride
        a0 = amps[i0]
        a1 = amps[i1]
        amps[i0] = mat[0, 0] * a0 + mat[0, 1] * a1
        amps[i1] = mat[1, 0] * a0 + mat[1, 1] * a1
    return StateVector(n, amps)


def apply_circuit(state: StateVector, circuit: Circuit) -> StateVector:
    """Apply the circuit's gates in listed order."""
    if circuit.num_qubits != state.num_qubits:
        raise ValueError(
            f"circuit acts on {circuit.num_qubits} qubits, state has {state.num_qubits}"
        )
    for gate in circuit.gates:
        state = apply_gate(state, gate)
    return state


def tensor(a: StateVector, b: StateVector) -> StateVector:
    """Kronecker product; a's qubits become the leftmost positions."""
    return StateVector(a.num_qubits + b.num_qubits, np.kron(a.amplitudes, b.amplitudes))


def inner_product(a: StateVector, b: StateVector) -> complex:
    """<a|b>, conjugating a."""
    if a.num_qubits != b.num_qubits:
        raise ValueError("states have different qubit counts")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def fidelity_pure(a: StateVector, b: StateVector) -> float:
    """|<a|b>|^2, insensitive to the global phase of either argument."""
    value = abs(inner_product(a, b)) ** 2
    return float(min(1.0, value))


def _checked_qubits(num_qubits: int, qubits: Sequence[int]) -> list[int]:
    qubits = list(qubits)
    if not qubits:
        raise ValueError("at least one qubit index is required")
    if len(set(qubits)) != len(qubits):
        raise ValueError(f"qubit indices must be distinct, got {qubits}")
    for q in qubits:
        if not 0 <= q < num_qubits:
            raise ValueError(f"qubit {q} out of range for {num_qubits} qubits")
    return qubits


def partial_trace(state: StateVector, keep: Sequence[int]) -> DensityMatrix:
    """Reduced density matrix over ``keep`` (in the given order), tracing out the rest."""
    n = state.num_qubits
    keep = _checked_qubits(n, keep)
    rest = [q for q in range(n) if q not in keep]
    tensor_form = state.amplitudes.reshape((2,) * n)
    rows = np.transpose(tensor_form, keep + rest).reshape(2 ** len(keep), -1)
    return DensityMatrix(len(keep), rows @ rows.conj().T)


def fidelity_mixed(rho: DensityMatrix, psi: StateVector) -> float:
    """<psi|rho|psi>; agrees with fidelity_pure when rho is a pure projector."""
    if rho.num_qubits != psi.num_qubits:
        raise ValueError("operator and state have different qubit counts")
    value = np.vdot(psi.amplitudes, rho.matrix @ psi.amplitudes).real
    return float(min(1.0, max(0.0, value)))


def _outcome_marginal(state: StateVector, qubits: list[int]) -> np.ndarray:
    """Born probabilities of each outcome of ``qubits``, in outcome-index order."""
    n = state.num_qubits
    probs = (np.abs(state.amplitudes) ** 2).reshape((2,) * n)
    rest = [q for q in range(n) if q not in qubits]
    return np.transpose(probs, qubits + rest).reshape(2 ** len(qubits), -1).sum(axis=1)


def measurement_distribution(state: StateVector, qubits: Sequence[int]) -> dict[str, float]:
    """Exact Born distribution of measuring ``qubits``, keyed by outcome bit string."""
    qubits = _checked_qubits(state.num_qubits, qubits)
    marginal = _outcome_marginal(state, qubits)
    width = len(qubits)
    return {format(o, f"0{width}b"): float(p) for o, p in enumerate(marginal)}


def measure(state: StateVector, qubits: Sequence[int], seed: int) -> MeasurementRecord:
    """Projectively measure ``qubits``, sampling the outcome by the Born rule.

    The draw is a pure function of ``seed``; repeated calls with the same
    arguments return the identical record.  The post-measurement state is the
    projection onto the sampled outcome, renormalized.
    """
    n = state.num_qubits
    qubits = _checked_qubits(n, qubits)
    marginal = _outcome_marginal(state, qubits)
    rng = np.random.default_rng(seed)
    outcome_index = int(rng.choice(marginal.size, p=marginal / marginal.sum()))

    width = len(qubits)
    index = np.arange(state.amplitudes.size)
    consistent = np.ones(index.size, dtype=bool)
    for j, q in enumerate(qubits):
        bit = (outcome_index >> (width - 1 - j)) & 1
        consistent &= ((index >> (n - 1 - q)) & 1) == bit
    projected = np.where(consistent, state.amplitudes, 0.0)
    post = StateVector(n, projected / np.linalg.norm(projected))
    return MeasurementRecord(
        measured_qubits=tuple(qubits),
        outcome=format(outcome_index, f"0{width}b"),
        probability=float(marginal[outcome_index]),
        post_state=post,
    )


def _dense_gate(gate: Gate, num_qubits: int) -> np.ndarray:
    """Full 2^n x 2^n matrix of one gate, built by Kronecker products only."""
    eye = np.eye(2, dtype=complex)
    if gate.kind == "cnot":
        p0 = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
        p1 = np.array([[0.0, 0.0], [0.0, 1.0]], dtype=complex)
        keep = [eye] * num_qubits
        keep[gate.control] = p0
        flip = [eye] * num_qubits
        flip[gate.control] = p1
        flip[gate.target] = PAULI_X
        return reduce(np.kron, keep) + reduce(np.kron, flip)
    factors = [eye] * num_qubits
    factors[gate.target] = _one_qubit_matrix(gate)
    return reduce(np.kron, factors)


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """Dense unitary of the whole circuit, as a brute-force reference.

    Deliberately shares no code with apply_gate: each gate is expanded to a
    full matrix via Kronecker products and the expansions are multiplied in
    application order.  Refuses circuits beyond MAX_DENSE_QUBITS qubits.
    """
    if circuit.num_qubits > MAX_DENSE_QUBITS:
        raise ValueError(
            f"dense unitary limited to {MAX_DENSE_QUBITS} qubits, "
            f"got {circuit.num_qubits}"
        )
    unitary = np.eye(2**circuit.num_qubits, dtype=complex)
    for gate in circuit.gates:
        unitary = _dense_gate(gate, circuit.num_qubits) @ unitary
    return unitary

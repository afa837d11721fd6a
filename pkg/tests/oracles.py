"""Brute-force reference implementations the tests hold the library against.

Everything here favors obviousness over speed and avoids the library's code
paths: reduced density matrices come from contracting the full outer product
index by index with bit-string bookkeeping, and Born distributions are
accumulated dict-style over basis indices.  Agreement with the library is
therefore a real cross-check, not a tautology.
"""

import math

import numpy as np

SQRT_HALF = 1.0 / math.sqrt(2.0)

# Literal amplitude patterns of the four Bell states, index order |00>..|11>.
BELL_AMPLITUDES = {
    0: np.array([SQRT_HALF, 0.0, 0.0, SQRT_HALF], dtype=complex),
    1: np.array([0.0, SQRT_HALF, SQRT_HALF, 0.0], dtype=complex),
    2: np.array([SQRT_HALF, 0.0, 0.0, -SQRT_HALF], dtype=complex),
    3: np.array([0.0, SQRT_HALF, -SQRT_HALF, 0.0], dtype=complex),
}


def _basis_index(num_qubits: int, bits_by_qubit: dict) -> int:
    bits = "".join(bits_by_qubit[q] for q in range(num_qubits))
    return int(bits, 2)


def reduced_density(amps, num_qubits: int, keep) -> np.ndarray:
    """Partial trace over everything but ``keep``, done on the full outer product."""
    keep = list(keep)
    rest = [q for q in range(num_qubits) if q not in keep]
    full = np.outer(amps, np.conj(amps))
    dim = 2 ** len(keep)
    rho = np.zeros((dim, dim), dtype=complex)
    for row in range(dim):
        row_bits = format(row, f"0{len(keep)}b")
        for col in range(dim):
            col_bits = format(col, f"0{len(keep)}b")
            acc = 0.0 + 0.0j
            for traced in range(2 ** len(rest)):
                traced_bits = format(traced, f"0{len(rest)}b")
                row_assignment = dict(zip(keep, row_bits)) | dict(zip(rest, traced_bits))
                col_assignment = dict(zip(keep, col_bits)) | dict(zip(rest, traced_bits))
                acc += full[
                    _basis_index(num_qubits, row_assignment),
                    _basis_index(num_qubits, col_assignment),
                ]
            rho[row, col] = acc
    return rho


def born_distribution(amps, num_qubits: int, qubits) -> dict:
    """Born probabilities accumulated bucket by bucket over basis indices."""
    dist = {}
    for index, amp in enumerate(amps):
        bits = format(index, f"0{num_qubits}b")
        outcome = "".join(bits[q] for q in qubits)
        dist[outcome] = dist.get(outcome, 0.0) + abs(amp) ** 2
    return dist


def overlap_fidelity(rho: np.ndarray, amps) -> float:
    """<psi|rho|psi> evaluated as an explicit double sum."""
    acc = 0.0 + 0.0j
    dim = len(amps)
    for row in range(dim):
        for col in range(dim):
            acc += np.conj(amps[row]) * rho[row, col] * amps[col]
    return acc.real

"""
Exact 2x2 matrix machinery for the ancilla channel.

Builds the stochastic and unitary realizations of an operation u_j, picks the
relative phase from the hint signs, dephases between operations, and reads out
computational-basis probabilities. Everything here is a pure function of
immutable values.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from ..common.exceptions import DomainError

logger = logging.getLogger(__name__)

TOLERANCE = 1e-12
TWO_PI = 2.0 * math.pi

PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

# Carrier for every gate/state matrix: a finite complex array of shape (2, 2).
ComplexMatrix2 = np.ndarray


def _check_probability(value: float, name: str = "probability") -> float:
    value = float(value)
    if not (0.0 <= value <= 1.0):
        raise DomainError(f"{name} must lie in [0, 1], got {value}")
    return value


def _check_hint_component(value: float, name: str) -> float:
    value = float(value)
    if not (-0.5 <= value <= 0.5):
        raise DomainError(f"{name} must lie in [-1/2, 1/2], got {value}")
    return value


def as_matrix2(entries) -> ComplexMatrix2:
    """Coerce to a read-only complex 2x2 array, rejecting NaN/Inf."""
    matrix = np.array(entries, dtype=complex)
    if matrix.shape != (2, 2):
        raise DomainError(f"Expected a 2x2 matrix, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise DomainError("Matrix entries must be finite")
    matrix.setflags(write=False)
    return matrix


class PhaseDifference(float, Enum):
    """Outputs of the phase-difference rule."""
    ALIGNED = 0.0
    ORTHOGONAL = math.pi / 2
    OPPOSED = math.pi


@dataclass(frozen=True)
class UnitaryGate:
    """Unitary realization of u_j: superposition of identity and logical-not."""

    p_identity: float
    phase: float

    @property
    def matrix(self) -> ComplexMatrix2:
        root_p = math.sqrt(self.p_identity)
        root_q = math.sqrt(1.0 - self.p_identity)
        twist = complex(math.cos(self.phase), math.sin(self.phase))
        return as_matrix2([
            [root_p, twist * root_q],
            [twist.conjugate() * root_q, -root_p],
        ])


@dataclass(frozen=True)
class StochasticGate:
    """Stochastic realization of u_j: identity with p_identity, flip otherwise."""

    p_identity: float

    @property
    def matrix(self) -> np.ndarray:
        p = self.p_identity
        matrix = np.array([[p, 1.0 - p], [1.0 - p, p]], dtype=float)
        matrix.setflags(write=False)
        return matrix


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, positive, unit-trace state of the ancilla qubit."""

    entries: ComplexMatrix2

    def __post_init__(self):
        entries = as_matrix2(self.entries)
        object.__setattr__(self, "entries", entries)

        hermitian_gap = np.max(np.abs(entries - entries.conj().T))
        if hermitian_gap > TOLERANCE:
            raise DomainError(f"Density matrix is not Hermitian (deviation {hermitian_gap:.3e})")
        trace = np.trace(entries)
        if abs(trace - 1.0) > TOLERANCE:
            raise DomainError(f"Density matrix trace must be 1, got {trace}")
        lowest = float(np.min(np.linalg.eigvalsh(entries)))
        if lowest < -TOLERANCE:
            raise DomainError(f"Density matrix has negative eigenvalue {lowest:.3e}")

    @property
    def purity(self) -> float:
        return float(np.real(np.trace(self.entries @ self.entries)))

    def allclose(self, other: "DensityMatrix", atol: float = TOLERANCE) -> bool:
        return bool(np.allclose(self.entries, other.entries, rtol=0.0, atol=atol))


def pure_state(bit: int) -> DensityMatrix:
    """Computational-basis projector |bit><bit|."""
    if bit not in (0, 1):
        raise DomainError(f"Fiducial bit must be 0 or 1, got {bit}")
    entries = np.zeros((2, 2), dtype=complex)
    entries[bit, bit] = 1.0
    return DensityMatrix(entries)


def maximally_mixed() -> DensityMatrix:
    return DensityMatrix(np.eye(2, dtype=complex) / 2.0)


def build_unitary(p_identity: float, phase: float) -> UnitaryGate:
    """
    Build the unitary form of u_j.

    Args:
        p_identity: Probability P(u_j -> identity), in [0, 1]
        phase: Relative phase phi_j in radians, reduced modulo 2*pi

    Returns:
        UnitaryGate realizing [[sqrt(p), e^{i phi} sqrt(1-p)], [e^{-i phi} sqrt(1-p), -sqrt(p)]]
    """
    p_identity = _check_probability(p_identity, "p_identity")
    phase = float(phase)
    if not math.isfinite(phase):
        raise DomainError(f"phase must be finite, got {phase}")
    return UnitaryGate(p_identity=p_identity, phase=phase % TWO_PI)


def build_stochastic(p_identity: float) -> StochasticGate:
    """Build the stochastic (doubly stochastic) form of u_j."""
    return StochasticGate(p_identity=_check_probability(p_identity, "p_identity"))


def phase_rule(h0: float, h1: float) -> PhaseDifference:
    """
    Choose the phase difference between the two unitaries from the hint signs.

    The zero branch is an exact floating-point test: grids put points exactly
    on the axes and they must land in the pi/2 branch.
    """
    h0 = _check_hint_component(h0, "h0")
    h1 = _check_hint_component(h1, "h1")
    product = h0 * h1
    if product > 0:
        return PhaseDifference.ALIGNED
    if product < 0:
        return PhaseDifference.OPPOSED
    return PhaseDifference.ORTHOGONAL


def apply_unitary(gate: UnitaryGate, state: DensityMatrix) -> DensityMatrix:
    """Evolve a state: rho -> U rho U^dagger."""
    unitary = gate.matrix
    return DensityMatrix(unitary @ state.entries @ unitary.conj().T)


def apply_stochastic(gate: StochasticGate, vector) -> np.ndarray:
    """Apply a stochastic gate to a probability vector (P(bit=0), P(bit=1))."""
    vector = np.asarray(vector, dtype=float)
    if vector.shape != (2,) or np.any(vector < -TOLERANCE) or abs(vector.sum() - 1.0) > TOLERANCE:
        raise DomainError(f"Expected a probability vector of length 2, got {vector}")
    return gate.matrix @ vector


def dephase(state: DensityMatrix, gamma: float) -> DensityMatrix:
    """
    Dephasing channel at rate gamma.

    Realized as a random phase flip with weights (1 - gamma/2, gamma/2), which
    leaves the diagonal alone and scales the coherences by (1 - gamma).
    """
    gamma = _check_probability(gamma, "gamma")
    rho = state.entries
    mixed = (1.0 - gamma / 2.0) * rho + (gamma / 2.0) * (PAULI_Z @ rho @ PAULI_Z)
    return DensityMatrix(mixed)


def measure_probs(state: DensityMatrix) -> Tuple[float, float]:
    """Computational-basis outcome probabilities (P(m=0), P(m=1))."""
    return float(np.real(state.entries[0, 0])), float(np.real(state.entries[1, 1]))

"""
Classical (cDM) and quantum (qDM) decision-making machines.

Both machines run the same algorithm on an ancilla prepared in the fiducial
value alpha: u0 acts on every input, u1 only on input kappa = 1, the ancilla
is read out as m_kappa and the guess is y_kappa = m_kappa XOR alpha.

The classical machine draws (u0, u1) once per game and shares the pair
between both inputs. The quantum machine prepares the ancilla afresh for each
input, so m0 and m1 are independent given the gates; the kappa = 1 branch is
dephased once between u0 and u1.

Draw order is fixed: every game consumes exactly two uniforms, in the order
(u0, u1) for the classical machine and (m0, m1) for the quantum machine.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from ..common.enums import MachineKind, OperationKind
from ..common.exceptions import ConfigurationError
from ..utils.rng import RngStream
from . import qcore
from .game import (
    TAU_CASES,
    Guess,
    ScoreTable,
    SecretBits,
    TauCase,
    preferences_from_hint,
    score,
)
from .models import MachineConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GameResult:
    """One game: measured ancilla bits, guesses and score."""

    m0: int
    m1: int
    guess: Guess
    score: float
    sampled_tau: Optional[TauCase] = None


@dataclass(frozen=True)
class GameBatch:
    """n games played from one stream, as arrays."""

    m0: np.ndarray
    m1: np.ndarray
    scores: np.ndarray

    def __len__(self) -> int:
        return int(self.scores.shape[0])


@dataclass(frozen=True)
class OutcomeDistribution:
    """Exact evaluation: joint probabilities of (m0, m1) and of the score."""

    joint: Dict[Tuple[int, int], float]
    scores: Dict[float, float]

    @property
    def expected_score(self) -> float:
        return float(sum(value * weight for value, weight in self.scores.items()))

    def marginal_zero(self, kappa: int) -> float:
        """P(m_kappa = 0)."""
        return float(sum(p for outcome, p in self.joint.items() if outcome[kappa] == 0))


def _require_kind(config: MachineConfig, kind: MachineKind) -> None:
    if config.kind is not kind:
        raise ConfigurationError(f"Expected a {kind.value} configuration, got {config.kind.value}")


def classical_gates(config: MachineConfig) -> Tuple[qcore.StochasticGate, qcore.StochasticGate]:
    p0, p1 = preferences_from_hint(config.hint)
    return qcore.build_stochastic(p0), qcore.build_stochastic(p1)


def _basis_vector(bit: int) -> np.ndarray:
    return np.array([1.0 - bit, float(bit)])


def quantum_gates(config: MachineConfig) -> Tuple[qcore.UnitaryGate, qcore.UnitaryGate]:
    """u0 at phase 0 and u1 at the rule's phase difference."""
    p0, p1 = preferences_from_hint(config.hint)
    delta = qcore.phase_rule(config.hint.h0, config.hint.h1)
    return qcore.build_unitary(p0, 0.0), qcore.build_unitary(p1, float(delta))


def quantum_branch_probabilities(config: MachineConfig) -> Tuple[float, float]:
    """
    P(m0 = 0) and P(m1 = 0) from the density-matrix pipeline.

    Branch kappa = 0: |alpha> -> u0 -> measure.
    Branch kappa = 1: |alpha> -> u0 -> dephase(gamma) -> u1 -> measure.
    """
    _require_kind(config, MachineKind.QUANTUM)
    u0, u1 = quantum_gates(config)
    prepared = qcore.pure_state(config.alpha)
    after_u0 = qcore.apply_unitary(u0, prepared)
    p_m0_zero, _ = qcore.measure_probs(after_u0)
    after_u1 = qcore.apply_unitary(u1, qcore.dephase(after_u0, config.gamma))
    p_m1_zero, _ = qcore.measure_probs(after_u1)
    return p_m0_zero, p_m1_zero


def _guesses_and_scores(m0, m1, alpha: int, secrets: SecretBits, xi: float):
    y0 = np.bitwise_xor(m0, alpha)
    y1 = np.bitwise_xor(m1, alpha)
    half = xi / 2.0
    scores = np.where(y0 == secrets.x0, half, -half) + np.where(y1 == secrets.x1, half, -half)
    return scores


def play_batch(config: MachineConfig, secrets: SecretBits, rng: RngStream, n: int) -> GameBatch:
    """
    Play n independent games with one machine.

    Args:
        config: Machine configuration (classical or quantum)
        secrets: Alice's secret bits
        rng: Stream supplying two uniforms per game
        n: Number of games

    Returns:
        GameBatch with integer outcome arrays and float scores
    """
    if n < 0:
        raise ConfigurationError(f"Number of games must be non-negative, got {n}")
    draws = rng.uniforms(n, 2)
    alpha = config.alpha

    if config.kind is MachineKind.CLASSICAL:
        p0, p1 = preferences_from_hint(config.hint)
        flip0 = (draws[:, 0] >= p0).astype(np.int64)
        flip1 = (draws[:, 1] >= p1).astype(np.int64)
        m0 = alpha ^ flip0
        m1 = m0 ^ flip1
    else:
        p_m0_zero, p_m1_zero = quantum_branch_probabilities(config)
        m0 = (draws[:, 0] >= p_m0_zero).astype(np.int64)
        m1 = (draws[:, 1] >= p_m1_zero).astype(np.int64)

    scores = _guesses_and_scores(m0, m1, alpha, secrets, config.xi)
    return GameBatch(m0=m0, m1=m1, scores=scores)


def _single_result(batch: GameBatch, config: MachineConfig, secrets: SecretBits,
                   sampled_tau: Optional[TauCase]) -> GameResult:
    m0, m1 = int(batch.m0[0]), int(batch.m1[0])
    guess = Guess(m0 ^ config.alpha, m1 ^ config.alpha)
    return GameResult(
        m0=m0,
        m1=m1,
        guess=guess,
        score=score(secrets, guess, ScoreTable(config.xi)),
        sampled_tau=sampled_tau,
    )


def _tau_from_outcomes(m0: int, m1: int, alpha: int) -> TauCase:
    u0 = OperationKind.IDENTITY if m0 == alpha else OperationKind.NOT
    u1 = OperationKind.IDENTITY if m1 == m0 else OperationKind.NOT
    return next(case for case in TAU_CASES if case.u0_kind is u0 and case.u1_kind is u1)


def play_classical(config: MachineConfig, secrets: SecretBits, rng: RngStream) -> GameResult:
    """One cDM game; the sampled deterministic pair is reported as sampled_tau."""
    _require_kind(config, MachineKind.CLASSICAL)
    batch = play_batch(config, secrets, rng, 1)
    tau = _tau_from_outcomes(int(batch.m0[0]), int(batch.m1[0]), config.alpha)
    return _single_result(batch, config, secrets, tau)


def play_quantum(config: MachineConfig, secrets: SecretBits, rng: RngStream) -> GameResult:
    """One qDM game with independent preparations for the two inputs."""
    _require_kind(config, MachineKind.QUANTUM)
    batch = play_batch(config, secrets, rng, 1)
    return _single_result(batch, config, secrets, None)


def play(config: MachineConfig, secrets: SecretBits, rng: RngStream) -> GameResult:
    if config.kind is MachineKind.CLASSICAL:
        return play_classical(config, secrets, rng)
    return play_quantum(config, secrets, rng)


def exact_outcomes(config: MachineConfig, secrets: SecretBits) -> OutcomeDistribution:
    """
    Exact outcome distribution, without sampling.

    Classical: the fiducial bit is pushed through the stochastic form of u0,
    and each value of m0 through the stochastic form of u1, since both inputs
    share one (u0, u1) draw. Quantum: product of the two independent branch
    probabilities from the density-matrix pipeline.
    """
    table = ScoreTable(config.xi)
    joint: Dict[Tuple[int, int], float] = {}

    if config.kind is MachineKind.CLASSICAL:
        u0, u1 = classical_gates(config)
        after_u0 = qcore.apply_stochastic(u0, _basis_vector(config.alpha))
        for m0 in (0, 1):
            after_u1 = qcore.apply_stochastic(u1, _basis_vector(m0))
            for m1 in (0, 1):
                joint[(m0, m1)] = float(after_u0[m0] * after_u1[m1])
    else:
        p_m0_zero, p_m1_zero = quantum_branch_probabilities(config)
        marginals = ((p_m0_zero, 1.0 - p_m0_zero), (p_m1_zero, 1.0 - p_m1_zero))
        for m0, m1 in itertools.product((0, 1), repeat=2):
            joint[(m0, m1)] = marginals[0][m0] * marginals[1][m1]

    scores: Dict[float, float] = {}
    for (m0, m1), weight in sorted(joint.items()):
        value = score(secrets, Guess(m0 ^ config.alpha, m1 ^ config.alpha), table)
        scores[value] = scores.get(value, 0.0) + weight
    return OutcomeDistribution(joint=joint, scores=scores)

"""
Closed-form payoff calculator and brute-force oracle.

Closed forms:
    P(y0 = 0) = 1/2 + h0 for both machines
    P(y1 = 0) = 1/2 + 2 h0 h1                               (classical)
    P(y1 = 0) = 1/2 + 2 h0 h1 + (1 - gamma) Gamma cos(Delta)  (quantum)
    Gamma     = 2 sqrt((1/4 - h0^2)(1/4 - h1^2))

The interference term carries cos(Delta): the product of the two unitaries
gives 2 sqrt(p0 q0 p1 q1) cos(phi1 - phi0), and only cos(Delta) reproduces
the +/-Gamma score relations.

Per-tau payoffs follow the tau -> secrets binding of the case table
(tau3 <-> (1, 1), tau4 <-> (1, 0)); the sign of the interference term is +1
when the tau's second secret is 0 and -1 otherwise.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, List

from ..common.enums import MachineKind, OperationKind
from ..common.exceptions import DomainError
from . import qcore
from .game import TAU_CASES, HintVector, SecretBits, TauCase, correct_tau, secrets_for_tau
from .machines import exact_outcomes
from .models import MachineConfig

logger = logging.getLogger(__name__)

TOLERANCE = qcore.TOLERANCE


@dataclass(frozen=True)
class OutcomeProbabilities:
    """Guess probabilities P(y_kappa = bit)."""

    p_y0_0: float
    p_y0_1: float
    p_y1_0: float
    p_y1_1: float

    def correct(self, kappa: int, bit: int) -> float:
        """Probability that guess y_kappa equals `bit`."""
        table = ((self.p_y0_0, self.p_y0_1), (self.p_y1_0, self.p_y1_1))
        return table[kappa][bit]


@dataclass(frozen=True)
class ScoreDistribution:
    """Probabilities of winning (+xi), drawing (0) and losing (-xi)."""

    win: float
    draw: float
    loss: float


@dataclass(frozen=True)
class PayoffSurfacePoint:
    """Per-tau average payoffs of both machines at one hint vector."""

    h0: float
    h1: float
    tau: TauCase
    xi_bar_c: float
    xi_bar_q: float


def _hint(h) -> HintVector:
    return h if isinstance(h, HintVector) else HintVector(*h)


def _check_rate(gamma_rate: float) -> float:
    gamma_rate = float(gamma_rate)
    if not (0.0 <= gamma_rate <= 1.0):
        raise DomainError(f"Dephasing rate must lie in [0, 1], got {gamma_rate}")
    return gamma_rate


def gamma(h: HintVector) -> float:
    """Interference magnitude Gamma(h), a value in [0, 1/2]."""
    h = _hint(h)
    return 2.0 * math.sqrt((0.25 - h.h0 ** 2) * (0.25 - h.h1 ** 2))


def classical_probs(h: HintVector) -> OutcomeProbabilities:
    h = _hint(h)
    p_y0 = 0.5 + h.h0
    p_y1 = 0.5 + 2.0 * h.h0 * h.h1
    return OutcomeProbabilities(p_y0, 1.0 - p_y0, p_y1, 1.0 - p_y1)


def quantum_probs(h: HintVector, delta: float, gamma_rate: float) -> OutcomeProbabilities:
    """
    Quantum guess probabilities with the dephasing-scaled interference term.

    Raises:
        DomainError: if a probability leaves [0, 1] by more than TOLERANCE.
            Values are never clamped.
    """
    h = _hint(h)
    gamma_rate = _check_rate(gamma_rate)
    p_y0 = 0.5 + h.h0
    p_y1 = 0.5 + 2.0 * h.h0 * h.h1 + (1.0 - gamma_rate) * gamma(h) * math.cos(float(delta))
    for name, value in (("P(y0=0)", p_y0), ("P(y1=0)", p_y1)):
        if value < -TOLERANCE or value > 1.0 + TOLERANCE:
            raise DomainError(f"{name} = {value!r} is outside [0, 1] for h={h}, delta={delta}")
    return OutcomeProbabilities(p_y0, 1.0 - p_y0, p_y1, 1.0 - p_y1)


def _score_from_probs(probs: OutcomeProbabilities, secrets: SecretBits, xi: float) -> float:
    total = 0.0
    for kappa, bit in enumerate(secrets):
        right = probs.correct(kappa, bit)
        total += right - (1.0 - right)
    return xi / 2.0 * total


def xi_bar_classical(h: HintVector, tau: TauCase, xi: float = 1.0) -> float:
    """Classical average payoff when Alice's secrets are the ones tau guesses."""
    return _score_from_probs(classical_probs(h), secrets_for_tau(tau), xi)


def xi_bar_quantum(h: HintVector, tau: TauCase, delta: float, gamma_rate: float,
                   xi: float = 1.0) -> float:
    """Quantum average payoff for tau at an explicit phase difference."""
    return _score_from_probs(quantum_probs(h, delta, gamma_rate), secrets_for_tau(tau), xi)


def machine_probs(kind: MachineKind, h: HintVector, gamma_rate: float = 0.0) -> OutcomeProbabilities:
    h = _hint(h)
    if kind is MachineKind.CLASSICAL:
        _check_rate(gamma_rate)
        return classical_probs(h)
    return quantum_probs(h, qcore.phase_rule(h.h0, h.h1), gamma_rate)


def expected_score(kind: MachineKind, h: HintVector, secrets: SecretBits,
                   gamma_rate: float = 0.0, xi: float = 1.0) -> float:
    """
    Bob's expected score against fixed secrets.

    The classical machine has no coherence to lose, so gamma_rate is
    validated and otherwise ignored for it.
    """
    return _score_from_probs(machine_probs(kind, h, gamma_rate), secrets, xi)


def score_distribution(kind: MachineKind, h: HintVector, secrets: SecretBits,
                       gamma_rate: float = 0.0) -> ScoreDistribution:
    """
    Probabilities of winning, drawing and losing one game.

    The quantum guesses come from independent preparations, so the joint law
    is a product. The classical guesses share u0 and are correlated: y0 is
    right iff u0 matches the correct pair's first operation, and y1 iff u0
    and u1 both match the correct pair or both miss it.
    """
    h = _hint(h)
    if kind is MachineKind.CLASSICAL:
        _check_rate(gamma_rate)
        p_match0 = classical_probs(h).correct(0, secrets.x0)
        case = correct_tau(secrets)
        p_identity1 = 0.5 + h.h1
        p_match1 = p_identity1 if case.u1_kind is OperationKind.IDENTITY else 1.0 - p_identity1
        win = p_match0 * p_match1
        loss = (1.0 - p_match0) * p_match1
        return ScoreDistribution(win=win, draw=1.0 - win - loss, loss=loss)

    probs = machine_probs(kind, h, gamma_rate)
    right0 = probs.correct(0, secrets.x0)
    right1 = probs.correct(1, secrets.x1)
    return ScoreDistribution(
        win=right0 * right1,
        draw=right0 * (1.0 - right1) + (1.0 - right0) * right1,
        loss=(1.0 - right0) * (1.0 - right1),
    )


def uniform_alice_average(kind: MachineKind, h: HintVector, gamma_rate: float = 0.0,
                          xi: float = 1.0) -> float:
    """Bob's payoff averaged over uniformly random secrets: (1/4) sum over tau."""
    h = _hint(h)
    if kind is MachineKind.CLASSICAL:
        values = [xi_bar_classical(h, case, xi) for case in TAU_CASES]
    else:
        delta = qcore.phase_rule(h.h0, h.h1)
        values = [xi_bar_quantum(h, case, delta, gamma_rate, xi) for case in TAU_CASES]
    return sum(values) / 4.0


def brute_force_oracle(kind: MachineKind, h: HintVector, secrets: SecretBits,
                       gamma_rate: float = 0.0, alpha: int = 0, xi: float = 1.0) -> float:
    """
    Expected score by exact enumeration, using no closed forms.

    Classical: the stochastic gates propagated through the shared (u0, u1)
    draw. Quantum: the density-matrix pipeline.
    """
    h = _hint(h)
    gamma_rate = _check_rate(gamma_rate)
    config = MachineConfig(
        kind=kind,
        hint=h,
        alpha=alpha,
        gamma=gamma_rate if kind is MachineKind.QUANTUM else 0.0,
        xi=xi,
    )
    return exact_outcomes(config, secrets).expected_score


def payoff_surface(values: Iterable[float], gamma_rate: float = 0.0,
                   xi: float = 1.0) -> List[PayoffSurfacePoint]:
    """Per-tau payoffs of both machines over the square grid values x values."""
    values = list(values)
    points: List[PayoffSurfacePoint] = []
    for case in TAU_CASES:
        for h0 in values:
            for h1 in values:
                h = HintVector(h0, h1)
                delta = qcore.phase_rule(h0, h1)
                points.append(PayoffSurfacePoint(
                    h0=h.h0,
                    h1=h.h1,
                    tau=case,
                    xi_bar_c=xi_bar_classical(h, case, xi),
                    xi_bar_q=xi_bar_quantum(h, case, delta, gamma_rate, xi),
                ))
    logger.debug(f"Computed payoff surface with {len(points)} points")
    return points

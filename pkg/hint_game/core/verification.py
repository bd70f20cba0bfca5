"""
Self-consistency suite behind `hint-game verify`.

Compares independent evaluations of the same quantities on random inputs:
the brute-force oracle against the closed forms, the density-matrix pipeline
against the closed-form quantum probability, the uniform-secrets average
against zero, and the gate invariants.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List

import numpy as np

from ..common.enums import MachineKind
from ..common.exceptions import DomainError, VerificationError
from ..utils.rng import RngStream
from . import analytic, qcore
from .game import ALL_SECRETS, HintVector
from .machines import quantum_branch_probabilities
from .models import MachineConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    name: str
    samples: int
    max_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_error <= self.tolerance


@dataclass
class VerificationReport:
    seed: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def raise_for_failure(self) -> None:
        failed = [check.name for check in self.checks if not check.passed]
        if failed:
            raise VerificationError(f"Verification failed for: {', '.join(failed)} (seed {self.seed})")


def _random_hint(rng: RngStream) -> HintVector:
    h0, h1 = rng.uniforms(2) - 0.5
    return HintVector(float(h0), float(h1))


def check_oracle(rng: RngStream, trials: int, tolerance: float) -> CheckResult:
    """brute_force_oracle against expected_score on random (machine, h, x, gamma)."""
    worst = 0.0
    machines = list(MachineKind)
    for _ in range(trials):
        draws = rng.uniforms(3)
        machine = machines[int(draws[0] * 2)]
        secrets = ALL_SECRETS[int(draws[1] * 4)]
        gamma_rate = float(draws[2]) if machine is MachineKind.QUANTUM else 0.0
        h = _random_hint(rng)
        oracle = analytic.brute_force_oracle(machine, h, secrets, gamma_rate)
        closed = analytic.expected_score(machine, h, secrets, gamma_rate)
        worst = max(worst, abs(oracle - closed))
    return CheckResult("oracle_equivalence", trials, worst, tolerance)


def check_matrix_pipeline(rng: RngStream, samples: int, tolerance: float) -> CheckResult:
    """Density-matrix branch probabilities against the closed forms."""
    worst = 0.0
    for _ in range(samples):
        h = _random_hint(rng)
        gamma_rate = float(rng.uniforms(1)[0])
        config = MachineConfig(kind=MachineKind.QUANTUM, hint=h, gamma=gamma_rate)
        p_m0, p_m1 = quantum_branch_probabilities(config)
        delta = float(qcore.phase_rule(h.h0, h.h1))
        expected_m1 = 0.5 + 2.0 * h.h0 * h.h1 + (1.0 - gamma_rate) * analytic.gamma(h) * math.cos(delta)
        worst = max(worst, abs(p_m0 - (0.5 + h.h0)), abs(p_m1 - expected_m1))
    return CheckResult("matrix_pipeline", samples, worst, tolerance)


def check_uniform_null(rng: RngStream, samples: int, tolerance: float) -> CheckResult:
    """Against uniformly random secrets both machines average zero."""
    worst = 0.0
    for machine in MachineKind:
        for _ in range(samples):
            h = _random_hint(rng)
            gamma_rate = float(rng.uniforms(1)[0]) if machine is MachineKind.QUANTUM else 0.0
            worst = max(worst, abs(analytic.uniform_alice_average(machine, h, gamma_rate)))
    return CheckResult("uniform_alice_null", 2 * samples, worst, tolerance)


def check_gate_invariants(rng: RngStream, samples: int, tolerance: float) -> CheckResult:
    """Unitaries satisfy U U^dagger = I and |U00|^2 = p; stochastic gates are doubly stochastic."""
    worst = 0.0
    identity = np.eye(2)
    for _ in range(samples):
        p, phase = rng.uniforms(2)
        unitary = qcore.build_unitary(float(p), float(phase) * qcore.TWO_PI).matrix
        worst = max(
            worst,
            float(np.max(np.abs(unitary @ unitary.conj().T - identity))),
            abs(abs(unitary[0, 0]) ** 2 - float(p)),
        )
        stochastic = qcore.build_stochastic(float(p)).matrix
        worst = max(
            worst,
            float(np.max(np.abs(stochastic.sum(axis=0) - 1.0))),
            float(np.max(np.abs(stochastic.sum(axis=1) - 1.0))),
            float(max(0.0, -stochastic.min())),
        )
    return CheckResult("gate_invariants", samples, worst, tolerance)


def run_verification(trials: int = 1000, seed: int = 0, tolerance: float = 1e-12,
                     pipeline_samples: int = 100, null_samples: int = 100) -> VerificationReport:
    """
    Run every consistency check from one seed.

    Args:
        trials: Random tuples for the oracle check
        seed: Master seed; each check draws from its own substream
        tolerance: Largest absolute disagreement accepted
        pipeline_samples: Random samples for the matrix pipeline and gate checks
        null_samples: Random samples per machine for the uniform-secrets check

    Returns:
        VerificationReport; call raise_for_failure() to turn failure into an exception
    """
    if trials < 1:
        raise DomainError(f"trials must be positive, got {trials}")
    root = RngStream(seed)
    report = VerificationReport(seed=root.seed)
    report.checks.append(check_oracle(root.substream("oracle"), trials, tolerance))
    report.checks.append(check_matrix_pipeline(root.substream("pipeline"), pipeline_samples, tolerance))
    report.checks.append(check_uniform_null(root.substream("null"), null_samples, tolerance))
    report.checks.append(check_gate_invariants(root.substream("gates"), pipeline_samples, tolerance))

    for check in report.checks:
        level = logging.INFO if check.passed else logging.ERROR
        logger.log(level, f"{check.name}: max error {check.max_error:.3e} over {check.samples} samples")
    return report

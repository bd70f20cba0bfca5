#!/usr/bin/env python3
"""Tests for the closed-form payoff calculator and its brute-force oracle."""

import math

import numpy as np
import pytest

from hint_game.common.enums import MachineKind
from hint_game.common.exceptions import DomainError
from hint_game.core import analytic, qcore
from hint_game.core.game import ALL_SECRETS, TAU_CASES, HintVector, SecretBits, correct_tau, symmetric_hint, tau_case

ATOL = 1e-12
MACHINES = list(MachineKind)


def _random_hints(seed: int, n: int, low=(-0.5, -0.5), high=(0.5, 0.5)):
    generator = np.random.default_rng(seed)
    return [HintVector(float(a), float(b)) for a, b in generator.uniform(low, high, size=(n, 2))]


class TestClosedForms:
    """Guess probabilities, interference magnitude and per-tau payoffs."""

    def test_interference_magnitude(self):
        """Test Gamma at the origin, the edges and an interior point."""
        assert analytic.gamma(HintVector(0.0, 0.0)) == 0.5
        assert analytic.gamma(HintVector(0.5, 0.1)) == 0.0
        assert analytic.gamma(HintVector(0.1, 0.2)) == pytest.approx(2 * math.sqrt(0.24 * 0.21))
        assert analytic.gamma(HintVector(0.01, 0.01)) == pytest.approx(0.4998, abs=1e-12)

    def test_classical_probabilities(self, good_hint):
        """Test the classical guess probabilities for a fixed hint."""
        probs = analytic.classical_probs(good_hint)
        assert probs.p_y0_0 == pytest.approx(0.8)
        assert probs.p_y1_0 == pytest.approx(0.68)
        assert probs.p_y1_0 + probs.p_y1_1 == pytest.approx(1.0)

    def test_quantum_probabilities(self, good_hint):
        """Test the quantum guess probabilities including the interference term."""
        assert analytic.quantum_probs(good_hint, 0.0, 0.0).p_y1_0 == pytest.approx(1.0)
        assert analytic.quantum_probs(good_hint, 0.0, 0.5).p_y1_0 == pytest.approx(0.84)
        assert analytic.quantum_probs(good_hint, 0.0, 1.0).p_y1_0 == pytest.approx(0.68)

    @pytest.mark.parametrize("rate", [-0.1, 1.1])
    def test_rate_out_of_range(self, good_hint, rate):
        """Test that a dephasing rate outside [0, 1] is rejected."""
        with pytest.raises(DomainError):
            analytic.quantum_probs(good_hint, 0.0, rate)
        with pytest.raises(DomainError):
            analytic.expected_score(MachineKind.CLASSICAL, good_hint, SecretBits(0, 0), rate)

    @pytest.mark.parametrize("tau, expected", [(1, 0.48), (2, 0.12), (3, -0.48), (4, -0.12)])
    def test_classical_tau_payoffs(self, good_hint, tau, expected):
        """Test the classical per-tau payoffs at h = (0.3, 0.3)."""
        assert analytic.xi_bar_classical(good_hint, tau_case(tau)) == pytest.approx(expected, abs=ATOL)

    @pytest.mark.parametrize("tau, sign", [(1, 1), (2, -1), (3, -1), (4, 1)])
    def test_quantum_tau_payoffs(self, good_hint, tau, sign):
        """Test that each quantum per-tau payoff adds the signed interference term."""
        case = tau_case(tau)
        for rate in (0.0, 0.5):
            quantum = analytic.xi_bar_quantum(good_hint, case, 0.0, rate)
            classical = analytic.xi_bar_classical(good_hint, case)
            assert quantum - classical == pytest.approx(sign * (1 - rate) * 0.32, abs=ATOL)

    def test_score_scale(self, good_hint, zero_secrets):
        """Test that scores scale linearly with xi."""
        base = analytic.expected_score(MachineKind.QUANTUM, good_hint, zero_secrets)
        assert analytic.expected_score(MachineKind.QUANTUM, good_hint, zero_secrets, xi=3.0) == pytest.approx(3 * base)


class TestQuantumAdvantage:
    """The phase rule turns interference into +Gamma on Good hints and -Gamma on Poor ones."""

    def test_good_quadrant_gains_gamma(self, zero_secrets):
        """Test that on Good hints the quantum machine gains Gamma over the classical one."""
        for h in _random_hints(11, 20, low=(0.0, 0.0)):
            gap = (analytic.expected_score(MachineKind.QUANTUM, h, zero_secrets)
                   - analytic.expected_score(MachineKind.CLASSICAL, h, zero_secrets))
            assert gap == pytest.approx(analytic.gamma(h), abs=ATOL)

    def test_poor_quadrant_loses_gamma(self, zero_secrets):
        """Test that on Poor hints the quantum machine loses Gamma against the classical one."""
        for h in _random_hints(12, 20, low=(-0.5, 0.0), high=(0.0, 0.5)):
            gap = (analytic.expected_score(MachineKind.QUANTUM, h, zero_secrets)
                   - analytic.expected_score(MachineKind.CLASSICAL, h, zero_secrets))
            assert gap == pytest.approx(-analytic.gamma(h), abs=ATOL)

    @pytest.mark.parametrize("secrets", ALL_SECRETS)
    @pytest.mark.parametrize("magnitude", [0.05, 0.2, 0.45])
    def test_rule_phase_is_optimal_on_good_hints(self, secrets, magnitude):
        """Test that no phase difference beats the rule's choice on Good hints."""
        h = symmetric_hint(magnitude, secrets)
        case = correct_tau(secrets)
        rule = float(qcore.phase_rule(h.h0, h.h1))
        best = analytic.xi_bar_quantum(h, case, rule, 0.0)
        for delta in np.linspace(0.0, 2 * math.pi, 73):
            assert analytic.xi_bar_quantum(h, case, float(delta), 0.0) <= best + ATOL

    def test_discontinuity_across_the_axis(self, zero_secrets):
        """Test the jump in quantum score when h0 changes sign."""
        good = analytic.expected_score(MachineKind.QUANTUM, symmetric_hint(0.01, zero_secrets), zero_secrets)
        poor = analytic.expected_score(MachineKind.QUANTUM, symmetric_hint(-0.01, zero_secrets), zero_secrets)
        assert good - poor == pytest.approx(1.02, abs=ATOL)

        good_c = analytic.expected_score(MachineKind.CLASSICAL, symmetric_hint(0.01, zero_secrets), zero_secrets)
        poor_c = analytic.expected_score(MachineKind.CLASSICAL, symmetric_hint(-0.01, zero_secrets), zero_secrets)
        assert good_c - poor_c == pytest.approx(0.0204, abs=ATOL)

    def test_origin_scores_zero(self, zero_secrets):
        """Test that both machines score zero at the origin."""
        for kind in MACHINES:
            assert analytic.expected_score(kind, HintVector(0.0, 0.0), zero_secrets) == pytest.approx(0.0, abs=ATOL)


class TestDecoherence:
    """Dephasing interpolates linearly between the quantum and classical scores."""

    @pytest.mark.parametrize("secrets", ALL_SECRETS)
    def test_affine_in_rate(self, secrets):
        """Test that the quantum score is affine in the rate and classical at gamma = 1."""
        for h in _random_hints(13, 10):
            scores = [analytic.expected_score(MachineKind.QUANTUM, h, secrets, rate) for rate in (0.0, 0.5, 1.0)]
            classical = analytic.expected_score(MachineKind.CLASSICAL, h, secrets)
            assert scores[1] == pytest.approx((scores[0] + scores[2]) / 2, abs=ATOL)
            assert scores[2] == pytest.approx(classical, abs=ATOL)

    @pytest.mark.parametrize("rate, expected", [(0.0, 0.8), (0.25, 0.72), (0.5, 0.64), (0.75, 0.56), (1.0, 0.48)])
    def test_good_hint_decoherence(self, good_hint, zero_secrets, rate, expected):
        """Test the quantum score at h = (0.3, 0.3) for each rate."""
        score = analytic.expected_score(MachineKind.QUANTUM, good_hint, zero_secrets, rate)
        assert score == pytest.approx(expected, abs=ATOL)


class TestSymmetriesAndCorners:
    """Exact corner values and the mirror symmetry of the score surface."""

    @pytest.mark.parametrize("kind", MACHINES)
    @pytest.mark.parametrize("h, secrets, expected", [
        ((0.5, 0.5), (0, 0), 1.0),
        ((-0.5, 0.5), (0, 0), -1.0),
        ((-0.5, 0.5), (1, 1), 1.0),
        ((0.5, 0.5), (1, 1), -1.0),
        ((-0.5, -0.5), (0, 0), 0.0),
    ])
    def test_corners(self, kind, h, secrets, expected):
        """Test the exact scores at the corners of the hint square."""
        assert analytic.expected_score(kind, HintVector(*h), SecretBits(*secrets)) == pytest.approx(expected, abs=ATOL)

    @pytest.mark.parametrize("kind", MACHINES)
    @pytest.mark.parametrize("secrets", ALL_SECRETS)
    def test_mirror_symmetry(self, kind, secrets):
        """Test invariance under negating h0 and flipping both secrets."""
        for h in _random_hints(14, 10):
            mirrored = HintVector(-h.h0, h.h1)
            assert analytic.expected_score(kind, h, secrets, 0.0) == pytest.approx(
                analytic.expected_score(kind, mirrored, secrets.flipped(), 0.0), abs=ATOL)

    @pytest.mark.parametrize("kind", MACHINES)
    def test_scores_bounded(self, kind):
        """Test that expected scores stay within [-xi, xi]."""
        for h in _random_hints(15, 50):
            for secrets in ALL_SECRETS:
                assert abs(analytic.expected_score(kind, h, secrets)) <= 1.0 + ATOL


class TestDistributionsAndOracle:
    """Win/draw/loss probabilities, the oracle, and the uniform-secrets null."""

    @pytest.mark.parametrize("kind", MACHINES)
    @pytest.mark.parametrize("secrets", ALL_SECRETS)
    def test_win_minus_loss_is_score(self, kind, secrets):
        """Test that win minus loss probability equals the expected score."""
        for h in _random_hints(16, 10):
            dist = analytic.score_distribution(kind, h, secrets, 0.3 if kind is MachineKind.QUANTUM else 0.0)
            assert dist.win + dist.draw + dist.loss == pytest.approx(1.0, abs=ATOL)
            assert min(dist.win, dist.draw, dist.loss) >= -ATOL
            rate = 0.3 if kind is MachineKind.QUANTUM else 0.0
            assert dist.win - dist.loss == pytest.approx(
                analytic.expected_score(kind, h, secrets, rate), abs=ATOL)

    def test_classical_guesses_are_correlated(self, good_hint, zero_secrets):
        """Test the classical win/loss split for a Good hint."""
        dist = analytic.score_distribution(MachineKind.CLASSICAL, good_hint, zero_secrets)
        assert dist.win == pytest.approx(0.64)
        assert dist.loss == pytest.approx(0.16)

    @pytest.mark.parametrize("kind", MACHINES)
    @pytest.mark.parametrize("alpha", [0, 1])
    def test_oracle_matches_closed_form(self, kind, alpha):
        """Test the brute-force oracle against the closed forms."""
        generator = np.random.default_rng(17)
        for h in _random_hints(18, 25):
            secrets = ALL_SECRETS[int(generator.integers(4))]
            rate = float(generator.uniform()) if kind is MachineKind.QUANTUM else 0.0
            oracle = analytic.brute_force_oracle(kind, h, secrets, rate, alpha=alpha)
            assert oracle == pytest.approx(analytic.expected_score(kind, h, secrets, rate), abs=ATOL)

    @pytest.mark.parametrize("kind", MACHINES)
    def test_uniform_secrets_average_zero(self, kind):
        """Test that random secrets average to zero for both machines."""
        for h in _random_hints(19, 20):
            rate = 0.4 if kind is MachineKind.QUANTUM else 0.0
            assert analytic.uniform_alice_average(kind, h, rate) == pytest.approx(0.0, abs=ATOL)

    def test_payoff_surface(self):
        """Test the payoff surface size and one of its points."""
        points = analytic.payoff_surface([-0.5, 0.0, 0.5])
        assert len(points) == len(TAU_CASES) * 9
        corner = next(p for p in points if p.tau.tau == 1 and p.h0 == 0.5 and p.h1 == 0.5)
        assert corner.xi_bar_c == pytest.approx(1.0)
        assert corner.xi_bar_q == pytest.approx(1.0)

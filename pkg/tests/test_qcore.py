#!/usr/bin/env python3
"""Tests for the 2x2 matrix machinery: gates, states, dephasing and readout."""

import math

import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from hint_game.common.exceptions import DomainError
from hint_game.core import qcore
from hint_game.core.qcore import DensityMatrix, PhaseDifference

ATOL = 1e-12

probabilities = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
phases = st.floats(min_value=-50.0, max_value=50.0, allow_nan=False, allow_infinity=False)
rates = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
bits = st.integers(min_value=0, max_value=1)


def _prepared(p0, phase0, bit=0):
    return qcore.apply_unitary(qcore.build_unitary(p0, phase0), qcore.pure_state(bit))


class TestGates:
    """Unitary and stochastic realizations of an operation."""

    @seed(1)
    @given(p=probabilities, phase=phases)
    def test_unitary_is_unitary(self, p, phase):
        """Test that U U^dagger is the identity."""
        u = qcore.build_unitary(p, phase).matrix
        assert np.allclose(u @ u.conj().T, np.eye(2), atol=ATOL)

    @seed(1)
    @given(p=probabilities, phase=phases)
    def test_identity_amplitude_matches_preference(self, p, phase):
        """Test that |U00|^2 equals the identity preference."""
        u = qcore.build_unitary(p, phase).matrix
        assert abs(u[0, 0]) ** 2 == pytest.approx(p, abs=ATOL)

    def test_even_preference_quarter_turn(self):
        """Test the unitary at p = 1/2 and phase pi/2 entry by entry."""
        root = math.sqrt(0.5)
        expected = np.array([[root, 1j * root], [-1j * root, -root]])
        assert np.allclose(qcore.build_unitary(0.5, math.pi / 2).matrix, expected, rtol=0.0, atol=ATOL)

    @seed(1)
    @given(p=probabilities)
    def test_stochastic_is_doubly_stochastic(self, p):
        """Test that stochastic gates are doubly stochastic."""
        s = qcore.build_stochastic(p).matrix
        assert np.all(s >= 0)
        assert np.allclose(s.sum(axis=0), 1.0, atol=ATOL)
        assert np.allclose(s.sum(axis=1), 1.0, atol=ATOL)

    def test_deterministic_unitaries(self):
        """Test the unitaries at p = 1 and p = 0."""
        assert np.allclose(qcore.build_unitary(1.0, 0.0).matrix, [[1, 0], [0, -1]])
        assert np.allclose(qcore.build_unitary(0.0, 0.0).matrix, [[0, 1], [1, 0]])

    def test_phase_reduced_modulo_two_pi(self):
        """Test that phases are reduced modulo 2 pi."""
        gate = qcore.build_unitary(0.5, qcore.TWO_PI + 0.1)
        assert gate.phase == pytest.approx(0.1)

    def test_matrices_are_read_only(self):
        """Test that gate matrices are read-only."""
        u = qcore.build_unitary(0.5, 0.0).matrix
        with pytest.raises(ValueError):
            u[0, 0] = 2.0

    @pytest.mark.parametrize("p", [-0.01, 1.01, float("nan")])
    def test_probability_out_of_range(self, p):
        """Test that out-of-range preferences are rejected."""
        with pytest.raises(DomainError):
            qcore.build_unitary(p, 0.0)
        with pytest.raises(DomainError):
            qcore.build_stochastic(p)

    @pytest.mark.parametrize("phase", [float("nan"), float("inf")])
    def test_non_finite_phase(self, phase):
        """Test that non-finite phases are rejected."""
        with pytest.raises(DomainError, match="finite"):
            qcore.build_unitary(0.5, phase)

    def test_apply_stochastic_to_definite_bit(self):
        """Test a stochastic gate on a definite bit."""
        out = qcore.apply_stochastic(qcore.build_stochastic(0.7), [1.0, 0.0])
        assert np.allclose(out, [0.7, 0.3])

    def test_apply_stochastic_rejects_non_distribution(self):
        """Test that a non-distribution input is rejected."""
        with pytest.raises(DomainError):
            qcore.apply_stochastic(qcore.build_stochastic(0.7), [0.7, 0.7])

    def test_as_matrix2_rejects_bad_input(self):
        """Test matrix coercion errors."""
        with pytest.raises(DomainError, match="2x2"):
            qcore.as_matrix2(np.eye(3))
        with pytest.raises(DomainError, match="finite"):
            qcore.as_matrix2([[np.nan, 0], [0, 1]])


class TestPhaseRule:
    """Phase difference chosen from the signs of the hint components."""

    @pytest.mark.parametrize("h0, h1, expected", [
        (0.3, 0.3, PhaseDifference.ALIGNED),
        (-0.2, -0.4, PhaseDifference.ALIGNED),
        (0.3, -0.3, PhaseDifference.OPPOSED),
        (-0.1, 0.5, PhaseDifference.OPPOSED),
        (0.0, 0.2, PhaseDifference.ORTHOGONAL),
        (-0.0, 0.2, PhaseDifference.ORTHOGONAL),
        (0.0, 0.0, PhaseDifference.ORTHOGONAL),
    ])
    def test_rule(self, h0, h1, expected):
        """Test the phase rule on each sign pattern."""
        assert qcore.phase_rule(h0, h1) is expected

    def test_values_are_radians(self):
        """Test that phase values are in radians."""
        assert float(PhaseDifference.OPPOSED) == math.pi
        assert float(PhaseDifference.ORTHOGONAL) == math.pi / 2

    def test_out_of_range_hint(self):
        """Test that the rule rejects out-of-range hints."""
        with pytest.raises(DomainError):
            qcore.phase_rule(0.6, 0.1)


class TestDensityMatrix:
    """State validation and basic properties."""

    def test_pure_and_mixed_purity(self):
        """Test purity of pure and maximally mixed states."""
        assert qcore.pure_state(0).purity == pytest.approx(1.0)
        assert qcore.maximally_mixed().purity == pytest.approx(0.5)

    @pytest.mark.parametrize("entries, message", [
        ([[0.5, 0.5], [0.0, 0.5]], "Hermitian"),
        ([[1.0, 0.0], [0.0, 1.0]], "trace"),
        ([[1.5, 0.0], [0.0, -0.5]], "negative eigenvalue"),
    ])
    def test_invalid_states(self, entries, message):
        """Test density matrix validation errors."""
        with pytest.raises(DomainError, match=message):
            DensityMatrix(np.array(entries, dtype=complex))

    def test_pure_state_rejects_non_bit(self):
        """Test that pure_state rejects a non-bit."""
        with pytest.raises(DomainError):
            qcore.pure_state(2)

    def test_measure_probs(self):
        """Test readout probabilities."""
        assert qcore.measure_probs(qcore.pure_state(1)) == (0.0, 1.0)
        assert qcore.measure_probs(qcore.maximally_mixed()) == (0.5, 0.5)


class TestDephasing:
    """Dephasing scales coherences by (1 - gamma) and leaves populations alone."""

    def test_zero_rate_is_identity(self):
        """Test that gamma = 0 leaves the state alone."""
        state = _prepared(0.3, 1.0)
        assert qcore.dephase(state, 0.0).allclose(state)

    def test_full_rate_removes_coherences(self):
        """Test that gamma = 1 removes coherences and keeps populations."""
        state = _prepared(0.3, 1.0)
        dephased = qcore.dephase(state, 1.0).entries
        assert abs(dephased[0, 1]) < ATOL
        assert np.allclose(np.diag(dephased), np.diag(state.entries), atol=ATOL)

    @seed(2)
    @given(p=probabilities, phase=phases, gamma_rate=rates)
    def test_coherence_scaling(self, p, phase, gamma_rate):
        """Test that coherences scale by (1 - gamma)."""
        state = _prepared(p, phase)
        dephased = qcore.dephase(state, gamma_rate)
        assert dephased.entries[0, 1] == pytest.approx((1 - gamma_rate) * state.entries[0, 1], abs=ATOL)
        assert np.trace(dephased.entries).real == pytest.approx(1.0, abs=ATOL)

    @seed(3)
    @given(p=probabilities, phase=phases, a=rates, b=rates)
    def test_composition_law(self, p, phase, a, b):
        """Test that two dephasing steps compose into one."""
        state = _prepared(p, phase)
        twice = qcore.dephase(qcore.dephase(state, a), b)
        once = qcore.dephase(state, 1 - (1 - a) * (1 - b))
        assert twice.allclose(once, atol=1e-10)

    def test_rate_out_of_range(self):
        """Test that a rate beyond 1 is rejected."""
        with pytest.raises(DomainError):
            qcore.dephase(qcore.pure_state(0), 1.5)


class TestPipeline:
    """Two unitaries with a dephasing step between them, read out in the computational basis."""

    @seed(4)
    @settings(max_examples=200)
    @given(p0=probabilities, p1=probabilities,
           delta=st.floats(min_value=0.0, max_value=2 * math.pi), gamma_rate=rates)
    def test_interference_probability(self, p0, p1, delta, gamma_rate):
        """Test the two-gate readout against the interference formula."""
        state = _prepared(p0, 0.0)
        state = qcore.apply_unitary(qcore.build_unitary(p1, delta), qcore.dephase(state, gamma_rate))
        prob_zero, prob_one = qcore.measure_probs(state)

        q0, q1 = 1 - p0, 1 - p1
        expected = p0 * p1 + q0 * q1 + 2 * (1 - gamma_rate) * math.sqrt(p0 * q0 * p1 * q1) * math.cos(delta)
        assert prob_zero == pytest.approx(expected, abs=ATOL)
        assert prob_zero + prob_one == pytest.approx(1.0, abs=ATOL)

    def test_unitary_on_fiducial_state(self):
        """Test one unitary on |0><0| against its hand-computed density matrix."""
        state = _prepared(0.8, 0.0)
        assert np.allclose(state.entries, [[0.8, 0.4], [0.4, 0.2]], rtol=0.0, atol=ATOL)
        assert qcore.measure_probs(state) == pytest.approx((0.8, 0.2), abs=ATOL)

    @seed(5)
    @given(p=probabilities, phase=phases, bit=bits)
    def test_evolution_keeps_valid_state(self, p, phase, bit):
        """Test that unitary evolution keeps a pure valid state."""
        state = _prepared(p, phase, bit)
        assert state.purity == pytest.approx(1.0, abs=1e-10)

#!/usr/bin/env python3
"""Tests for the self-consistency suite."""

import pytest

from hint_game.common.exceptions import DomainError, VerificationError
from hint_game.core.verification import CheckResult, VerificationReport, run_verification


class TestVerification:

    def test_all_checks_pass(self):
        """Test that every check passes at default tolerance."""
        report = run_verification(trials=1000, seed=1)
        assert report.passed
        assert [check.name for check in report.checks] == [
            "oracle_equivalence", "matrix_pipeline", "uniform_alice_null", "gate_invariants",
        ]
        for check in report.checks:
            assert check.max_error <= 1e-12

    def test_report_is_reproducible(self):
        """Test that a seed reproduces the report."""
        first = run_verification(trials=100, seed=9)
        second = run_verification(trials=100, seed=9)
        assert [c.max_error for c in first.checks] == [c.max_error for c in second.checks]

    def test_failure_raises(self):
        """Test that a failed check raises VerificationError."""
        report = VerificationReport(seed=3, checks=[
            CheckResult("oracle_equivalence", 10, 0.0, 1e-12),
            CheckResult("matrix_pipeline", 10, 1e-3, 1e-12),
        ])
        assert not report.passed
        with pytest.raises(VerificationError, match="matrix_pipeline"):
            report.raise_for_failure()

    def test_trials_must_be_positive(self):
        """Test that zero trials is rejected."""
        with pytest.raises(DomainError):
            run_verification(trials=0, seed=1)

"""
Hint Game - quantum vs classical decision-making in a secret-bit guessing game.

This package provides tools for:
- Building the stochastic and unitary forms of the machine's operations
- Playing the game with classical and quantum machines under hints and dephasing
- Computing expected scores in closed form and by exact enumeration
- Reproducing the hint-grid, symmetric-hint and decoherence experiments as CSV
"""

__version__ = "1.0.0"

# Core functionality imports
from .core.analytic import (
    brute_force_oracle,
    classical_probs,
    expected_score,
    gamma,
    payoff_surface,
    quantum_probs,
    score_distribution,
    uniform_alice_average,
    xi_bar_classical,
    xi_bar_quantum,
)
from .core.experiments import (
    records_to_frame,
    run_decoherence,
    run_grid,
    run_symmetric,
    summarize,
    write_records,
)
from .core.game import (
    ALL_SECRETS,
    TAU_CASES,
    Guess,
    HintVector,
    ScoreTable,
    SecretBits,
    TauCase,
    classify_hint,
    correct_tau,
    score,
    symmetric_hint,
)
from .core.machines import exact_outcomes, play, play_batch, play_classical, play_quantum
from .core.models import MachineConfig, RunRecord, SummaryStats, SweepSpec, SymmetricLineSpec
from .core.verification import run_verification

# Shared types
from .common.enums import ExperimentTag, HintQuality, LineQuality, MachineKind, OperationKind
from .common.exceptions import (
    ConfigurationError,
    DomainError,
    HintGameError,
    OutputError,
    UsageError,
    VerificationError,
)

# Configuration imports
from .config.config import load_config, reset_config

from .utils.rng import RngStream

__all__ = [
    # Analytic
    'brute_force_oracle',
    'classical_probs',
    'expected_score',
    'gamma',
    'payoff_surface',
    'quantum_probs',
    'score_distribution',
    'uniform_alice_average',
    'xi_bar_classical',
    'xi_bar_quantum',

    # Experiments
    'records_to_frame',
    'run_decoherence',
    'run_grid',
    'run_symmetric',
    'summarize',
    'write_records',
    'run_verification',

    # Game and machines
    'ALL_SECRETS',
    'TAU_CASES',
    'Guess',
    'HintVector',
    'ScoreTable',
    'SecretBits',
    'TauCase',
    'classify_hint',
    'correct_tau',
    'score',
    'symmetric_hint',
    'exact_outcomes',
    'play',
    'play_batch',
    'play_classical',
    'play_quantum',

    # Models
    'MachineConfig',
    'RunRecord',
    'SummaryStats',
    'SweepSpec',
    'SymmetricLineSpec',

    # Enums and errors
    'ExperimentTag',
    'HintQuality',
    'LineQuality',
    'MachineKind',
    'OperationKind',
    'ConfigurationError',
    'DomainError',
    'HintGameError',
    'OutputError',
    'UsageError',
    'VerificationError',

    # Configuration
    'load_config',
    'reset_config',
    'RngStream',
]

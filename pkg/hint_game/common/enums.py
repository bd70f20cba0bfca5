from enum import Enum


class MachineKind(str, Enum):
    """Decision-making machine realizations; values double as CSV names."""
    CLASSICAL = "cdm"
    QUANTUM = "qdm"


class OperationKind(str, Enum):
    """Deterministic branches of an ancilla operation u_j."""
    IDENTITY = "identity"
    NOT = "not"

    def apply(self, bit: int) -> int:
        return bit if self is OperationKind.IDENTITY else 1 - bit


class HintQuality(str, Enum):
    """Quality of a hint vector relative to a pair of secrets"""
    GOOD = "good"
    POOR = "poor"
    MIXED = "mixed"
    NEUTRAL = "neutral"


class LineQuality(str, Enum):
    """Which symmetric rays a symmetric-line experiment walks."""
    GOOD = "good"
    POOR = "poor"
    BOTH = "both"


class ExperimentTag(str, Enum):
    """Experiment tags written to the `experiment` CSV column."""
    GRID = "grid"
    SYMMETRIC = "symmetric"
    DECOHERENCE = "decoherence"

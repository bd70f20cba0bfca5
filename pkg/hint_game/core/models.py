"""
Pydantic models for machine configuration, sweep specifications and records.
"""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..common.enums import ExperimentTag, LineQuality, MachineKind
from ..utils.ranges import inclusive_range
from ..utils.rng import SEED_LIMIT
from .game import ALL_SECRETS, HintVector, SecretBits

# rounding slack on |score| <= xi
SCORE_SLACK = 1e-12

CSV_COLUMNS = [
    "experiment", "machine", "x0", "x1", "h0", "h1", "gamma", "delta",
    "n_games", "mean_score", "std_err", "analytic_score",
]


class MachineConfig(BaseModel):
    """Configuration of one decision-making machine for a run of games."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: MachineKind = Field(..., description="Classical or quantum machine")
    hint: HintVector = Field(..., description="Hint vector (h0, h1)")
    alpha: int = Field(0, ge=0, le=1, description="Fiducial ancilla bit")
    gamma: float = Field(0.0, ge=0.0, le=1.0, description="Dephasing rate between u0 and u1")
    xi: float = Field(1.0, gt=0.0, description="Score scale")

    @field_validator("hint", mode="before")
    @classmethod
    def _coerce_hint(cls, value):
        if isinstance(value, (tuple, list)):
            return HintVector(*value)
        return value

    @model_validator(mode="after")
    def _classical_is_noiseless(self):
        if self.kind is MachineKind.CLASSICAL and self.gamma != 0.0:
            raise ValueError(f"Classical machine requires gamma = 0, got {self.gamma}")
        return self


class SweepSpec(BaseModel):
    """Specification of a hint-space sweep."""
    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "grid_min": -0.5,
                "grid_max": 0.5,
                "step": 0.01,
                "games_per_cell": 10000,
                "machines": ["cdm", "qdm"],
                "secrets": ["all"],
                "gamma_list": [0.0],
                "master_seed": 42,
            }
        }
    )

    grid_min: float = Field(-0.5, ge=-0.5, le=0.5, description="Lowest hint component")
    grid_max: float = Field(0.5, ge=-0.5, le=0.5, description="Highest hint component")
    step: float = Field(0.01, gt=0.0, description="Grid increment")
    games_per_cell: int = Field(10_000, ge=1, description="Games per (cell, secrets, machine)")
    machines: List[MachineKind] = Field(
        default_factory=lambda: [MachineKind.CLASSICAL, MachineKind.QUANTUM],
        description="Machines to evaluate",
    )
    secrets: List[str] = Field(default_factory=lambda: ["all"], description="Secrets pairs, or 'all'")
    gamma_list: List[float] = Field(default_factory=lambda: [0.0], description="Dephasing rates")
    master_seed: int = Field(..., ge=0, lt=SEED_LIMIT, description="64-bit master seed")
    xi: float = Field(1.0, gt=0.0, description="Score scale")
    alpha: int = Field(0, ge=0, le=1, description="Fiducial ancilla bit")

    @field_validator("secrets")
    @classmethod
    def _expand_secrets(cls, value: List[str]) -> List[str]:
        labels: List[str] = []
        for item in value:
            if item == "all":
                candidates = [bits.label for bits in ALL_SECRETS]
            else:
                candidates = [SecretBits.parse(item).label]
            labels.extend(label for label in candidates if label not in labels)
        if not labels:
            raise ValueError("At least one secrets pair is required")
        return labels

    @field_validator("machines")
    @classmethod
    def _unique_machines(cls, value: List[MachineKind]) -> List[MachineKind]:
        if not value:
            raise ValueError("At least one machine is required")
        return list(dict.fromkeys(value))

    @field_validator("gamma_list")
    @classmethod
    def _check_gammas(cls, value: List[float]) -> List[float]:
        if not value:
            raise ValueError("gamma_list must not be empty")
        for gamma in value:
            if not (0.0 <= gamma <= 1.0):
                raise ValueError(f"Dephasing rate must lie in [0, 1], got {gamma}")
        return value

    @model_validator(mode="after")
    def _check_bounds(self):
        if self.grid_min > self.grid_max:
            raise ValueError(f"grid_min {self.grid_min} exceeds grid_max {self.grid_max}")
        return self

    def hint_values(self) -> List[float]:
        return inclusive_range(self.grid_min, self.grid_max, self.step)

    def secret_bits(self) -> List[SecretBits]:
        return [SecretBits.parse(label) for label in self.secrets]


class SymmetricLineSpec(SweepSpec):
    """Walk along the symmetric-hint rays; positive h is Good, negative h is Poor."""

    quality: LineQuality = Field(LineQuality.BOTH, description="Which rays to walk")
    h_values: Optional[List[float]] = Field(None, description="Signed symmetric hints")

    @field_validator("h_values")
    @classmethod
    def _check_h_values(cls, value: Optional[List[float]]) -> Optional[List[float]]:
        if value is not None:
            for h in value:
                if not (-0.5 <= h <= 0.5):
                    raise ValueError(f"Symmetric hint must lie in [-1/2, 1/2], got {h}")
        return value

    @model_validator(mode="after")
    def _check_orientation(self):
        if self.h_values is None:
            return self
        if self.quality is LineQuality.GOOD and any(h < 0 for h in self.h_values):
            raise ValueError("Good-quality line takes non-negative h values only")
        if self.quality is LineQuality.POOR and any(h > 0 for h in self.h_values):
            raise ValueError("Poor-quality line takes non-positive h values only")
        return self

    def signed_values(self) -> List[float]:
        """Signed hints to evaluate, Poor side first, in ascending order."""
        if self.h_values is not None:
            return list(self.h_values)
        magnitudes = inclusive_range(0.0, 0.5, self.step)
        poor = [-m for m in reversed(magnitudes) if m > 0]
        if self.quality is LineQuality.GOOD:
            return magnitudes
        if self.quality is LineQuality.POOR:
            return poor + [0.0]
        return poor + magnitudes


class RunRecord(BaseModel):
    """One sweep cell: Monte Carlo estimate next to its analytic reference."""
    model_config = ConfigDict(frozen=True)

    experiment: ExperimentTag
    machine: MachineKind
    x0: int = Field(..., ge=0, le=1)
    x1: int = Field(..., ge=0, le=1)
    h0: float = Field(..., ge=-0.5, le=0.5)
    h1: float = Field(..., ge=-0.5, le=0.5)
    gamma: float = Field(..., ge=0.0, le=1.0)
    delta: float
    n_games: int = Field(..., ge=0)
    mean_score: float
    std_err: float = Field(..., ge=0.0)
    analytic_score: float
    xi: float = Field(1.0, gt=0.0, exclude=True, description="Score scale; not written to CSV")

    @model_validator(mode="after")
    def _scores_within_scale(self):
        for name in ("mean_score", "analytic_score"):
            value = getattr(self, name)
            if abs(value) > self.xi + SCORE_SLACK:
                raise ValueError(f"{name} {value} exceeds the score scale xi = {self.xi}")
        return self

    def as_row(self) -> dict:
        row = self.model_dump()
        row["experiment"] = self.experiment.value
        row["machine"] = self.machine.value
        return row


class SummaryStats(BaseModel):
    """Aggregate agreement between Monte Carlo and analytic scores for one experiment."""

    experiment: str
    cell_count: int
    total_games: int
    max_deviation_se: float = Field(..., description="max |mean - analytic| / std_err")
    fraction_within_5se: float

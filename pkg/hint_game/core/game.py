"""
Rules of the secret-bit guessing game.

Alice writes two secret bits, Bob guesses both and scores +xi/2 per correct
guess and -xi/2 per wrong one. Bob's machine runs two operations u_0, u_1 on
an ancilla; each deterministic (u_0, u_1) pair realizes one of four guess
functions (the tau-cases), and hints bias the machine toward one of them.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

from ..common.enums import HintQuality, OperationKind
from ..common.exceptions import DomainError

logger = logging.getLogger(__name__)


def _check_bit(value: int, name: str) -> int:
    if value not in (0, 1) or isinstance(value, bool):
        raise DomainError(f"{name} must be 0 or 1, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class SecretBits:
    """Alice's secret bits (x0, x1)."""

    x0: int
    x1: int

    def __post_init__(self):
        _check_bit(self.x0, "x0")
        _check_bit(self.x1, "x1")

    @classmethod
    def parse(cls, text: str) -> "SecretBits":
        """Parse the two-character form used on the command line, e.g. '01'."""
        if len(text) != 2 or any(ch not in "01" for ch in text):
            raise DomainError(f"Secrets must be one of 00, 01, 10, 11; got {text!r}")
        return cls(int(text[0]), int(text[1]))

    @property
    def label(self) -> str:
        return f"{self.x0}{self.x1}"

    def flipped(self) -> "SecretBits":
        return SecretBits(1 - self.x0, 1 - self.x1)

    def __iter__(self):
        return iter((self.x0, self.x1))


ALL_SECRETS: Tuple[SecretBits, ...] = tuple(
    SecretBits(x0, x1) for x0 in (0, 1) for x1 in (0, 1)
)


@dataclass(frozen=True)
class Guess:
    """Bob's guesses (y0, y1)."""

    y0: int
    y1: int

    def __post_init__(self):
        _check_bit(self.y0, "y0")
        _check_bit(self.y1, "y1")

    def flipped(self) -> "Guess":
        return Guess(1 - self.y0, 1 - self.y1)


@dataclass(frozen=True)
class HintVector:
    """Biases (h0, h1) added to the 1/2-1/2 operation preferences."""

    h0: float
    h1: float

    def __post_init__(self):
        for name in ("h0", "h1"):
            value = getattr(self, name)
            if not (-0.5 <= value <= 0.5):
                raise DomainError(f"{name} must lie in [-1/2, 1/2], got {value}")
            # normalise -0.0 so the exact zero tests and CSV output agree
            object.__setattr__(self, name, float(value) + 0.0)

    def __neg__(self) -> "HintVector":
        return HintVector(-self.h0, -self.h1)

    def __iter__(self):
        return iter((self.h0, self.h1))


@dataclass(frozen=True)
class TauCase:
    """One deterministic operation pair (u0, u1) and the guess function it realizes."""

    tau: int
    u0_kind: OperationKind
    u1_kind: OperationKind

    def outcome(self, kappa: int, alpha: int = 0) -> int:
        """Measured ancilla bit m_kappa: u0 always acts, u1 only when kappa == 1."""
        bit = self.u0_kind.apply(alpha)
        if kappa == 1:
            bit = self.u1_kind.apply(bit)
        return bit

    def guess(self, alpha: int = 0) -> Guess:
        return Guess(self.outcome(0, alpha) ^ alpha, self.outcome(1, alpha) ^ alpha)


TAU_CASES: Tuple[TauCase, ...] = (
    TauCase(1, OperationKind.IDENTITY, OperationKind.IDENTITY),
    TauCase(2, OperationKind.IDENTITY, OperationKind.NOT),
    TauCase(3, OperationKind.NOT, OperationKind.IDENTITY),
    TauCase(4, OperationKind.NOT, OperationKind.NOT),
)


def tau_case(tau: int) -> TauCase:
    if tau not in (1, 2, 3, 4):
        raise DomainError(f"tau must be one of 1..4, got {tau}")
    return TAU_CASES[tau - 1]


@dataclass(frozen=True)
class ScoreTable:
    """Score scale: +xi/2 per correct guess, -xi/2 per wrong guess."""

    xi: float = 1.0

    def __post_init__(self):
        if not self.xi > 0:
            raise DomainError(f"Score scale xi must be positive, got {self.xi}")


def preferences_from_hint(h: HintVector) -> Tuple[float, float]:
    """
    Map a hint vector to identity preferences P(u_j -> identity) = 1/2 + h_j.

    Args:
        h: Hint vector with components in [-1/2, 1/2]

    Returns:
        Tuple (p0, p1) of identity probabilities
    """
    if not isinstance(h, HintVector):
        h = HintVector(*h)
    return 0.5 + h.h0, 0.5 + h.h1


def score(secrets: SecretBits, guess: Guess, table: ScoreTable = ScoreTable()) -> float:
    """Bob's score for one game: one of -xi, 0, +xi."""
    half = table.xi / 2.0
    total = 0.0
    for x, y in ((secrets.x0, guess.y0), (secrets.x1, guess.y1)):
        total += half if x == y else -half
    return total


def correct_tau(secrets: SecretBits) -> TauCase:
    """The unique deterministic pair whose guesses equal the secrets (at alpha = 0)."""
    for case in TAU_CASES:
        if case.outcome(0) == secrets.x0 and case.outcome(1) == secrets.x1:
            return case
    raise DomainError(f"No tau-case realizes secrets {secrets}")  # unreachable for valid bits


def secrets_for_tau(tau: TauCase) -> SecretBits:
    """Secrets guessed correctly by the given tau-case."""
    return SecretBits(tau.outcome(0), tau.outcome(1))


def _orientation(secrets: SecretBits) -> Tuple[int, int]:
    case = correct_tau(secrets)
    return tuple(1 if kind is OperationKind.IDENTITY else -1 for kind in (case.u0_kind, case.u1_kind))


def classify_hint(h: HintVector, secrets: SecretBits) -> HintQuality:
    """
    Classify a hint against the secrets.

    y0 leans with sign(h0) and y1 with sign(h0*h1), so a hint helps both
    guesses on the quadrant (s0, s1) of the correct pair and misleads both on
    the mirrored quadrant (-s0, s1).
    """
    if h.h0 == 0.0 and h.h1 == 0.0:
        return HintQuality.NEUTRAL
    s0, s1 = _orientation(secrets)
    lean0, lean1 = s0 * h.h0, s1 * h.h1
    if lean1 > 0:
        if lean0 > 0:
            return HintQuality.GOOD
        if lean0 < 0:
            return HintQuality.POOR
    return HintQuality.MIXED


def symmetric_hint(h: float, secrets: SecretBits) -> HintVector:
    """
    Symmetric hint |h0| = |h1| = |h| on the Good ray (h > 0) or Poor ray (h < 0).
    """
    if not (-0.5 <= h <= 0.5):
        raise DomainError(f"Symmetric hint must lie in [-1/2, 1/2], got {h}")
    s0, s1 = _orientation(secrets)
    magnitude = abs(h)
    if h < 0:
        s0 = -s0
    return HintVector(s0 * magnitude, s1 * magnitude)

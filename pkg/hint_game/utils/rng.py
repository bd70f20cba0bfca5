"""
Deterministic random streams.

Every stream is numpy's PCG64 bit generator, whose output is specified and
identical across platforms. Child streams are keyed by name: the child seed is
the first 8 bytes of SHA-256 over "<parent seed>:<key>", so a sweep cell gets
the same samples no matter which thread evaluates it or in what order.
"""

import hashlib
import secrets
from dataclasses import dataclass, field

import numpy as np

from ..common.exceptions import DomainError

SEED_LIMIT = 2 ** 64


def hash_to_u64(text: str) -> int:
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big", signed=False)


def fresh_seed() -> int:
    """A new 64-bit seed drawn from the OS entropy pool."""
    return secrets.randbits(64)


def check_seed(seed: int) -> int:
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise DomainError(f"Seed must be an integer, got {seed!r}")
    seed = int(seed)
    if not (0 <= seed < SEED_LIMIT):
        raise DomainError(f"Seed must be a 64-bit unsigned value, got {seed}")
    return seed


@dataclass
class RngStream:
    """A seeded uniform-[0, 1) stream."""

    seed: int
    generator: np.random.Generator = field(init=False, repr=False)

    def __post_init__(self):
        self.seed = check_seed(self.seed)
        self.generator = np.random.Generator(np.random.PCG64(self.seed))

    def uniforms(self, *shape: int) -> np.ndarray:
        """Draw uniforms in C order; (n, 2) consumes the same values as n draws of (2,)."""
        return self.generator.random(shape)

    def child_seed(self, *key) -> int:
        if not key:
            raise DomainError("Substream key must be non-empty")
        return hash_to_u64(f"{self.seed}:" + ":".join(str(part) for part in key))

    def substream(self, *key) -> "RngStream":
        """Independent stream derived from this stream's seed and a key, not its state."""
        return RngStream(self.child_seed(*key))

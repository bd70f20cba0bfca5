"""Scalar sweep ranges: `min:max:step` ranges and comma-separated lists."""

import logging
from typing import List

import numpy as np

from ..common.exceptions import DomainError

logger = logging.getLogger(__name__)

# grid points are snapped to this many decimals so that e.g. -0.5 + 50*0.01 is exactly 0.0
SNAP_DECIMALS = 12


def inclusive_range(start: float, stop: float, step: float) -> List[float]:
    """
    Values start, start+step, ... up to and including stop.

    Args:
        start: First value
        stop: Last value (included when reachable within rounding)
        step: Positive increment

    Returns:
        List of floats snapped to SNAP_DECIMALS decimals
    """
    if not step > 0:
        raise DomainError(f"Range step must be positive, got {step}")
    if stop < start:
        raise DomainError(f"Range stop {stop} is below start {start}")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    values = np.round(start + step * np.arange(count), SNAP_DECIMALS) + 0.0
    return [float(v) for v in values]


def parse_range(text: str) -> List[float]:
    """Parse `min:max:step` or a comma list such as `0,0.25,0.5`."""
    text = text.strip()
    try:
        if ":" in text:
            parts = text.split(":")
            if len(parts) != 3:
                raise DomainError(f"Range must look like min:max:step, got {text!r}")
            start, stop, step = (float(part) for part in parts)
            return inclusive_range(start, stop, step)
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        if isinstance(e, DomainError):
            raise
        raise DomainError(f"Cannot parse numeric values from {text!r}") from e
    if not values:
        raise DomainError("Empty value list")
    return values

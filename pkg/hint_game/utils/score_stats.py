import logging
from typing import Tuple

import numpy as np

logger = logging.getLogger(__name__)


def mean_and_std_err(scores: np.ndarray) -> Tuple[float, float]:
    """
    Sample mean and standard error of the mean.

    The standard error uses the unbiased sample deviation (ddof=1) and is 0.0
    for a single game; an empty sample has mean and error 0.0.

    Args:
        scores: One-dimensional array of per-game scores

    Returns:
        Tuple of (mean, std_err)
    """
    scores = np.asarray(scores, dtype=float)
    n = scores.shape[0]
    if n == 0:
        return 0.0, 0.0
    mean = float(scores.mean())
    if n == 1:
        return mean, 0.0
    return mean, float(scores.std(ddof=1) / np.sqrt(n))


def deviation_in_se(mean: float, reference: float, std_err: float) -> float:
    """|mean - reference| in units of std_err; a zero-error cell counts only exact agreement."""
    gap = abs(mean - reference)
    if std_err > 0:
        return gap / std_err
    return 0.0 if gap <= 1e-12 else float("inf")

"""
Output path management and atomic CSV emission.
"""

import logging
import os
import tempfile
from pathlib import Path
from typing import Optional, Union

import pandas as pd

from ..common.exceptions import OutputError

logger = logging.getLogger(__name__)

CSV_FLOAT_FORMAT = "%.17g"


def get_results_path(experiment: str, out: Optional[Union[str, Path]] = None,
                     base_dir: Union[str, Path] = "results") -> Path:
    """
    Resolve where an experiment's CSV goes.

    Args:
        experiment: Experiment tag, used as the default file stem
        out: Explicit output path from the caller, if any
        base_dir: Directory for default file names

    Returns:
        Path of the CSV file
    """
    if out is not None:
        return Path(out)
    return Path(base_dir) / f"{experiment}.csv"


def write_csv_atomic(frame: pd.DataFrame, path: Union[str, Path]) -> Path:
    """
    Write a frame as CSV in one step: the file either appears complete or not at all.

    Floats are written with 17 significant digits so they round-trip exactly.

    Raises:
        OutputError: if the directory cannot be created or the file written
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise OutputError(path, e.strerror or str(e)) from e

    tmp_name = None
    try:
        fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
        with os.fdopen(fd, "w", newline="") as handle:
            frame.to_csv(handle, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
        os.replace(tmp_name, path)
    except OSError as e:
        if tmp_name is not None and os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise OutputError(path, e.strerror or str(e)) from e

    logger.info(f"Wrote {len(frame)} records to {path}")
    return path

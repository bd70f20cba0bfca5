"""
Experiment harnesses: hint-grid sweep, symmetric-hint line and decoherence sweep.

Every harness expands its spec into an ordered list of cells, evaluates the
cells on a thread pool and collects the records in cell order. A cell draws
its games from a substream keyed by (experiment, machine, secrets, indices,
gamma index) under the master seed, so the output depends on the sweep spec alone,
never on the thread count or on completion order.

Classical machines have no coherence to lose: they get one cell per hint at
gamma = 0 whatever the gamma list, and quantum machines one cell per
(hint, gamma).
"""

import concurrent.futures
import logging
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple, Union

import pandas as pd

from ..common.enums import ExperimentTag, LineQuality, MachineKind
from ..common.exceptions import ConfigurationError, DomainError
from ..utils.rng import RngStream
from ..utils.score_stats import deviation_in_se, mean_and_std_err
from ..utils.storage_utils import write_csv_atomic
from . import analytic, qcore
from .game import HintVector, SecretBits, symmetric_hint
from .machines import play_batch
from .models import CSV_COLUMNS, MachineConfig, RunRecord, SummaryStats, SweepSpec, SymmetricLineSpec

logger = logging.getLogger(__name__)

SE_BAND = 5.0


@dataclass(frozen=True)
class Cell:
    """One unit of work: a machine, secrets, hint and rate, plus its substream key."""

    experiment: ExperimentTag
    machine: MachineKind
    secrets: SecretBits
    hint: HintVector
    gamma: float
    key: Tuple


def _gamma_choices(machine: MachineKind, gamma_list: Sequence[float]) -> List[Tuple[int, float]]:
    if machine is MachineKind.CLASSICAL:
        return [(0, 0.0)]
    return list(enumerate(gamma_list))


def grid_cells(spec: SweepSpec) -> List[Cell]:
    """Cells of the square hint grid, ordered machine, secrets, gamma, h0, h1."""
    values = spec.hint_values()
    cells: List[Cell] = []
    for machine in spec.machines:
        for secrets in spec.secret_bits():
            for g, gamma in _gamma_choices(machine, spec.gamma_list):
                for i, h0 in enumerate(values):
                    for j, h1 in enumerate(values):
                        cells.append(Cell(
                            experiment=ExperimentTag.GRID,
                            machine=machine,
                            secrets=secrets,
                            hint=HintVector(h0, h1),
                            gamma=gamma,
                            key=(ExperimentTag.GRID.value, machine.value, secrets.label, i, j, g),
                        ))
    return cells


def line_cells(spec: SymmetricLineSpec, tag: ExperimentTag) -> List[Cell]:
    """Cells along the symmetric rays, ordered machine, secrets, gamma, signed h."""
    values = spec.signed_values()
    cells: List[Cell] = []
    for machine in spec.machines:
        for secrets in spec.secret_bits():
            for g, gamma in _gamma_choices(machine, spec.gamma_list):
                for i, h in enumerate(values):
                    cells.append(Cell(
                        experiment=tag,
                        machine=machine,
                        secrets=secrets,
                        hint=symmetric_hint(h, secrets),
                        gamma=gamma,
                        key=(tag.value, machine.value, secrets.label, i, g),
                    ))
    return cells


def evaluate_cell(cell: Cell, spec: SweepSpec, root: RngStream, analytic_only: bool = False) -> RunRecord:
    """
    Play one cell's games and pair the estimate with its analytic score.

    With analytic_only the record carries n_games = 0, std_err = 0 and
    mean_score equal to the analytic score.
    """
    reference = analytic.expected_score(cell.machine, cell.hint, cell.secrets, cell.gamma, spec.xi)
    if analytic_only:
        n_games, mean, std_err = 0, reference, 0.0
    else:
        config = MachineConfig(
            kind=cell.machine,
            hint=cell.hint,
            alpha=spec.alpha,
            gamma=cell.gamma,
            xi=spec.xi,
        )
        batch = play_batch(config, cell.secrets, root.substream(*cell.key), spec.games_per_cell)
        n_games = len(batch)
        mean, std_err = mean_and_std_err(batch.scores)

    return RunRecord(
        experiment=cell.experiment,
        machine=cell.machine,
        x0=cell.secrets.x0,
        x1=cell.secrets.x1,
        h0=cell.hint.h0,
        h1=cell.hint.h1,
        gamma=cell.gamma,
        delta=float(qcore.phase_rule(cell.hint.h0, cell.hint.h1)),
        n_games=n_games,
        mean_score=mean,
        std_err=std_err,
        analytic_score=reference,
        xi=spec.xi,
    )


def run_cells(cells: Sequence[Cell], spec: SweepSpec, threads: int = 1,
              analytic_only: bool = False) -> List[RunRecord]:
    """
    Evaluate cells concurrently and return their records in cell order.

    Args:
        cells: Ordered cells
        spec: Spec supplying the seed, game count and scale
        threads: Worker threads (at least 1)
        analytic_only: Skip sampling and emit analytic records

    Returns:
        One RunRecord per cell, in the order of `cells`
    """
    if threads < 1:
        raise ConfigurationError(f"Thread count must be at least 1, got {threads}")
    root = RngStream(spec.master_seed)
    start = time.time()

    if threads == 1:
        records = [evaluate_cell(cell, spec, root, analytic_only) for cell in cells]
    else:
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as executor:
            futures = [executor.submit(evaluate_cell, cell, spec, root, analytic_only) for cell in cells]
            # Collect in submission order, not completion order
            records = [future.result() for future in futures]

    logger.info(f"Evaluated {len(records)} cells on {threads} thread(s) in {time.time() - start:.2f}s")
    return records


def run_grid(spec: SweepSpec, threads: int = 1, analytic_only: bool = False) -> List[RunRecord]:
    """
    Sweep the square hint grid.

    Emits one record per (machine, secrets, h0, h1) for the classical machine
    and per (machine, secrets, h0, h1, gamma) for the quantum one.
    """
    cells = grid_cells(spec)
    logger.info(f"Grid sweep: {len(spec.hint_values())}^2 hints, {len(cells)} cells, "
                f"{spec.games_per_cell} games per cell")
    return run_cells(cells, spec, threads, analytic_only)


def run_symmetric(spec: SymmetricLineSpec, threads: int = 1, analytic_only: bool = False) -> List[RunRecord]:
    """Walk the symmetric hint line; positive h follows the Good ray, negative h the Poor ray."""
    cells = line_cells(spec, ExperimentTag.SYMMETRIC)
    logger.info(f"Symmetric line ({spec.quality.value}): {len(spec.signed_values())} hints, {len(cells)} cells")
    return run_cells(cells, spec, threads, analytic_only)


def run_decoherence(spec: SymmetricLineSpec, threads: int = 1, analytic_only: bool = False) -> List[RunRecord]:
    """
    Sweep dephasing rates along the Good symmetric ray.

    Raises:
        ConfigurationError: if the sweep spec walks anything but the Good ray
    """
    if spec.quality is not LineQuality.GOOD:
        raise ConfigurationError(f"Decoherence sweep takes Good-quality hints only, got {spec.quality.value}")
    cells = line_cells(spec, ExperimentTag.DECOHERENCE)
    logger.info(f"Decoherence sweep: {len(spec.signed_values())} hints x {len(spec.gamma_list)} rates, "
                f"{len(cells)} cells")
    return run_cells(cells, spec, threads, analytic_only)


def records_to_frame(records: Iterable[RunRecord]) -> pd.DataFrame:
    """Records as a DataFrame with exactly the CSV columns, in CSV order."""
    rows = [record.as_row() for record in records]
    return pd.DataFrame(rows, columns=CSV_COLUMNS)


def write_records(records: Iterable[RunRecord], path: Union[str, Path]) -> Path:
    """Write records as CSV; the file appears complete or not at all."""
    return write_csv_atomic(records_to_frame(records), path)


def summarize(records: Sequence[RunRecord]) -> List[SummaryStats]:
    """
    Agreement between Monte Carlo and analytic scores, one summary per experiment tag.

    Raises:
        DomainError: on an empty record list
    """
    if not records:
        raise DomainError("Cannot summarize an empty record list")
    frame = records_to_frame(records)
    frame["deviation_se"] = [
        deviation_in_se(mean, reference, se)
        for mean, reference, se in zip(frame["mean_score"], frame["analytic_score"], frame["std_err"])
    ]

    summaries: List[SummaryStats] = []
    for experiment, group in frame.groupby("experiment", sort=False):
        summaries.append(SummaryStats(
            experiment=str(experiment),
            cell_count=int(len(group)),
            total_games=int(group["n_games"].sum()),
            max_deviation_se=float(group["deviation_se"].max()),
            fraction_within_5se=float((group["deviation_se"] <= SE_BAND).mean()),
        ))
    return summaries

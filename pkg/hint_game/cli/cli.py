#!/usr/bin/env python3
"""
Command-line interface for the hint game simulator.

Commands:
    grid         Monte Carlo sweep over the square hint grid
    symmetric    Monte Carlo walk along the symmetric Good/Poor hint rays
    decoherence  Monte Carlo sweep of dephasing rates on the Good ray
    analytic     Analytic-only records for any of the three experiments
    verify       Self-consistency suite

Exit codes: 0 on success, 1 on usage, configuration or output errors,
2 when verification fails.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from ..common.enums import ExperimentTag, LineQuality, MachineKind
from ..common.exceptions import HintGameError, UsageError, VerificationError
from ..config.config import (
    get_game_config,
    get_log_file,
    get_log_level,
    get_output_dir,
    get_sweep_defaults,
    get_thread_count,
    get_verify_config,
)
from ..core.experiments import run_decoherence, run_grid, run_symmetric, summarize, write_records
from ..core.models import RunRecord, SweepSpec, SymmetricLineSpec
from ..core.verification import run_verification
from ..utils.ranges import parse_range
from ..utils.rng import fresh_seed
from ..utils.storage_utils import get_results_path

logger = logging.getLogger(__name__)
console = Console(stderr=True)

SECRETS_CHOICES = ["00", "01", "10", "11", "all"]
MACHINE_CHOICES = ["cdm", "qdm", "both"]
EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2

EXPERIMENTS = tuple(tag.value for tag in ExperimentTag)
SHAPE_FLAGS = ("--min", "--max", "--step", "--quality", "--h")
# shape flags each analytic experiment accepts
EXPERIMENT_FLAGS = {
    ExperimentTag.GRID.value: {"--min", "--max", "--step"},
    ExperimentTag.SYMMETRIC.value: {"--step", "--quality", "--h"},
    ExperimentTag.DECOHERENCE.value: {"--h"},
}


class HintGameArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting on bad input."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def value_list(text: str) -> List[float]:
    """`min:max:step` range or comma list."""
    return parse_range(text)


def setup_logging() -> None:
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    log_file = get_log_file()
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=get_log_level(),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
    )


class ExplicitStore(argparse.Action):
    """Store the value and record the flag in `explicit_flags`, so defaults stay distinguishable."""

    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, values)
        given = set(getattr(namespace, "explicit_flags", set()))
        given.add(option_string)
        namespace.explicit_flags = given


def _given(args, flag: str) -> bool:
    return flag in getattr(args, "explicit_flags", set())


def _add_common(parser: argparse.ArgumentParser, games_default: Optional[int]) -> None:
    game = get_game_config()
    parser.add_argument("--machine", choices=MACHINE_CHOICES, default="both", help="Machine(s) to run")
    if games_default is not None:
        parser.add_argument("--games", type=int, default=games_default, help="Games per cell")
    parser.add_argument("--seed", type=int, default=None,
                        help="64-bit master seed (generated and printed when omitted)")
    parser.add_argument("--out", default=None,
                        help="Output CSV path (default: <output dir>/<experiment>.csv)")
    parser.add_argument("--threads", type=int, default=None,
                        help="Worker threads, 0 = one per CPU (default: runtime.threads from config)")
    parser.add_argument("--xi", type=float, default=float(game.get("xi", 1.0)), help="Score scale")
    parser.add_argument("--alpha", type=int, choices=[0, 1], default=int(game.get("alpha", 0)),
                        help="Fiducial ancilla bit")


def _add_gammas(parser: argparse.ArgumentParser, default: Optional[List[float]], help_suffix: str = "") -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--gamma", type=float, default=None, help="Single dephasing rate")
    group.add_argument("--gammas", type=value_list, default=default,
                       help="Dephasing rates as min:max:step or a comma list" + help_suffix)


def _add_grid_flags(parser: argparse.ArgumentParser, defaults: dict) -> None:
    parser.add_argument("--secrets", choices=SECRETS_CHOICES, default=defaults.get("secrets", "all"),
                        help="Alice's secrets")
    parser.add_argument("--min", type=float, action=ExplicitStore, default=defaults.get("min", -0.5),
                        help="Lowest hint component")
    parser.add_argument("--max", type=float, action=ExplicitStore, default=defaults.get("max", 0.5),
                        help="Highest hint component")
    parser.add_argument("--step", type=float, action=ExplicitStore, default=defaults.get("step", 0.01),
                        help="Grid increment")
    _add_gammas(parser, list(defaults.get("gammas", [0.0])))


def _add_symmetric_flags(parser: argparse.ArgumentParser, defaults: dict) -> None:
    parser.add_argument("--secrets", choices=SECRETS_CHOICES, default=defaults.get("secrets", "all"),
                        help="Alice's secrets")
    parser.add_argument("--quality", choices=[q.value for q in LineQuality], action=ExplicitStore,
                        default=defaults.get("quality", "both"), help="Which symmetric rays to walk")
    parser.add_argument("--h", type=value_list, action=ExplicitStore, default=None,
                        help="Signed symmetric hints (positive = Good, negative = Poor); "
                             "default walks |h| = 0..1/2 in --step increments")
    parser.add_argument("--step", type=float, action=ExplicitStore, default=defaults.get("step", 0.01),
                        help="Increment of |h| when --h is not given")
    _add_gammas(parser, [0.0])


def _add_decoherence_flags(parser: argparse.ArgumentParser, defaults: dict) -> None:
    parser.add_argument("--secrets", choices=SECRETS_CHOICES, default=defaults.get("secrets", "00"),
                        help="Alice's secrets")
    parser.add_argument("--h", type=value_list, action=ExplicitStore,
                        default=parse_range(str(defaults.get("h", "0.0:0.5:0.01"))),
                        help="Good-ray symmetric hints as min:max:step or a comma list")
    _add_gammas(parser, list(defaults.get("gammas", [0.0, 0.25, 0.5, 0.75, 1.0])))


def _fallbacks(key: str, sections=EXPERIMENTS, fallback=None) -> str:
    """Per-experiment defaults of one flag for the analytic help text."""
    parts = []
    for section in sections:
        value = get_sweep_defaults(section).get(key, fallback)
        if value is not None:
            parts.append(f"{section}: {value}")
    return f" (default per experiment, {'; '.join(parts)})" if parts else ""


def _add_analytic_flags(parser: argparse.ArgumentParser) -> None:
    grid, symmetric, decoherence = EXPERIMENTS
    parser.add_argument("--experiment", choices=list(EXPERIMENTS), default=grid,
                        help="Experiment whose cells to evaluate (default: grid)")
    parser.add_argument("--secrets", choices=SECRETS_CHOICES,
                        help="Alice's secrets" + _fallbacks("secrets"))
    parser.add_argument("--min", type=float, action=ExplicitStore,
                        help="Lowest hint component, grid only" + _fallbacks("min", [grid]))
    parser.add_argument("--max", type=float, action=ExplicitStore,
                        help="Highest hint component, grid only" + _fallbacks("max", [grid]))
    parser.add_argument("--step", type=float, action=ExplicitStore,
                        help="Grid or |h| increment, grid and symmetric only" + _fallbacks("step", [grid, symmetric]))
    parser.add_argument("--quality", choices=[q.value for q in LineQuality], action=ExplicitStore,
                        help="Rays, symmetric only" + _fallbacks("quality", [symmetric]))
    parser.add_argument("--h", type=value_list, action=ExplicitStore,
                        help="Symmetric hints, symmetric and decoherence only (default per experiment, "
                             f"symmetric: walk |h| by --step; decoherence: {get_sweep_defaults(decoherence).get('h')})")
    _add_gammas(parser, None, _fallbacks("gammas", fallback=[0.0]))
    _add_common(parser, None)


def build_parser() -> HintGameArgumentParser:
    """Build the argument parser; defaults come from the loaded configuration."""
    formatter = argparse.ArgumentDefaultsHelpFormatter
    parser = HintGameArgumentParser(
        prog="hint-game",
        description="Quantum vs classical decision-making machines in the secret-bit guessing game",
        formatter_class=formatter,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    grid_defaults = get_sweep_defaults("grid")
    grid = subparsers.add_parser("grid", help="Sweep the square hint grid", formatter_class=formatter)
    _add_grid_flags(grid, grid_defaults)
    _add_common(grid, int(grid_defaults.get("games_per_cell", 10000)))

    symmetric_defaults = get_sweep_defaults("symmetric")
    symmetric = subparsers.add_parser("symmetric", help="Walk the symmetric Good/Poor hint rays",
                                      formatter_class=formatter)
    _add_symmetric_flags(symmetric, symmetric_defaults)
    _add_common(symmetric, int(symmetric_defaults.get("games_per_cell", 10000)))

    decoherence_defaults = get_sweep_defaults("decoherence")
    decoherence = subparsers.add_parser("decoherence", help="Sweep dephasing rates on the Good ray",
                                        formatter_class=formatter)
    _add_decoherence_flags(decoherence, decoherence_defaults)
    _add_common(decoherence, int(decoherence_defaults.get("games_per_cell", 10000)))

    # Flags default to None here and take the chosen experiment's defaults later,
    # so the help text lists those per-experiment defaults itself.
    analytic = subparsers.add_parser(
        "analytic",
        help="Analytic records (n_games = 0) for an experiment",
        description="Emit analytic records in the experiment CSV schema. Flags not given take "
                    "the chosen experiment's defaults.",
    )
    _add_analytic_flags(analytic)

    verify_defaults = get_verify_config()
    verify = subparsers.add_parser("verify", help="Run the self-consistency suite", formatter_class=formatter)
    verify.add_argument("--trials", type=int, default=int(verify_defaults.get("trials", 1000)),
                        help="Random tuples for the oracle check")
    verify.add_argument("--seed", type=int, default=None, help="Seed (generated and printed when omitted)")
    verify.add_argument("--tolerance", type=float, default=float(verify_defaults.get("tolerance", 1e-12)),
                        help="Largest absolute disagreement accepted")
    return parser


def _resolve_seed(seed: Optional[int]) -> int:
    if seed is None:
        seed = fresh_seed()
        console.print(f"No --seed given; using seed {seed}", style="yellow")
    return seed


def _machines(choice: str) -> List[MachineKind]:
    if choice == "both":
        return [MachineKind.CLASSICAL, MachineKind.QUANTUM]
    return [MachineKind(choice)]


def _gamma_list(args) -> List[float]:
    return [args.gamma] if args.gamma is not None else list(args.gammas)


def _threads(requested: Optional[int]) -> int:
    if requested is None:
        return get_thread_count()
    if requested < 0:
        raise UsageError(f"--threads must be non-negative, got {requested}")
    return requested or (os.cpu_count() or 1)


def check_flag_conflicts(experiment: str, args) -> None:
    """
    Reject flags that conflict with each other or do not apply to the experiment.

    Raises:
        UsageError: naming both sides of the conflict
    """
    if args.command == "analytic":
        for flag in SHAPE_FLAGS:
            if _given(args, flag) and flag not in EXPERIMENT_FLAGS[experiment]:
                raise UsageError(f"{flag} cannot be combined with --experiment {experiment}")

    if experiment == ExperimentTag.SYMMETRIC.value:
        if _given(args, "--h") and _given(args, "--step"):
            raise UsageError("--h and --step cannot be used together; --step only spaces the default |h| walk")
        quality = args.quality
        for h in args.h or []:
            if (quality == LineQuality.GOOD.value and h < 0) or (quality == LineQuality.POOR.value and h > 0):
                raise UsageError(f"--h value {h} is on the other ray from --quality {quality}")

    if experiment == ExperimentTag.DECOHERENCE.value:
        for h in args.h or []:
            if h < 0:
                raise UsageError(f"--h value {h} is on the Poor ray; decoherence takes non-negative --h values")


def _fill_analytic_defaults(args) -> None:
    """Take any flag the analytic command left unset from the chosen experiment's defaults."""
    defaults = get_sweep_defaults(args.experiment)
    if args.secrets is None:
        args.secrets = defaults.get("secrets", "all")
    if args.experiment == ExperimentTag.GRID.value:
        args.min = defaults.get("min", -0.5) if args.min is None else args.min
        args.max = defaults.get("max", 0.5) if args.max is None else args.max
    if args.step is None:
        args.step = defaults.get("step", 0.01)
    if args.quality is None:
        args.quality = defaults.get("quality", "both")
    if args.experiment == ExperimentTag.DECOHERENCE.value and args.h is None:
        args.h = parse_range(str(defaults.get("h", "0.0:0.5:0.01")))
    if args.gamma is None and args.gammas is None:
        args.gammas = list(defaults.get("gammas", [0.0]))


def _spec_kwargs(args, seed: int, games: int) -> dict:
    return dict(
        machines=_machines(args.machine),
        secrets=[args.secrets],
        games_per_cell=games,
        gamma_list=_gamma_list(args),
        master_seed=seed,
        xi=args.xi,
        alpha=args.alpha,
    )


def run_experiment(experiment: str, args, seed: int, analytic_only: bool = False) -> List[RunRecord]:
    """Build the sweep spec for one experiment from parsed flags and run it."""
    threads = _threads(args.threads)
    # analytic records carry n_games = 0; the sweep spec still needs a positive count
    kwargs = _spec_kwargs(args, seed, 1 if analytic_only else args.games)
    if experiment == ExperimentTag.GRID.value:
        spec = SweepSpec(grid_min=args.min, grid_max=args.max, step=args.step, **kwargs)
        return run_grid(spec, threads=threads, analytic_only=analytic_only)
    if experiment == ExperimentTag.SYMMETRIC.value:
        spec = SymmetricLineSpec(quality=LineQuality(args.quality), h_values=args.h, step=args.step, **kwargs)
        return run_symmetric(spec, threads=threads, analytic_only=analytic_only)
    spec = SymmetricLineSpec(quality=LineQuality.GOOD, h_values=args.h, **kwargs)
    return run_decoherence(spec, threads=threads, analytic_only=analytic_only)


def _print_summary(records: List[RunRecord]) -> None:
    table = Table(title="Monte Carlo vs analytic")
    for column in ("experiment", "cells", "games", "max |dev| / SE", "within 5 SE"):
        table.add_column(column)
    for summary in summarize(records):
        table.add_row(
            summary.experiment,
            str(summary.cell_count),
            str(summary.total_games),
            f"{summary.max_deviation_se:.2f}",
            f"{100 * summary.fraction_within_5se:.2f}%",
        )
    console.print(table)


def _print_verification(report) -> None:
    table = Table(title=f"Verification (seed {report.seed})")
    for column in ("check", "samples", "max error", "result"):
        table.add_column(column)
    for check in report.checks:
        verdict = "[green]pass[/green]" if check.passed else "[red]FAIL[/red]"
        table.add_row(check.name, str(check.samples), f"{check.max_error:.3e}", verdict)
    console.print(table)


def dispatch(args) -> int:
    if args.command == "analytic":
        _fill_analytic_defaults(args)
        check_flag_conflicts(args.experiment, args)
    elif args.command != "verify":
        check_flag_conflicts(args.command, args)
    seed = _resolve_seed(args.seed)

    if args.command == "verify":
        verify_defaults = get_verify_config()
        report = run_verification(
            trials=args.trials,
            seed=seed,
            tolerance=args.tolerance,
            pipeline_samples=int(verify_defaults.get("pipeline_samples", 100)),
            null_samples=int(verify_defaults.get("null_samples", 100)),
        )
        _print_verification(report)
        try:
            report.raise_for_failure()
        except VerificationError as e:
            console.print(str(e), style="red", markup=False)
            return EXIT_VERIFY
        return EXIT_OK

    if args.command == "analytic":
        experiment = args.experiment
        records = run_experiment(experiment, args, seed, analytic_only=True)
        stem = f"analytic_{experiment}"
    else:
        experiment = args.command
        records = run_experiment(experiment, args, seed)
        stem = experiment

    path = write_records(records, get_results_path(stem, args.out, get_output_dir()))
    console.print(f"Wrote {len(records)} records to {path}", style="green", markup=False)
    if args.command != "analytic" and records:
        _print_summary(records)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments and dispatch.

    Args:
        argv: Argument vector without the program name (default: sys.argv[1:])

    Returns:
        Process exit code
    """
    setup_logging()
    try:
        args = build_parser().parse_args(argv)
        return dispatch(args)
    except UsageError as e:
        console.print(f"Usage error: {e}", style="red", markup=False)
        return EXIT_USAGE
    except ValidationError as e:
        console.print(f"Invalid arguments: {e}", style="red", markup=False)
        return EXIT_USAGE
    except HintGameError as e:
        console.print(f"Error: {e}", style="red", markup=False)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

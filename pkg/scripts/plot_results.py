#!/usr/bin/env python3
"""
Sample plotting script for hint-game CSV output.

    python scripts/plot_results.py results/grid.csv --secrets 00 --out grid.png
    python scripts/plot_results.py results/symmetric.csv --secrets 00 --out symmetric.png
    python scripts/plot_results.py results/decoherence.csv --secrets 00 --out decoherence.png

Requires the `visualization` extra (matplotlib).
"""

import argparse
import sys

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402

golden_mean = (np.sqrt(5) - 1.0) / 2.0
fig_width = 7.1
params = {
    "axes.labelsize": 10,
    "font.size": 9,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "figure.figsize": [fig_width, fig_width * golden_mean],
    "figure.dpi": 150,
    "lines.markersize": 3,
    "lines.linewidth": 1,
}
plt.rcParams.update(params)


def _select_secrets(frame: pd.DataFrame, secrets: str) -> pd.DataFrame:
    return frame[(frame["x0"] == int(secrets[0])) & (frame["x1"] == int(secrets[1]))]


def plot_grid(frame: pd.DataFrame, secrets: str, column: str):
    """Density plots of the classical score, the quantum score and their difference."""
    frame = _select_secrets(frame, secrets)
    surfaces = {}
    for machine in ("cdm", "qdm"):
        subset = frame[(frame["machine"] == machine) & (frame["gamma"] == 0)]
        surfaces[machine] = subset.pivot(index="h1", columns="h0", values=column).sort_index()
    surfaces["qdm - cdm"] = surfaces["qdm"] - surfaces["cdm"]

    fig, axes = plt.subplots(1, 3, figsize=(fig_width, fig_width / 3))
    for ax, (name, surface) in zip(axes, surfaces.items()):
        limit = 1.0 if name != "qdm - cdm" else 0.5
        image = ax.imshow(
            surface.to_numpy(), origin="lower", cmap="RdBu_r", vmin=-limit, vmax=limit,
            extent=[surface.columns.min(), surface.columns.max(), surface.index.min(), surface.index.max()],
        )
        ax.set_title(name)
        ax.set_xlabel("$h_0$")
        fig.colorbar(image, ax=ax, shrink=0.8)
    axes[0].set_ylabel("$h_1$")
    return fig


def plot_symmetric(frame: pd.DataFrame, secrets: str, column: str):
    """Score along the symmetric line; negative h is the Poor ray."""
    frame = _select_secrets(frame, secrets)
    fig, ax = plt.subplots()
    for machine, marker in (("cdm", "s"), ("qdm", "o")):
        subset = frame[(frame["machine"] == machine) & (frame["gamma"] == 0)]
        # h0 = +/-|h| times the sign of the correct first operation, 1 - 2*x0
        signed_h = subset["h0"] * (1 - 2 * subset["x0"])
        ax.plot(signed_h, subset[column], marker=marker, linestyle="", label=machine)
    ax.axvline(0.0, color="grey", linewidth=0.5)
    ax.set_xlabel("signed $h$ (negative = Poor, positive = Good)")
    ax.set_ylabel("score")
    ax.legend()
    return fig


def plot_decoherence(frame: pd.DataFrame, secrets: str, column: str):
    """Quantum score per dephasing rate, with the classical baseline."""
    frame = _select_secrets(frame, secrets)
    fig, ax = plt.subplots()
    classical = frame[frame["machine"] == "cdm"]
    h = np.abs(classical["h0"])
    ax.plot(h, classical[column], "k--", label="cdm")
    quantum = frame[frame["machine"] == "qdm"]
    for rate, subset in quantum.groupby("gamma"):
        ax.plot(np.abs(subset["h0"]), subset[column], marker="o", label=f"qdm, gamma={rate:g}")
    ax.set_xlabel("$|h|$")
    ax.set_ylabel("score")
    ax.legend()
    return fig


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Plot hint-game CSV results")
    parser.add_argument("csv", help="CSV written by a hint-game command")
    parser.add_argument("--secrets", default="00", choices=["00", "01", "10", "11"], help="Secrets pair to plot")
    parser.add_argument("--column", default="mean_score", choices=["mean_score", "analytic_score"])
    parser.add_argument("--out", required=True, help="Image path")
    args = parser.parse_args(argv)

    frame = pd.read_csv(args.csv)
    experiments = set(frame["experiment"])
    if len(experiments) != 1:
        print(f"Expected one experiment per file, found {sorted(experiments)}", file=sys.stderr)
        return 1
    experiment = experiments.pop()

    if experiment == "grid":
        fig = plot_grid(frame, args.secrets, args.column)
    elif experiment == "symmetric":
        fig = plot_symmetric(frame, args.secrets, args.column)
    else:
        fig = plot_decoherence(frame, args.secrets, args.column)
    fig.tight_layout()
    fig.savefig(args.out)
    print(f"Saved {experiment} plot to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Figure rendering for the report path.

All figures are written to files (Agg backend, no display); the CLI only
calls in here when a plot directory was requested.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .denumerant import DenumerantTable
from .family import ProductFamily, StepReport
from .sfrobenius import SAperyTable

FIG_SIZE = (6.4, 4.0)
FIG_DPI = 150


def save_figure(fig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=FIG_DPI, bbox_inches="tight")
    plt.close(fig)
    return path


def denumerant_figure(table: DenumerantTable, highlight: int | None = None):
    """Step plot of representation counts up to the table limit."""
    fig, ax = plt.subplots(figsize=FIG_SIZE)
    xs = range(table.limit + 1)
    ax.step(xs, table.counts, where="mid", lw=1.2)
    if highlight is not None and 0 <= highlight <= table.limit:
        ax.plot([highlight], [table.counts[highlight]], "o", color="crimson", ms=6)
        ax.annotate(
            f"x={highlight}: {table.counts[highlight]}",
            (highlight, table.counts[highlight]),
            textcoords="offset points",
            xytext=(6, 8),
            fontsize=9,
        )
    ax.set_xlabel("target x")
    ax.set_ylabel("representations")
    ax.set_title(f"denumerant over {table.gens}")
    ax.grid(alpha=0.3)
    return fig


def apery_figure(table: SAperyTable):
    """Bar chart of the residue-class minima n_{j,s}."""
    fig, ax = plt.subplots(figsize=FIG_SIZE)
    ax.bar(range(table.modulus), table.entries, color="steelblue")
    g_star = max(table.entries) - table.modulus
    ax.axhline(g_star, color="crimson", lw=1.0, ls="--", label=f"g*_{table.s} = {g_star}")
    ax.set_xlabel(f"residue j (mod {table.modulus})")
    ax.set_ylabel(f"least x = j with > {table.s} representations")
    ax.set_title(f"residue minima for {table.gens}, s={table.s}")
    ax.legend(loc="upper left", fontsize=9)
    return fig


def family_figure(family: ProductFamily, reports: list[StepReport]):
    """Progression values and counts (exact vs window floor) per step t."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9.0, 4.0))
    ts = [r.t for r in reports]
    ax1.plot(ts, [r.value for r in reports], "o-", color="steelblue")
    ax1.set_xlabel("t")
    ax1.set_ylabel("progression value")
    ax1.set_title(f"step {family.pi} progression, base {family.base}")
    ax1.set_xticks(ts)
    ax1.grid(alpha=0.3)

    width = 0.35
    ax2.bar([t - width / 2 for t in ts], [r.actual_count for r in reports], width,
            label="count at value", color="steelblue")
    ax2.bar([t + width / 2 for t in ts], [r.window_min_count for r in reports], width,
            label="window minimum", color="darkorange")
    ax2.set_xlabel("t")
    ax2.set_ylabel("representations")
    ax2.set_title("exact count vs bound beyond")
    ax2.set_xticks(ts)
    ax2.legend(fontsize=9)
    fig.tight_layout()
    return fig

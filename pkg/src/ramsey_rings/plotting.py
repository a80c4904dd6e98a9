"""Figures for the batch report.  Rendering is file-only (Agg backend)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _finish(fig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_extraction(summary: list[dict], path: Path) -> Path:
    """Block size against norm(z) for both strategies, with the |H| = norm line."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for strategy, marker in (("A", "o"), ("B", "s")):
        pts = [r for r in summary if r["strategy"] == strategy]
        ax.plot([r["norm"] for r in pts], [r["mean_size"] for r in pts],
                marker=marker, linestyle="-", label=f"strategy {strategy} (mean)")
        if strategy == "A":
            ax.plot([r["norm"] for r in pts], [r["max_size"] for r in pts],
                    marker=".", linestyle=":", label="strategy A (max)")
    norms = sorted({r["norm"] for r in summary})
    ax.plot(norms, norms, color="grey", linewidth=0.8, label="norm(z)")
    ax.set_xlabel("norm(z)")
    ax.set_ylabel("|H|")
    ax.legend(frameon=False, fontsize=8)
    return _finish(fig, path)


def plot_schur(rows: list[dict], path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(6, 4))
    for colors in sorted({r["colors"] for r in rows}):
        pts = [r for r in rows if r["colors"] == colors]
        ax.semilogy([r["n"] for r in pts], [r["nodes"] for r in pts], marker="o",
                    label=f"{colors} colors")
        forced = [r for r in pts if r["forced"]]
        if forced:
            ax.scatter([r["n"] for r in forced], [r["nodes"] for r in forced],
                       marker="x", s=60, color="black", zorder=3)
    ax.set_xlabel("N")
    ax.set_ylabel("search nodes (x = forced)")
    ax.legend(frameon=False, fontsize=8)
    return _finish(fig, path)


def plot_builder(rows: list[dict], path: Path) -> Path:
    """Success rate of the FS/FP builder by depth, one line per target ideal."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for target in sorted({r["set"] for r in rows}):
        pts = [r for r in rows if r["set"] == target]
        depths = sorted({r["depth"] for r in pts})
        rate = [sum(r["ok"] for r in pts if r["depth"] == d) / sum(1 for r in pts if r["depth"] == d)
                for d in depths]
        ax.plot(depths, rate, marker="o", label=target)
    ax.set_ylim(-0.05, 1.05)
    ax.set_xlabel("depth")
    ax.set_ylabel("verified fraction")
    ax.legend(frameon=False, fontsize=8)
    return _finish(fig, path)

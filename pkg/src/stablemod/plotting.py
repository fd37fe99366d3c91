"""Figures for the ``report`` command, rendered with the Agg backend."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

# strip the version stamp so identical data gives identical files
_PNG_META = {"Software": None}


def _save(fig, path: Path) -> Path:
    fig.tight_layout()
    fig.savefig(path, dpi=100, metadata=_PNG_META)
    plt.close(fig)
    return path


def _labels(objs: Sequence[tuple[int, int]]) -> list[str]:
    return [f"[{i}..{j}]" if i != j else f"S{i}" for i, j in objs]


def _heatmap(ax, table, labels, title):
    data = np.asarray(table, dtype=float).reshape(len(labels), len(labels))
    ax.imshow(data, cmap="Blues", vmin=0, vmax=max(1.0, float(data.max()) if data.size else 1.0))
    ax.set_xticks(range(len(labels)), labels, rotation=60, fontsize=7)
    ax.set_yticks(range(len(labels)), labels, fontsize=7)
    for (r, c), v in np.ndenumerate(data):
        ax.text(c, r, f"{int(v)}", ha="center", va="center", fontsize=7, color="white" if v > 0 else "black")
    ax.set_title(title, fontsize=9)


def equivalence_figure(report, path: Path) -> Path:
    """Stable-hom table of kA_n next to the hom table of kA_{n-1}, rows matched by the bijection."""
    fig, axes = plt.subplots(1, 2, figsize=(8, 4))
    _heatmap(axes[0], report.stable_table, _labels(report.stable_objects), f"stable Hom over kA_{report.n}")
    if report.bijection is not None:
        perm = report.bijection
        table = np.asarray(report.target_table)[np.ix_(perm, perm)] if perm else np.zeros((0, 0))
        labels = [_labels(report.target_objects)[k] for k in perm]
    else:
        table, labels = report.target_table, _labels(report.target_objects)
    _heatmap(axes[1], table, labels, f"Hom over kA_{report.n - 1}")
    return _save(fig, path)


def census_figure(rows_by_n: dict[int, list], path: Path) -> Path:
    """One strip per n: green cells are orientations with an abelian stable category."""
    ns = sorted(rows_by_n)
    width = max(len(rows_by_n[n]) for n in ns)
    fig, ax = plt.subplots(figsize=(max(4, 0.6 * width), 0.8 * len(ns) + 1))
    grid = np.full((len(ns), width), np.nan)
    for r, n in enumerate(ns):
        for c, row in enumerate(rows_by_n[n]):
            grid[r, c] = 1.0 if row.abelian else 0.0
            ax.text(c, r, row.orientation or "-", ha="center", va="center", fontsize=7)
    ax.imshow(grid, cmap="RdYlGn", vmin=0, vmax=1, aspect="auto")
    ax.set_yticks(range(len(ns)), [f"A_{n}" for n in ns])
    ax.set_xticks([])
    ax.set_title("abelian stable category by orientation", fontsize=9)
    return _save(fig, path)


def suites_figure(reports: Sequence, path: Path) -> Path:
    names = [r.name for r in reports]
    fails = [len(r.failures) for r in reports]
    trials = [r.trials for r in reports]
    fig, ax = plt.subplots(figsize=(8, 3.5))
    x = np.arange(len(names))
    ax.bar(x, trials, color="#9ecae1", label="trials")
    ax.bar(x, fails, color="#de2d26", label="failures")
    ax.set_xticks(x, names, rotation=45, ha="right", fontsize=8)
    ax.legend(fontsize=8)
    ax.set_title("property suites", fontsize=9)
    return _save(fig, path)

"""Rendering of report summaries to image files.

Uses the non-interactive matplotlib backend; every figure is a pure
function of its inputs so repeated runs produce the same image.
"""

from __future__ import annotations

from collections import Counter
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .report import Report  # noqa: E402

__all__ = ["render_verdicts", "render_timings"]

_PASS_COLOR = "#2e7d32"
_FAIL_COLOR = "#c62828"


def render_verdicts(report: Report, path: str | Path) -> Path:
    """Horizontal stacked bars of passing/failing entry counts per
    equation id."""
    passes: Counter[str] = Counter()
    fails: Counter[str] = Counter()
    for e in report.entries:
        (passes if e.holds else fails)[e.equation_id] += 1
    ids = sorted(set(passes) | set(fails))
    if not ids:
        ids = ["(no entries)"]
    pass_counts = [passes.get(i, 0) for i in ids]
    fail_counts = [fails.get(i, 0) for i in ids]

    height = max(2.0, 0.32 * len(ids) + 1.2)
    fig, ax = plt.subplots(figsize=(9, height))
    positions = range(len(ids))
    ax.barh(positions, pass_counts, color=_PASS_COLOR, label="pass")
    ax.barh(
        positions, fail_counts, left=pass_counts, color=_FAIL_COLOR, label="fail"
    )
    ax.set_yticks(list(positions))
    ax.set_yticklabels(ids, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("checked instances")
    ax.set_title(f"{report.title} — scope: {report.scope}")
    ax.legend(loc="lower right")
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=120)
    plt.close(fig)
    return out


def render_timings(rows: Sequence[tuple[str, float]], path: str | Path) -> Path:
    """Horizontal bars of wall-clock seconds per labeled step."""
    labels = [label for label, _ in rows] or ["(no steps)"]
    seconds = [s for _, s in rows] or [0.0]

    height = max(2.0, 0.32 * len(labels) + 1.2)
    fig, ax = plt.subplots(figsize=(9, height))
    positions = range(len(labels))
    ax.barh(positions, seconds, color="#1565c0")
    ax.set_yticks(list(positions))
    ax.set_yticklabels(labels, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("seconds")
    ax.set_title("wall-clock time per step")
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=120)
    plt.close(fig)
    return out

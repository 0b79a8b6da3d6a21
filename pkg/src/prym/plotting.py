"""Figures written next to the delimited reports (Agg backend, files only)."""

from __future__ import annotations

from collections import Counter
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def census_figure(records: Sequence, path) -> Path:
    """Two panels: rational 2-torsion sizes for E and Ehat, and how many records share each p2."""
    path = Path(path)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.5))
    for key, label, offset in (("e2_rat", "E", -0.2), ("ehat2_rat", "Ehat", 0.2)):
        c = Counter(getattr(r, key) for r in records)
        xs = sorted(c)
        ax1.bar([x + offset for x in xs], [c[x] for x in xs], width=0.4, label=label)
    ax1.set_xlabel("#T[2](Q)")
    ax1.set_ylabel("records")
    ax1.legend()
    by_p2 = Counter(r.b[0] for r in records)
    xs = sorted(by_p2)
    ax2.bar(xs, [by_p2[x] for x in xs], color="gray")
    ax2.set_xlabel("p2")
    ax2.set_ylabel("records")
    fig.tight_layout()
    fig.savefig(path, dpi=100, metadata={"Software": None})
    plt.close(fig)
    return path


def density_figure(report, path) -> Path:
    path = Path(path)
    fig, ax = plt.subplots(figsize=(4, 3.5))
    sigma = (report.predicted * (1 - report.predicted) / report.samples) ** 0.5
    ax.bar(["predicted", "observed"], [report.predicted, report.observed], color=["gray", "tab:blue"])
    ax.errorbar([1], [report.observed], yerr=[4 * sigma], color="black", capsize=6)
    lo = min(report.predicted, report.observed) - 8 * sigma
    ax.set_ylim(max(0.0, lo), min(1.0, max(report.predicted, report.observed) + 8 * sigma))
    ax.set_title(f"regular semisimple fraction, p = {report.p}")
    fig.tight_layout()
    fig.savefig(path, dpi=100, metadata={"Software": None})
    plt.close(fig)
    return path

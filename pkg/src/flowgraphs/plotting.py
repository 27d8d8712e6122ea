"""Log-log phase timing figures for benchmark rows."""
from __future__ import annotations

from collections import defaultdict
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .pipeline import PHASES  # noqa: E402

_MARKERS = {"read_input": "o", "transformation": "s", "control_flow": "^",
            "data_flow": "D", "write_output": "v"}


def plot_phases(rows: Sequence, path: str, dpi: int = 120) -> None:
    """One panel per (profile, strategy); one line per phase.

    Size 0 rows are dropped since they cannot sit on a log axis.
    """
    panels = defaultdict(list)
    for row in rows:
        if row.size > 0:
            panels[(row.profile, row.strategy)].append(row)
    if not panels:
        raise ValueError("nothing to plot: every row has size 0")

    keys = sorted(panels)
    fig, axes = plt.subplots(1, len(keys), figsize=(4.2 * len(keys), 3.6), squeeze=False, sharey=True)
    for ax, key in zip(axes[0], keys):
        series = sorted(panels[key], key=lambda r: r.size)
        sizes = [r.size for r in series]
        for phase in PHASES:
            # zero-duration phases would vanish on log axes
            values = [max(r.medians[phase], 1e-1) for r in series]
            ax.plot(sizes, values, marker=_MARKERS[phase], markersize=4, linewidth=1.2,
                    label=phase.replace("_", " "))
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_title(f"{key[0]} / {key[1]}", fontsize=10)
        ax.set_xlabel("statements")
        ax.grid(True, which="major", linestyle=":", linewidth=0.6)
    axes[0][0].set_ylabel("median time (µs)")
    axes[0][-1].legend(fontsize=8, frameon=False, loc="upper left")
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)

"""Optional PNG rendering of CLI tables (needs matplotlib)."""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path


def plot_table(columns: Sequence[str], rows: Sequence[Sequence[float]], path: str | Path, title: str = "") -> Path:
    """Plot every numeric column against the first one and save a PNG."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    xs = [row[0] for row in rows]
    fig, ax = plt.subplots(figsize=(6, 4.5))
    for k, name in enumerate(columns[1:], start=1):
        ys = [row[k] for row in rows]
        if all(isinstance(y, (int, float)) for y in ys):
            ax.plot(xs, ys, label=name)
    ax.set_xlabel(columns[0])
    ax.set_title(title)
    ax.legend(frameon=False)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path

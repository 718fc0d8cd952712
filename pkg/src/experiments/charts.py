"""
SVG line charts for SNR sweeps.

Charts are derived views of the sweep CSV; failures here are logged and
never change a run's exit status.
"""

import logging
import math
from collections.abc import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from estimation import SweepRow  # noqa: E402

logger = logging.getLogger(__name__)


def plot_sweep(rows: Sequence[SweepRow], path: str, title: str = "") -> bool:
    """
    MI, duality upper estimate and analytic bound against SNR in dB.

    Args:
        rows: Sweep rows in SNR order
        path: Destination ``.svg`` file
        title: Figure title

    Returns:
        True if the file was written
    """
    if not rows:
        logger.info("Empty sweep, no chart written")
        return False

    # Fixed salt keeps element ids (and so the file bytes) stable between runs
    matplotlib.rcParams["svg.hashsalt"] = "fadingcap"
    matplotlib.rcParams["svg.fonttype"] = "none"

    snr_db = [row.snr_db for row in rows]
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    try:
        _series(ax, snr_db, [row.mi.mean if row.mi else None for row in rows],
                [row.mi.std_error if row.mi else None for row in rows], "exact MI", "o")
        _series(ax, snr_db, [row.duality.mean if row.duality else None for row in rows],
                [row.duality.std_error if row.duality else None for row in rows], "duality upper", "s")
        _series(ax, snr_db, [row.bound for row in rows], None, "analytic bound", None)

        ax.set_xlabel("SNR (dB)")
        ax.set_ylabel("nats per channel use")
        if title:
            ax.set_title(title)
        ax.grid(True)
        ax.legend()
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
    except (OSError, ValueError) as e:
        logger.warning(f"Could not write chart {path}: {e}")
        return False
    finally:
        plt.close(fig)

    logger.info(f"Wrote {path}")
    return True


def _series(ax, x, y, errors, label, marker) -> None:
    points = [
        (xi, yi, ei)
        for xi, yi, ei in zip(x, y, errors or [None] * len(y))
        if yi is not None and math.isfinite(xi) and math.isfinite(yi)
    ]
    if not points:
        return
    xs, ys, es = zip(*points)
    if errors is not None and all(e is not None for e in es):
        ax.errorbar(xs, ys, yerr=[3.0 * e for e in es], marker=marker, capsize=3, label=label)
    else:
        ax.plot(xs, ys, marker=marker, linestyle="--", label=label)

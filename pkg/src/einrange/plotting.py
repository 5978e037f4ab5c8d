"""Figure rendering for numerical-range reports.

Draws the swept boundary polygons, interior samples, and eigenvalue
markers for one or more operands on a single pair of axes and writes the
result next to the CSV output.  Uses the Agg backend so it runs headless.
"""

from __future__ import annotations

from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .numrange import NRApprox

__all__ = ["render_numrange_figure"]

_COLORS = ("tab:blue", "tab:orange", "tab:green", "tab:red")


def render_numrange_figure(
    approxes: Mapping[str, NRApprox],
    eigenvalues: Mapping[str, Sequence[complex]] | None = None,
    out_path: str = "numrange.png",
    title: str = "Numerical ranges",
    dpi: int = 150,
) -> str:
    """Render boundaries (closed polylines), samples, and spectra.

    Returns the path written.
    """
    eigenvalues = eigenvalues or {}
    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    for color, (label, approx) in zip(_COLORS, approxes.items()):
        pts = approx.boundary_points()
        xs = list(pts.real) + [pts.real[0]]
        ys = list(pts.imag) + [pts.imag[0]]
        ax.plot(xs, ys, "-", color=color, linewidth=1.2, label=label)
        if approx.samples:
            sx = [z.real for z in approx.samples]
            sy = [z.imag for z in approx.samples]
            ax.plot(sx, sy, ".", color=color, markersize=2, alpha=0.35)
        for ev in eigenvalues.get(label, ()):
            ax.plot(ev.real, ev.imag, "o", color=color, markersize=5,
                    markeredgecolor="black", markeredgewidth=0.5)
    ax.axhline(0.0, color="gray", linewidth=0.5)
    ax.axvline(0.0, color="gray", linewidth=0.5)
    ax.set_aspect("equal", adjustable="datalim")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_title(title)
    ax.legend(loc="best", fontsize=9)
    fig.tight_layout()
    fig.savefig(out_path, dpi=dpi)
    plt.close(fig)
    return str(out_path)

"""Matplotlib rendering for realizations and bound reports.

Purely cosmetic: drawings carry no geometric claims. The realization view
scales coordinates into a fixed 1000 x 1000 viewport with a 5% margin.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bounds import BoundReport
from .graph import Graph
from .rigidity import Realization

VIEWPORT = 1000.0
MARGIN = 0.05 * VIEWPORT


def _viewport_coords(r: Realization) -> list[tuple[float, float]]:
    pts = [(float(x), float(y)) for x, y in r.coords]
    if not pts:
        return []
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    scale = (VIEWPORT - 2 * MARGIN) / span
    x0, y0 = min(xs), min(ys)
    return [(MARGIN + (x - x0) * scale, MARGIN + (y - y0) * scale) for x, y in pts]


def draw_realization(g: Graph, r: Realization, path: str) -> None:
    """Render the graph at the given realization to an image file."""
    pts = _viewport_coords(r)
    fig, ax = plt.subplots(figsize=(8, 8))
    for i, j in g.sorted_edges():
        ax.plot(
            [pts[i][0], pts[j][0]],
            [pts[i][1], pts[j][1]],
            color="#4578b0",
            linewidth=1.2,
            zorder=1,
        )
    if pts:
        ax.scatter(*zip(*pts), s=36, color="#22344a", zorder=2)
        for v, (x, y) in enumerate(pts):
            ax.annotate(str(v), (x, y), textcoords="offset points", xytext=(4, 4), fontsize=8)
    ax.set_xlim(0, VIEWPORT)
    ax.set_ylim(0, VIEWPORT)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)


def plot_reports(reports: list[BoundReport], path: str, title: str = "bound check") -> None:
    """Scatter ranks (or stress counts) against the verified bound curve."""
    fig, ax = plt.subplots(figsize=(8, 5))
    theorem = [r for r in reports if r.theorem_bound is not None]
    lemma = [r for r in reports if r.stress_cap is not None]
    if theorem:
        ok = [r for r in theorem if r.satisfied]
        bad = [r for r in theorem if not r.satisfied]
        if ok:
            ax.scatter(
                [r.vertex_count for r in ok],
                [r.rank for r in ok],
                s=18,
                color="#2a7e43",
                label="rank (ok)",
            )
        if bad:
            ax.scatter(
                [r.vertex_count for r in bad],
                [r.rank for r in bad],
                s=26,
                marker="x",
                color="#b03030",
                label="rank (violation)",
            )
        curve = sorted({(r.vertex_count, float(r.theorem_bound)) for r in theorem})
        ax.plot(
            [c[0] for c in curve],
            [c[1] for c in curve],
            color="#666666",
            linestyle="--",
            label="lower bound",
        )
        ax.set_ylabel("rank")
    elif lemma:
        ax.scatter(
            [r.edge_count for r in lemma],
            [r.stress for r in lemma],
            s=18,
            color="#2a7e43",
            label="stress",
        )
        ax.scatter(
            [r.edge_count for r in lemma],
            [float(r.stress_cap) for r in lemma],
            s=18,
            marker="_",
            color="#666666",
            label="cap",
        )
        ax.set_ylabel("stress count")
        ax.set_xlabel("edges")
    if theorem:
        ax.set_xlabel("vertices")
    ax.set_title(title)
    ax.legend(loc="best", fontsize=8)
    ax.spines["right"].set_visible(False)
    ax.spines["top"].set_visible(False)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)

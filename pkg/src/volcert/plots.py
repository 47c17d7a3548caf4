"""Figure data and matplotlib rendering for the bound curves and campaigns.

Two artifacts matter: the curve sheet (both lower-envelope branches, the
diagonal, and the piecewise threshold against x) and the campaign map (the
certified rectangles with their per-piece minima and argmin cells).  Each
is emitted both as a delimited data file and, on request, as a rendered
matplotlib figure next to it.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Iterable, Sequence

from . import bounds
from .certify import CertReport, truncate3
from .errors import DomainError

__all__ = [
    "curve_rows",
    "write_curve_data",
    "write_piece_minima",
    "render_curves",
    "render_campaign_map",
]

CURVE_X_LO = 1.22
CURVE_X_HI = 1.4999
CURVE_STEP = 0.0005


def curve_rows(
    x_lo: float = CURVE_X_LO, x_hi: float = CURVE_X_HI, step: float = CURVE_STEP
) -> list[dict]:
    """Sample the envelope branches and the threshold over [x_lo, x_hi]."""
    n = max(1, round((x_hi - x_lo) / step))
    rows = []
    for k in range(n + 1):
        x = x_lo + k * (x_hi - x_lo) / n
        try:
            packing = bounds.cosh_floor_packing(x)
        except DomainError:
            packing = None
        try:
            thresh = bounds.threshold(x)
        except DomainError:
            thresh = None
        rows.append(
            {
                "x": x,
                "floor_packing": packing,
                "floor_disk": bounds.cosh_floor_disk(x),
                "diagonal": x,
                "threshold": thresh,
            }
        )
    return rows


def _fmt(v) -> str:
    return "" if v is None else repr(float(v))


def write_curve_data(path: Path | str, rows: Iterable[dict] | None = None) -> Path:
    """Write the curve samples as CSV; empty fields where a curve is undefined."""
    path = Path(path)
    rows = curve_rows() if rows is None else rows
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "floor_packing", "floor_disk", "diagonal", "threshold"])
        for row in rows:
            writer.writerow(
                [
                    _fmt(row["x"]),
                    _fmt(row["floor_packing"]),
                    _fmt(row["floor_disk"]),
                    _fmt(row["diagonal"]),
                    _fmt(row["threshold"]),
                ]
            )
    return path


def write_piece_minima(path: Path | str, reports: Sequence[CertReport]) -> Path:
    """Write one row per certified rectangle: extent, regime, minimum, argmin."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            [
                "x_lo",
                "x_hi",
                "y_lo",
                "y_hi",
                "regime",
                "min_bound",
                "min_trunc3",
                "argmin_x",
                "argmin_y",
            ]
        )
        for report in reports:
            writer.writerow(
                [
                    repr(report.rect.a),
                    repr(report.rect.b),
                    repr(report.rect.c),
                    repr(report.rect.d),
                    report.regime.value,
                    repr(report.min_bound),
                    repr(truncate3(report.min_bound)),
                    repr(report.argmin.a),
                    repr(report.argmin.c),
                ]
            )
    return path


def _axes(figsize):
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    return plt.subplots(figsize=figsize)


def render_curves(path: Path | str, rows: Iterable[dict] | None = None) -> Path:
    """Render the envelope branches and the threshold staircase to a file."""
    path = Path(path)
    rows = curve_rows() if rows is None else list(rows)
    fig, ax = _axes((9, 5))

    def series(key):
        pts = [(r["x"], r[key]) for r in rows if r[key] is not None]
        return [p[0] for p in pts], [p[1] for p in pts]

    ax.plot(*series("floor_packing"), lw=1.6, label="packing floor")
    ax.plot(*series("floor_disk"), lw=1.6, label="fixed-disk floor")
    ax.plot(*series("diagonal"), lw=1.0, ls="--", color="gray", label="diagonal")
    xs, ys = series("threshold")
    ax.step(xs, ys, where="post", lw=1.6, color="black", label="single-muffin threshold")
    ax.set_xlabel("cosh l1")
    ax.set_ylabel("cosh l2")
    ax.set_title("Second-ortholength envelope vs single-muffin threshold")
    ax.legend(loc="best", fontsize=9)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    _close(fig)
    return path


def render_campaign_map(path: Path | str, reports: Sequence[CertReport]) -> Path:
    """Render the certified rectangles, labeling each with its minimum bound."""
    from matplotlib.patches import Rectangle as MplRect

    path = Path(path)
    fig, ax = _axes((9, 5))
    for report in reports:
        rect = report.rect
        ax.add_patch(
            MplRect(
                (rect.a, rect.c),
                rect.b - rect.a,
                rect.d - rect.c,
                facecolor="tab:blue",
                alpha=0.12,
                edgecolor="tab:blue",
                lw=0.8,
            )
        )
        cell = report.argmin
        ax.add_patch(
            MplRect(
                (cell.a, cell.c),
                max(cell.b - cell.a, 0.0008),
                max(cell.d - cell.c, 0.003),
                facecolor="black",
            )
        )
        ax.annotate(
            f"{truncate3(report.min_bound):g}",
            ((rect.a + rect.b) / 2.0, rect.d),
            textcoords="offset points",
            xytext=(0, 4),
            ha="center",
            fontsize=8,
        )
    xs = [r.rect.a for r in reports] + [r.rect.b for r in reports]
    ys = [r.rect.c for r in reports] + [r.rect.d for r in reports]
    ax.set_xlim(min(xs) - 0.01, max(xs) + 0.01)
    ax.set_ylim(min(ys) - 0.02, max(ys) + 0.06)
    ax.set_xlabel("cosh l1")
    ax.set_ylabel("cosh l2")
    ax.set_title("Certified double-muffin volume bounds by rectangle")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    _close(fig)
    return path


def _close(fig) -> None:
    import matplotlib.pyplot as plt

    plt.close(fig)

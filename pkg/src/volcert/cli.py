"""Command-line driver: certification campaigns, tables, and report emission.

Exit status: 0 on success, 2 for configuration errors, 3 for domain errors
raised by the kernels, 4 when a campaign fails an embedding criterion (the
certificate is invalid; surfacing that loudly is the point).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from pathlib import Path

from . import bounds, plots
from .certify import (
    CertReport,
    GridSpec,
    Rect,
    Regime,
    certify_rect,
    hexfree_campaign,
    piecewise_campaign,
    resolve_workers,
    select_regime,
    truncate3,
)
from .errors import CampaignError, DomainError

__all__ = ["main", "build_parser"]

TEXT_HEADER = "# volcert report format 1"

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_CAMPAIGN = 4


class ConfigError(ValueError):
    """Invalid command-line configuration."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="volcert",
        description=(
            "Produce verifiable volume lower-bound certificates for hyperbolic "
            "3-manifolds with genus-2 totally geodesic boundary."
        ),
    )
    parser.add_argument(
        "--command",
        required=True,
        choices=("table1", "campaign1235", "campaign123", "rect"),
        help="table1: single-muffin bound table; campaign1235 / campaign123: "
        "the two standard certification campaigns; rect: certify one rectangle.",
    )
    parser.add_argument(
        "--rect",
        metavar="A,B,C,D",
        help="rectangle [a,b]x[c,d] in (cosh l1, cosh l2); required for --command rect",
    )
    parser.add_argument(
        "--grid",
        metavar="DXxDY",
        help="cell size, e.g. 0.001x0.001 (campaign defaults match the standard runs)",
    )
    parser.add_argument(
        "--regime",
        choices=tuple(r.value for r in Regime) + ("auto",),
        default="auto",
        help="feasibility branch for --command rect (auto picks the dominant one)",
    )
    parser.add_argument(
        "--rigor",
        action="store_true",
        help="evaluate with outward-rounded interval arithmetic (bounds widen downward)",
    )
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument(
        "--out", metavar="PATH", help="output file (default: standard output)"
    )
    parser.add_argument(
        "--plot-data",
        metavar="DIR",
        help="also write delimited curve and per-piece minimum data into DIR",
    )
    parser.add_argument(
        "--figures",
        metavar="DIR",
        help="also render matplotlib figures into DIR",
    )
    return parser


def _parse_rect(text: str) -> Rect:
    try:
        parts = [float(p) for p in text.split(",")]
    except ValueError as exc:
        raise ConfigError(f"cannot parse --rect {text!r}: {exc}") from exc
    if len(parts) != 4:
        raise ConfigError("--rect needs exactly four numbers a,b,c,d")
    a, b, c, d = parts
    if not (1.0 < a < b and 1.0 < c < d):
        raise ConfigError(f"--rect needs 1 < a < b and 1 < c < d, got {text}")
    if b > 2.0 or d > 3.0:
        raise ConfigError(
            f"--rect leaves the certified hypothesis range (b <= 2, d <= 3): {text}"
        )
    return Rect(a, b, c, d)


def _parse_grid(text: str) -> GridSpec:
    try:
        dx_text, dy_text = text.lower().split("x")
        grid = GridSpec(float(dx_text), float(dy_text))
    except (ValueError, DomainError) as exc:
        raise ConfigError(f"cannot parse --grid {text!r} (expected DXxDY): {exc}") from exc
    return grid


def _table_rows() -> list[dict]:
    rows = []
    for x_lo, _x_hi, y_value in bounds.THRESHOLD_PIECES:
        volume = bounds.single_muffin_bound(x_lo, 0.5 * math.acosh(y_value))
        rows.append(
            {
                "x": x_lo,
                "y_threshold": y_value,
                "volume_raw": volume,
                "volume_trunc3": truncate3(volume),
            }
        )
    return rows


def _table_text(rows: list[dict]) -> str:
    lines = [
        TEXT_HEADER,
        "# single-muffin volume bounds at threshold collar heights",
        "# x  y_threshold  volume(trunc3)",
    ]
    for row in rows:
        lines.append(f"{row['x']:g}  {row['y_threshold']:g}  {row['volume_trunc3']:.3f}")
    return "\n".join(lines) + "\n"


def _table_json(rows: list[dict]) -> str:
    payload = {"format": "volcert-table/1", "rows": rows}
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _table_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["x", "y_threshold", "volume_raw", "volume_trunc3"])
    for row in rows:
        writer.writerow(
            [
                repr(row["x"]),
                repr(row["y_threshold"]),
                repr(row["volume_raw"]),
                repr(row["volume_trunc3"]),
            ]
        )
    return buf.getvalue()


def _report_text(report: CertReport) -> str:
    rect, cell = report.rect, report.argmin
    return "\n".join(
        [
            f"rect: [{rect.a!r}, {rect.b!r}] x [{rect.c!r}, {rect.d!r}]",
            f"grid: {report.grid.dx!r} x {report.grid.dy!r}",
            f"regime: {report.regime.value}",
            f"precision: {report.precision}",
            f"cells: {report.cells_total} total, {report.cells_feasible} feasible",
            f"min bound (raw): {report.min_bound!r}",
            f"min bound (truncated, 3 decimals): {report.min_truncated!r}",
            f"argmin cell: [{cell.a!r}, {cell.b!r}] x [{cell.c!r}, {cell.d!r}]"
            f"  index (i={report.argmin_index[0]}, j={report.argmin_index[1]})",
        ]
    )


def _reports_text(command: str, reports: list[CertReport]) -> str:
    blocks = [TEXT_HEADER, f"command: {command}"]
    for k, report in enumerate(reports):
        blocks.append(f"-- rectangle {k + 1} of {len(reports)} --")
        blocks.append(_report_text(report))
    return "\n".join(blocks) + "\n"


def _report_obj(report: CertReport) -> dict:
    obj = {
        "rect": {"a": report.rect.a, "b": report.rect.b, "c": report.rect.c, "d": report.rect.d},
        "grid": {"dx": report.grid.dx, "dy": report.grid.dy},
        "regime": report.regime.value,
        "rigor": report.rigor,
        "precision": report.precision,
        "cells_total": report.cells_total,
        "cells_feasible": report.cells_feasible,
        "min_bound_raw": report.min_bound,
        "min_bound_trunc3": report.min_truncated,
        "argmin": {
            "a": report.argmin.a,
            "b": report.argmin.b,
            "c": report.argmin.c,
            "d": report.argmin.d,
        },
        "argmin_index": list(report.argmin_index),
    }
    if report.cells is not None:
        obj["cells"] = [
            {
                "a": cell.a,
                "b": cell.b,
                "c": cell.c,
                "d": cell.d,
                "muffin_sum": cell.muffin_sum,
                "with_collar": cell.with_collar,
                "best": cell.best,
                "embedding": list(cell.embedding),
            }
            for cell in report.cells
        ]
    return obj


def _reports_json(command: str, reports: list[CertReport]) -> str:
    payload = {
        "format": "volcert-report/1",
        "command": command,
        "reports": [_report_obj(r) for r in reports],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _reports_csv(reports: list[CertReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(
        [
            "a",
            "b",
            "c",
            "d",
            "muffin_sum",
            "with_collar",
            "best",
            "within_walls",
            "clears_first",
            "clears_self",
        ]
    )
    for report in reports:
        for cell in report.cells or ():
            writer.writerow(
                [
                    repr(cell.a),
                    repr(cell.b),
                    repr(cell.c),
                    repr(cell.d),
                    repr(cell.muffin_sum),
                    repr(cell.with_collar),
                    repr(cell.best),
                    cell.embedding[0],
                    cell.embedding[1],
                    cell.embedding[2],
                ]
            )
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _run(args: argparse.Namespace) -> int:
    workers = resolve_workers(None, default=os.cpu_count())
    wants_cells = args.format in ("json", "csv")

    if args.command == "table1":
        rows = _table_rows()
        if args.format == "text":
            _emit(_table_text(rows), args.out)
        elif args.format == "json":
            _emit(_table_json(rows), args.out)
        else:
            _emit(_table_csv(rows), args.out)
        reports: list[CertReport] = []
    elif args.command == "campaign1235":
        grid = _parse_grid(args.grid) if args.grid else GridSpec(0.001, 0.001)
        reports = list(
            piecewise_campaign(
                grid, workers=workers, rigor=args.rigor, collect_cells=wants_cells
            )
        )
    elif args.command == "campaign123":
        grid = _parse_grid(args.grid) if args.grid else GridSpec(0.0005, 0.001)
        reports = [
            hexfree_campaign(
                grid, workers=workers, rigor=args.rigor, collect_cells=wants_cells
            )
        ]
    else:  # rect
        if not args.rect:
            raise ConfigError("--command rect requires --rect a,b,c,d")
        rect = _parse_rect(args.rect)
        grid = _parse_grid(args.grid) if args.grid else GridSpec(0.001, 0.001)
        if args.regime == "auto":
            regime = select_regime(rect.a, rect.b)
        else:
            regime = Regime(args.regime)
        reports = [
            certify_rect(
                rect,
                grid,
                regime,
                workers=workers,
                rigor=args.rigor,
                collect_cells=wants_cells,
            )
        ]

    if reports:
        if args.format == "text":
            _emit(_reports_text(args.command, reports), args.out)
        elif args.format == "json":
            _emit(_reports_json(args.command, reports), args.out)
        else:
            _emit(_reports_csv(reports), args.out)

    if args.plot_data:
        data_dir = Path(args.plot_data)
        data_dir.mkdir(parents=True, exist_ok=True)
        plots.write_curve_data(data_dir / "bound_curves.csv")
        if reports:
            plots.write_piece_minima(data_dir / "piece_minima.csv", reports)

    if args.figures:
        fig_dir = Path(args.figures)
        fig_dir.mkdir(parents=True, exist_ok=True)
        plots.render_curves(fig_dir / "bound_curves.png")
        if reports:
            plots.render_campaign_map(fig_dir / "campaign_map.png", reports)

    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CampaignError as exc:
        print(f"campaign failure: {exc}", file=sys.stderr)
        return EXIT_CAMPAIGN
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

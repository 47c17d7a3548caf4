"""Rectangle-subdivision certification engine.

A campaign tiles a parameter rectangle of (cosh l1, cosh l2) values with
grid cells, discards cells that cannot meet the length-spectrum envelope,
verifies the muffin-embedding criteria on every surviving cell, evaluates
the double-muffin bound there, and reports the global minimum with its
argmin cell.  Cells are independent work items; the only shared state is a
min-reduction with a lexicographic tie-break, so results are identical for
any worker count or evaluation order.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

from . import bounds
from ._scalar import lower, upper
from .errors import CampaignError, DomainError
from .interval import Interval
from .muffin import embedding_ok

__all__ = [
    "Regime",
    "Rect",
    "GridSpec",
    "CellVerdict",
    "CellRecord",
    "CertReport",
    "truncate3",
    "ceil3",
    "cell_feasible",
    "evaluate_cell",
    "certify_rect",
    "select_regime",
    "floor_minimum",
    "piecewise_campaign",
    "hexfree_campaign",
    "HEXFREE_X_RANGE",
]

WORKERS_ENV = "VOLCERT_WORKERS"

#: x-range of the hexagon-free campaign; its y-range derives from the
#: packing floor (truncated down) and the hexagon-free ceiling (rounded up).
HEXFREE_X_RANGE = (1.23, 1.24)


class Regime(Enum):
    """Which envelope branch a campaign uses for cell feasibility.

    PACKING  decreasing floor: a cell survives iff d >= floor(b).
    DISK     increasing floor: a cell survives iff d >= floor(a).
    DIAGONAL the bound l2 >= l1: a cell survives iff d >= a.
    CAPPED   packing floor plus the hexagon-free ceiling: additionally
             requires c <= ceiling(b), the ceiling being increasing.
    """

    PACKING = "packing"
    DISK = "disk"
    DIAGONAL = "diagonal"
    CAPPED = "capped"


@dataclass(frozen=True)
class Rect:
    """An axis-aligned box [a,b] x [c,d] of spectrum parameters."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        if not (1.0 < self.a < self.b and 1.0 < self.c < self.d):
            raise DomainError(f"rectangle needs 1 < a < b and 1 < c < d, got {self}")


@dataclass(frozen=True)
class GridSpec:
    """Cell size of a subdivision; cells must tile the rectangle exactly."""

    dx: float
    dy: float

    def __post_init__(self):
        if not (self.dx > 0.0 and self.dy > 0.0):
            raise DomainError(f"grid steps must be positive, got {self}")


@dataclass(frozen=True)
class CellVerdict:
    """Outcome for one grid cell."""

    feasible: bool
    embedding: tuple[bool, bool, bool] | None = None
    bound: float | None = None


@dataclass(frozen=True)
class CellRecord:
    """One feasible cell's bounds, for machine-readable dumps."""

    a: float
    b: float
    c: float
    d: float
    muffin_sum: float
    with_collar: float
    best: float
    embedding: tuple[bool, bool, bool]


@dataclass(frozen=True)
class CertReport:
    """Result of one certification campaign over one rectangle."""

    rect: Rect
    grid: GridSpec
    regime: Regime
    rigor: bool
    min_bound: float
    min_truncated: float
    argmin: Rect
    argmin_index: tuple[int, int]
    cells_total: int
    cells_feasible: int
    precision: str
    cells: tuple[CellRecord, ...] | None = None


def truncate3(v: float) -> float:
    """Truncate after three decimal places: floor(v * 1000) / 1000."""
    if v < 0.0:
        raise DomainError("truncate3 expects a nonnegative value")
    return math.floor(v * 1000.0) / 1000.0


def ceil3(v: float) -> float:
    """Round up after three decimal places."""
    return math.ceil(v * 1000.0) / 1000.0


def _floor_packing_at(x: float, rigor: bool):
    return bounds.cosh_floor_packing(Interval.point(x) if rigor else x)


def _floor_disk_at(x: float, rigor: bool):
    return bounds.cosh_floor_disk(Interval.point(x) if rigor else x)


def _cap_hexfree_at(x: float, rigor: bool):
    return bounds.cosh_cap_hexfree(Interval.point(x) if rigor else x)


def cell_feasible(cell: Rect, regime: Regime, rigor: bool = False) -> bool:
    """Can the cell meet the envelope?  Monotonicity picks the test corner.

    The decreasing packing floor is smallest over the cell at x = b, the
    increasing disk floor at x = a, and the increasing ceiling largest at
    x = b; the comparisons below are exact consequences.  In rigor mode the
    comparisons keep any cell the widened evaluation cannot exclude.
    """
    if regime is Regime.PACKING:
        return cell.d >= lower(_floor_packing_at(cell.b, rigor))
    if regime is Regime.DISK:
        return cell.d >= lower(_floor_disk_at(cell.a, rigor))
    if regime is Regime.DIAGONAL:
        return cell.d >= cell.a
    if regime is Regime.CAPPED:
        return cell.d >= lower(_floor_packing_at(cell.b, rigor)) and cell.c <= upper(
            _cap_hexfree_at(cell.b, rigor)
        )
    raise DomainError(f"unknown regime {regime!r}")


def evaluate_cell(cell: Rect, regime: Regime, rigor: bool = False) -> CellVerdict:
    """Feasibility test plus, when feasible, embedding flags and the bound."""
    if not cell_feasible(cell, regime, rigor):
        return CellVerdict(feasible=False)
    record = _bound_cell(cell.a, cell.b, cell.c, cell.d, rigor)
    return CellVerdict(feasible=True, embedding=record.embedding, bound=record.best)


def _bound_cell(a: float, b: float, c: float, d: float, rigor: bool) -> CellRecord:
    if rigor:
        db = bounds.double_muffin_bound(
            Interval.point(a), Interval.point(b), Interval.point(c), Interval.point(d)
        )
    else:
        db = bounds.double_muffin_bound(a, b, c, d)
    flags = embedding_ok(db.constants)
    return CellRecord(
        a=a,
        b=b,
        c=c,
        d=d,
        muffin_sum=lower(db.muffin_sum),
        with_collar=lower(db.with_collar),
        best=lower(db.best),
        embedding=flags.as_tuple(),
    )


def _grid_counts(rect: Rect, grid: GridSpec) -> tuple[int, int]:
    nx = round((rect.b - rect.a) / grid.dx)
    ny = round((rect.d - rect.c) / grid.dy)
    if nx < 1 or abs((rect.b - rect.a) / grid.dx - nx) > 1e-9:
        raise DomainError(f"grid dx={grid.dx} does not tile [{rect.a}, {rect.b}]")
    if ny < 1 or abs((rect.d - rect.c) / grid.dy - ny) > 1e-9:
        raise DomainError(f"grid dy={grid.dy} does not tile [{rect.c}, {rect.d}]")
    return nx, ny


def _cell_edges(lo: float, hi: float, step: float, i: int, n: int) -> tuple[float, float]:
    # Corners come from the index, never from running sums; the last cell
    # snaps to the rectangle edge so the tiling is exact.
    left = lo + i * step
    right = hi if i == n - 1 else lo + (i + 1) * step
    return left, right


def _scan_columns(args) -> dict:
    """Evaluate all cells in columns [i_start, i_end); a parallel work item."""
    (rect_t, grid_t, regime_value, rigor, collect, i_start, i_end) = args
    rect = Rect(*rect_t)
    grid = GridSpec(*grid_t)
    regime = Regime(regime_value)
    nx, ny = _grid_counts(rect, grid)

    best = math.inf
    best_index = None
    best_cell = None
    feasible = 0
    embedding_failure = None
    rows: list[CellRecord] = []

    for i in range(i_start, i_end):
        a, b = _cell_edges(rect.a, rect.b, grid.dx, i, nx)
        for j in range(ny):
            c, d = _cell_edges(rect.c, rect.d, grid.dy, j, ny)
            cell = Rect(a, b, c, d)
            if not cell_feasible(cell, regime, rigor):
                continue
            feasible += 1
            record = _bound_cell(a, b, c, d, rigor)
            if collect:
                rows.append(record)
            if embedding_failure is None and not all(record.embedding):
                embedding_failure = (i, j, cell)
            if record.best < best:
                best = record.best
                best_index = (i, j)
                best_cell = cell

    return {
        "best": best,
        "best_index": best_index,
        "best_cell": best_cell,
        "feasible": feasible,
        "embedding_failure": embedding_failure,
        "rows": rows,
    }


def resolve_workers(workers: int | None = None, default: int | None = None) -> int:
    """Worker count: explicit argument, else the environment, else `default` (1)."""
    if workers is not None:
        return max(1, int(workers))
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    if default is not None:
        return max(1, default)
    return 1


def certify_rect(
    rect: Rect,
    grid: GridSpec,
    regime: Regime,
    *,
    workers: int | None = None,
    rigor: bool = False,
    collect_cells: bool = False,
) -> CertReport:
    """Run one campaign: scan every cell, reduce to the global minimum.

    Infeasible cells are skipped.  Every feasible cell must pass the
    embedding criteria or the whole campaign aborts with CampaignError;
    surfacing that is the point of the check.  The argmin is the
    lexicographically first cell (row-major in (i, j)) attaining the
    minimum, so reports are identical whatever the parallel schedule.
    """
    if rect.b > 2.0 or rect.d > 3.0:
        raise DomainError(
            f"rectangle {rect} leaves the double-muffin hypothesis (b <= 2, d <= 3)"
        )
    nx, ny = _grid_counts(rect, grid)
    nworkers = min(resolve_workers(workers), nx)

    rect_t = (rect.a, rect.b, rect.c, rect.d)
    grid_t = (grid.dx, grid.dy)
    if nworkers <= 1:
        partials = [_scan_columns((rect_t, grid_t, regime.value, rigor, collect_cells, 0, nx))]
    else:
        chunk = (nx + nworkers - 1) // nworkers
        tasks = [
            (rect_t, grid_t, regime.value, rigor, collect_cells, i, min(i + chunk, nx))
            for i in range(0, nx, chunk)
        ]
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            partials = list(pool.map(_scan_columns, tasks))

    best = math.inf
    best_index = None
    best_cell = None
    feasible = 0
    failure = None
    rows: list[CellRecord] = []
    for part in partials:
        feasible += part["feasible"]
        rows.extend(part["rows"])
        fail = part["embedding_failure"]
        if fail is not None and (failure is None or fail[:2] < failure[:2]):
            failure = fail
        if part["best_index"] is not None and (
            part["best"] < best
            or (part["best"] == best and part["best_index"] < best_index)
        ):
            best = part["best"]
            best_index = part["best_index"]
            best_cell = part["best_cell"]

    if failure is not None:
        i, j, cell = failure
        raise CampaignError(
            f"embedding criteria failed on feasible cell {cell} (i={i}, j={j}); "
            "the certificate does not hold",
            cell=cell,
            index=(i, j),
        )
    if best_index is None:
        raise DomainError(f"no feasible cells in {rect} under {regime.value}")

    return CertReport(
        rect=rect,
        grid=grid,
        regime=regime,
        rigor=rigor,
        min_bound=best,
        min_truncated=truncate3(best),
        argmin=best_cell,
        argmin_index=best_index,
        cells_total=nx * ny,
        cells_feasible=feasible,
        precision="binary64 with outward-rounded intervals" if rigor else "binary64",
        cells=tuple(rows) if collect_cells else None,
    )


def _branch_value(regime: Regime, x: float) -> float:
    if regime is Regime.PACKING:
        return bounds.cosh_floor_packing(x)
    if regime is Regime.DISK:
        return bounds.cosh_floor_disk(x)
    return x


def select_regime(x_lo: float, x_hi: float) -> Regime:
    """Pick the envelope branch that dominates a piece [x_lo, x_hi].

    Branches are scored by their smaller value at the two endpoints and the
    best score wins, so the chosen branch is the one lying highest across
    the piece.  Any branch is sound (each is a true lower bound); the
    dominant one discards the most cells.
    """
    candidates = (Regime.PACKING, Regime.DISK, Regime.DIAGONAL)
    scores = []
    for regime in candidates:
        try:
            score = min(_branch_value(regime, x_lo), _branch_value(regime, x_hi))
        except DomainError:
            score = -math.inf
        scores.append((score, regime))
    return max(scores, key=lambda sr: sr[0])[1]


def floor_minimum(x_lo: float, x_hi: float, step: float = 1e-5) -> float:
    """Minimum of the full lower envelope over [x_lo, x_hi], sampled at `step`."""
    n = max(1, round((x_hi - x_lo) / step))
    return min(bounds.cosh_floor(x_lo + k * (x_hi - x_lo) / n) for k in range(n + 1))


def piecewise_campaign(
    grid: GridSpec = GridSpec(0.001, 0.001),
    *,
    workers: int | None = None,
    rigor: bool = False,
    collect_cells: bool = False,
) -> tuple[CertReport, ...]:
    """Certify all seven pieces of the single-muffin threshold gap.

    For each piece [x_lo, x_hi) the y-range runs from the envelope minimum
    over the piece, truncated after three decimals, up to the threshold
    value; the regime is the dominant envelope branch on the piece.
    """
    reports = []
    for x_lo, x_hi, y_value in bounds.THRESHOLD_PIECES:
        c0 = truncate3(floor_minimum(x_lo, x_hi))
        rect = Rect(x_lo, x_hi, c0, y_value)
        regime = select_regime(x_lo, x_hi)
        reports.append(
            certify_rect(
                rect,
                grid,
                regime,
                workers=workers,
                rigor=rigor,
                collect_cells=collect_cells,
            )
        )
    return tuple(reports)


def hexfree_campaign(
    grid: GridSpec = GridSpec(0.0005, 0.001),
    *,
    workers: int | None = None,
    rigor: bool = False,
    collect_cells: bool = False,
) -> CertReport:
    """Certify the hexagon-free strip left of the threshold table.

    The y-range runs from the packing floor's minimum over the strip
    (truncated down, three decimals) to the hexagon-free ceiling's maximum
    (rounded up); feasibility uses the floor and the ceiling together.
    """
    x_lo, x_hi = HEXFREE_X_RANGE
    n = round((x_hi - x_lo) / 1e-5)
    c0 = truncate3(
        min(bounds.cosh_floor_packing(x_lo + k * (x_hi - x_lo) / n) for k in range(n + 1))
    )
    d0 = ceil3(bounds.cosh_cap_hexfree(x_hi))
    rect = Rect(x_lo, x_hi, c0, d0)
    return certify_rect(
        rect,
        grid,
        Regime.CAPPED,
        workers=workers,
        rigor=rigor,
        collect_cells=collect_cells,
    )

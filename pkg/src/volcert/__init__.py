"""Certified volume lower bounds for hyperbolic 3-manifolds with genus-2
totally geodesic boundary.

The library walks from right-angled-hexagon trigonometry (:mod:`.hyptrig`)
through muffin and collar geometry (:mod:`.muffin`) to the certified bound
functions (:mod:`.bounds`) and the rectangle-subdivision certification
engine (:mod:`.certify`).  The command-line entry point lives in
:mod:`.cli`.
"""

from .bounds import (
    COSH_FIXED_DISK,
    COSH_L1_MIN,
    THRESHOLD_PIECES,
    TRIMONIC_COSH,
    V_OCT,
    DoubleMuffinBound,
    cosh_cap_hexfree,
    cosh_floor,
    cosh_floor_disk,
    cosh_floor_packing,
    double_muffin_bound,
    single_muffin_bound,
    threshold,
)
from .certify import (
    CellRecord,
    CellVerdict,
    CertReport,
    GridSpec,
    Rect,
    Regime,
    cell_feasible,
    certify_rect,
    evaluate_cell,
    floor_minimum,
    hexfree_campaign,
    piecewise_campaign,
    select_regime,
    truncate3,
)
from .errors import CampaignError, DegenerateQuadrilateralError, DomainError
from .hyptrig import (
    LambertSides,
    SpecialArcs,
    SpectrumPoint,
    cosh_arc,
    lambert_sides,
    sinh_clearance,
    sinh_from_cosh,
    special_arcs,
)
from .interval import Interval
from .muffin import (
    EmbeddingFlags,
    MuffinGeometry,
    RectConstants,
    Transversals,
    cosh_cap_radius,
    embedding_ok,
    first_muffin_altitude,
    first_muffin_volume,
    first_muffin_volume_deriv,
    first_muffin_waist,
    muffin_geometry,
    muffin_volume,
    rect_constants,
    second_cap_radius,
    sinh_second_cap,
    transversal_bounds,
)

__version__ = "1.0.0"

__all__ = [
    "__version__",
    "CampaignError",
    "DegenerateQuadrilateralError",
    "DomainError",
    "Interval",
    "SpectrumPoint",
    "SpecialArcs",
    "LambertSides",
    "MuffinGeometry",
    "RectConstants",
    "EmbeddingFlags",
    "Transversals",
    "DoubleMuffinBound",
    "Rect",
    "GridSpec",
    "Regime",
    "CellVerdict",
    "CellRecord",
    "CertReport",
    "COSH_L1_MIN",
    "COSH_FIXED_DISK",
    "TRIMONIC_COSH",
    "V_OCT",
    "THRESHOLD_PIECES",
    "cosh_arc",
    "special_arcs",
    "lambert_sides",
    "sinh_clearance",
    "sinh_from_cosh",
    "cosh_cap_radius",
    "sinh_second_cap",
    "second_cap_radius",
    "muffin_geometry",
    "muffin_volume",
    "first_muffin_altitude",
    "first_muffin_waist",
    "first_muffin_volume",
    "first_muffin_volume_deriv",
    "rect_constants",
    "embedding_ok",
    "transversal_bounds",
    "cosh_floor_packing",
    "cosh_floor_disk",
    "cosh_floor",
    "cosh_cap_hexfree",
    "threshold",
    "single_muffin_bound",
    "double_muffin_bound",
    "cell_feasible",
    "evaluate_cell",
    "certify_rect",
    "select_regime",
    "floor_minimum",
    "piecewise_campaign",
    "hexfree_campaign",
    "truncate3",
]

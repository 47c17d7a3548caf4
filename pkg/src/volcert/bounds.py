"""Length-spectrum envelopes and the certified volume bound functions.

Everything here is phrased in x = cosh l1 and y = cosh l2.  Two curves
bound y from below: a decreasing one from the Gauss-Bonnet disk-packing
argument and an increasing one from packing disks of a fixed radius; the
diagonal y >= x always holds.  When the universal cover has no (1,1,1)
hexagon an increasing ceiling bounds y from above, and the piecewise
threshold records where a single muffin plus collar already certifies
volume >= 7.4.  Comparisons stay in cosh space throughout, which is
legitimate since cosh is increasing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._scalar import acosh, clamp0, lower, pi_times, smax, smin, sqrt
from .errors import DomainError
from .muffin import (
    collar_area_factor,
    collar_volume_term,
    cosh_cap_radius,
    first_muffin_altitude,
    first_muffin_volume,
    rect_constants,
    RectConstants,
)

__all__ = [
    "CATALAN",
    "V_OCT",
    "COSH_L1_MIN",
    "TRIMONIC_COSH",
    "COSH_FIXED_DISK",
    "THRESHOLD_PIECES",
    "DoubleMuffinBound",
    "cosh_floor_packing",
    "cosh_floor_disk",
    "cosh_floor",
    "cosh_cap_hexfree",
    "threshold",
    "single_muffin_bound",
    "double_muffin_bound",
]

CATALAN = 0.915965594177219015054603514932
#: Volume of the regular ideal hyperbolic octahedron, four times Catalan's constant.
V_OCT = 4.0 * CATALAN

#: Smallest possible cosh l1 over all genus-2 geodesic boundaries: (3 + sqrt 3)/4.
COSH_L1_MIN = (3.0 + math.sqrt(3.0)) / 4.0

#: cosh l1 value where the fixed-disk floor meets the diagonal:
#: cos(2*pi/9) / (2*cos(2*pi/9) - 1) = 1.43969...
TRIMONIC_COSH = math.cos(2.0 * math.pi / 9.0) / (2.0 * math.cos(2.0 * math.pi / 9.0) - 1.0)

#: cosh of the fixed packing-disk radius, 1/(2*sin(pi/9)) = 1.4619...
COSH_FIXED_DISK = 1.0 / (2.0 * math.sin(math.pi / 9.0))

_COSH_2FIXED = 2.0 * COSH_FIXED_DISK * COSH_FIXED_DISK - 1.0


def cosh_floor_packing(x):
    """Decreasing lower bound on cosh l2 from four disjoint packing disks.

    The caps of radius r around the shortest path's feet and the leftover
    radius r' with cosh r' = 3 - cosh r must fit inside area 4*pi, which
    caps the connecting arc and hence floors l2:

        cosh(floor) = 1 + 2 / (cosh^2(r + r') * tanh^2(l1) - 1)

    Decreasing on [COSH_L1_MIN, 1.4].
    """
    if lower(x) < COSH_L1_MIN:
        raise DomainError(f"packing floor needs x >= {COSH_L1_MIN}, got {x!r}")
    cr = cosh_cap_radius(x)
    crp = 3.0 - cr
    if lower(crp) <= 1.0:
        raise DomainError(f"leftover radius undefined at x = {x!r}")
    # cosh(r + r') by the addition rule, rational in the two cosh values
    cosh_sum = cr * crp + sqrt(cr * cr - 1.0) * sqrt(crp * crp - 1.0)
    tanh2_l1 = (x * x - 1.0) / (x * x)
    den = cosh_sum * cosh_sum * tanh2_l1 - 1.0
    if lower(den) <= 0.0:
        raise DomainError(f"packing floor undefined at x = {x!r}")
    return 1.0 + 2.0 / den


def cosh_floor_disk(x):
    """Increasing lower bound on cosh l2 from disks of the fixed radius:

        cosh(floor) = sqrt(1 + (x + 1)/(cosh(2 r'') - 1))

    with cosh r'' = COSH_FIXED_DISK.  Crosses the diagonal exactly at
    TRIMONIC_COSH.
    """
    if lower(x) < 1.0:
        raise DomainError("disk floor needs x >= 1")
    return sqrt(1.0 + (x + 1.0) / (_COSH_2FIXED - 1.0))


def cosh_floor(x):
    """The full lower envelope for cosh l2: max of diagonal and both floors.

    The max of cosh values is the cosh of the max of lengths, so the
    envelope can be formed without leaving cosh space.
    """
    if lower(x) < COSH_L1_MIN:
        raise DomainError(f"envelope needs x >= {COSH_L1_MIN}")
    best = smax(x, cosh_floor_disk(x))
    try:
        best = smax(best, cosh_floor_packing(x))
    except DomainError:
        pass
    return best


def cosh_cap_hexfree(x):
    """Increasing ceiling on cosh l2 when no (1,1,1)-hexagon exists:

        (2 + 2*sqrt(3)) * x^2 - (3 + 2*sqrt(3)),

    equivalently (2 + 2*sqrt(3)) * sinh^2(l1) - 1.
    """
    if lower(x) <= 1.0:
        raise DomainError("hexagon-free ceiling needs x > 1")
    s3 = math.sqrt(3.0)
    return (2.0 + 2.0 * s3) * (x * x) - (3.0 + 2.0 * s3)


#: Pieces (x_lo, x_hi, y_value) of the single-muffin threshold; each piece
#: is the half-open interval [x_lo, x_hi).
THRESHOLD_PIECES = (
    (1.24, 1.25, 1.986),
    (1.25, 1.27, 1.9),
    (1.27, 1.3, 1.8),
    (1.3, 1.35, 1.68),
    (1.35, 1.4, 1.59),
    (1.4, 1.45, 1.55),
    (1.45, 1.5, 1.52),
)


def threshold(x: float) -> float:
    """The piecewise-constant cosh l2 threshold over [1.24, 1.5).

    Above it a single muffin plus collar already certifies volume >= 7.4.
    Right endpoints are excluded: x = 1.5 and beyond is handled by a
    separate monotone argument, not by this table.
    """
    for x_lo, x_hi, value in THRESHOLD_PIECES:
        if x_lo <= x < x_hi:
            return value
    raise DomainError(f"threshold is defined on [1.24, 1.5), got {x}")


def single_muffin_bound(x, collar_height):
    """Volume bound from the first muffin plus a collar of the given height.

        first_muffin_volume(x) + pi*(2 - cosh r(x))*(2h + sinh 2h)

    Increasing in h whenever cosh r(x) < 2, which holds for every feasible x.
    The caller picks the certified height: min(altitude, l2/2) in general,
    l1/2 when only the diagonal bound on l2 is available.
    """
    if lower(collar_height) < 0.0:
        raise DomainError("collar height must be nonnegative")
    area = 2.0 - cosh_cap_radius(x)
    return first_muffin_volume(x) + pi_times(area) * collar_volume_term(collar_height)


@dataclass(frozen=True)
class DoubleMuffinBound:
    """The two double-muffin volume bounds over a box, and their max.

    with_collar may fall below muffin_sum: the corner-certified exposed
    boundary area can go negative, so the engine records the larger bound.
    """

    muffin_sum: float
    with_collar: float
    best: float
    constants: RectConstants


def double_muffin_bound(a, b, c, d) -> DoubleMuffinBound:
    """Certified volume bound over the box [a,b] x [c,d] from two muffins.

    muffin_sum adds the first muffin's volume at its smallest (x = b) to the
    box-wide lower bound on the second muffin's volume.  with_collar adds a
    collar over the boundary outside all four caps, with height capped by
    the first altitude (at a), half the second length (at c), and the
    second muffin's clearance margin, clamped at zero when nonpositive.
    Degenerate boxes (a = b and/or c = d) give the pointwise bounds.
    """
    rc = rect_constants(a, b, c, d)
    muffin_sum = first_muffin_volume(b) + rc.second_volume

    h = clamp0(smin(first_muffin_altitude(a), 0.5 * acosh(c), rc.collar_height))
    area = collar_area_factor(a, b, c)
    with_collar = muffin_sum + pi_times(area) * collar_volume_term(h)

    return DoubleMuffinBound(
        muffin_sum=muffin_sum,
        with_collar=with_collar,
        best=smax(muffin_sum, with_collar),
        constants=rc,
    )

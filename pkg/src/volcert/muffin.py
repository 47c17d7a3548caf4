"""Muffin and collar geometry.

A muffin is the hyperbolic solid of revolution of a four-right-angled
pentagon about its base: a tube of height l capped by two geodesic disks
of radius r, with waist radius w and side altitude a solving the Lambert
quadrilateral for (l/2, r).  Two muffins matter here: the first one rides
the shortest return path with the cap radius fixed by disk packing on the
genus-2 boundary; the second rides the second-shortest path with the cap
radius that the packing leaves over.

Rectangle-wise constants bound every relevant quantity over a parameter
box [a,b] x [c,d] of (cosh l1, cosh l2) values by evaluating monotone
formulas at the correct corners, so one evaluation certifies the whole box.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._scalar import (
    acosh,
    asinh,
    atanh,
    clamp0,
    cosh,
    lower,
    sinh,
    smin,
    sqrt,
    two_pi_times,
    upper,
)
from .errors import DomainError
from .hyptrig import lambert_sides, sinh_from_cosh

__all__ = [
    "MuffinGeometry",
    "RectConstants",
    "EmbeddingFlags",
    "Transversals",
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
]


def cosh_cap_radius(x):
    """cosh of the first muffin's cap radius: sqrt((2x - 1)/(2x - 2)).

    Half the shortest boundary arc between the feet of the shortest return
    path; strictly decreasing in x and tending to 1 from above.
    """
    if lower(x) <= 1.0:
        raise DomainError("cosh_cap_radius needs x > 1")
    return sqrt((2.0 * x - 1.0) / (2.0 * x - 2.0))


def sinh_second_cap(x, y):
    """sinh of the second cap radius, in the cancellation-free closed form.

    The radius is the arc between feet of the shortest and second-shortest
    paths minus the first cap radius.  Near x = 1 both terms diverge and
    their difference cancels catastrophically, so this sinh form is the one
    to evaluate:

        ( sqrt((2x^2 + y - 1)(2x - 1)) - x*sqrt(y + 1) )
        / ( (x - 1) * sqrt(2 (x + 1)(y - 1)) )
    """
    if lower(x) <= 1.0 or lower(y) <= 1.0:
        raise DomainError("sinh_second_cap needs x, y > 1")
    num = sqrt((2.0 * x * x + y - 1.0) * (2.0 * x - 1.0)) - x * sqrt(y + 1.0)
    den = (x - 1.0) * sqrt(2.0 * (x + 1.0) * (y - 1.0))
    return num / den


def second_cap_radius(x, y):
    """The second cap radius as a length; positive for x > 1, y <= 3."""
    return asinh(sinh_second_cap(x, y))


@dataclass(frozen=True)
class MuffinGeometry:
    """Derived quantities of one muffin, lengths alongside the defining pair."""

    cosh_height: float
    cap_radius: float
    altitude: float
    waist: float
    volume: float


def muffin_geometry(cosh_height, cap_radius) -> MuffinGeometry:
    """Solve a muffin from its height (as cosh) and cap radius (as length).

    volume = 2*pi*(altitude * cosh(cap_radius) - height/2), never negative.
    """
    if lower(cap_radius) < 0.0:
        raise DomainError("cap_radius must be a nonnegative length")
    cosh_r = cosh(cap_radius)
    sides = lambert_sides(cosh_height, cosh_r)
    vol = two_pi_times(sides.altitude * cosh_r - 0.5 * acosh(cosh_height))
    return MuffinGeometry(
        cosh_height=cosh_height,
        cap_radius=cap_radius,
        altitude=sides.altitude,
        waist=sides.waist,
        volume=vol,
    )


def muffin_volume(cosh_height, cap_radius):
    """Volume of the muffin with the given height (cosh) and cap radius (length)."""
    return muffin_geometry(cosh_height, cap_radius).volume


def first_muffin_altitude(x):
    """Side altitude of the first muffin:  cosh(2*altitude) = (4x + 1)/3."""
    if lower(x) <= 1.0:
        raise DomainError("first_muffin_altitude needs x > 1")
    return 0.5 * acosh((4.0 * x + 1.0) / 3.0)


def first_muffin_waist(x):
    """Waist radius of the first muffin:  tanh(waist) = sqrt((x + 1)/(4x - 2))."""
    if lower(x) <= 1.0:
        raise DomainError("first_muffin_waist needs x > 1")
    return atanh(sqrt((x + 1.0) / (4.0 * x - 2.0)))


def first_muffin_volume(x):
    """Volume of the first muffin as a function of x = cosh l1; strictly decreasing."""
    return two_pi_times(first_muffin_altitude(x) * cosh_cap_radius(x) - 0.5 * acosh(x))


def first_muffin_volume_deriv(x):
    """d/dx of :func:`first_muffin_volume`, in closed form.

    Only the cap-radius factor survives differentiation:
        2*pi * altitude(x) * d/dx cosh(cap radius)
      = -2*pi * altitude(x) / ((2x - 2)^{3/2} * sqrt(2x - 1))  < 0.
    """
    if lower(x) <= 1.0:
        raise DomainError("first_muffin_volume_deriv needs x > 1")
    d_cosh_r = -1.0 / ((2.0 * x - 2.0) ** 1.5 * sqrt(2.0 * x - 1.0))
    return two_pi_times(first_muffin_altitude(x) * d_cosh_r)


@dataclass(frozen=True)
class Transversals:
    """Lower bounds on distances between centers of muffin translates."""

    cosh_d: float
    tanh_half_d: float
    t12: float
    t22: float


def transversal_bounds(x, y) -> Transversals:
    """Transversal-length lower bounds from the truncated-tetrahedron estimates.

        cosh d        = 2x/(x - 1)          first muffin vs its own translates
        tanh(d/2)     = sqrt((x+1)/(3x-1))
        t12           = acosh(2x / sqrt((x-1)(y-1)))   first vs second
        t22           = acosh(2x / (y-1))              second vs its translates

    t22 exists only when 2x/(y - 1) >= 1; below that the bound is vacuous
    and a DomainError signals it.
    """
    if lower(x) <= 1.0 or lower(y) <= 1.0:
        raise DomainError("transversal_bounds needs x, y > 1")
    t22_arg = 2.0 * x / (y - 1.0)
    if upper(t22_arg) < 1.0:
        raise DomainError(f"t22 bound is vacuous: 2x/(y-1) = {t22_arg!r} < 1")
    return Transversals(
        cosh_d=2.0 * x / (x - 1.0),
        tanh_half_d=sqrt((x + 1.0) / (3.0 * x - 1.0)),
        t12=acosh(2.0 * x / sqrt((x - 1.0) * (y - 1.0))),
        t22=acosh(t22_arg),
    )


@dataclass(frozen=True)
class RectConstants:
    """One-shot bounds valid across a whole parameter box [a,b] x [c,d].

    waist_first / waist_second bound the muffin waists above; clearance_second
    bounds below the distance from the second path's lift to third boundary
    planes; t12 / t22 bound the transversal lengths below; collar_height is
    clearance_second - waist_second and may be nonpositive (flagged, not an
    error: a nonpositive value just removes the collar contribution);
    second_volume bounds the second muffin's volume below.
    """

    waist_first: float
    waist_second: float
    clearance_second: float
    t12: float
    t22: float
    collar_height: float
    second_volume: float


def _check_rect_domain(a, b, c, d):
    if not (1.0 < lower(a) and upper(a) <= upper(b) and upper(b) <= 2.0):
        raise DomainError(f"need 1 < a <= b <= 2, got a={a!r}, b={b!r}")
    if not (1.0 < lower(c) and upper(c) <= upper(d) and upper(d) <= 3.0):
        raise DomainError(f"need 1 < c <= d <= 3, got c={c!r}, d={d!r}")


def rect_constants(a, b, c, d) -> RectConstants:
    """Evaluate the box-wide constants at their certifying corners.

    The second cap radius increases in x and decreases in y, so S(b, c) is
    its maximum over the box (feeding waist upper bounds) and S(a, d) its
    minimum (feeding the volume lower bound); the first waist decreases in
    x, the clearance is smallest at (a, d), and the transversal bounds are
    smallest at (b, d) and (a, d) respectively.  No per-cell optimization
    happens: corner evaluation certifies the whole box.
    """
    _check_rect_domain(a, b, c, d)

    waist_first = atanh(sqrt((a + 1.0) / (4.0 * a - 2.0)))

    s_hi = sinh_second_cap(b, c)
    # tanh/cosh of the radius straight from its sinh, no length round-trip
    tanh_s_hi = s_hi / sqrt(1.0 + s_hi * s_hi)
    w2_arg = sqrt((d + 1.0) / 2.0) * tanh_s_hi
    if upper(w2_arg) >= 1.0:
        raise DomainError(
            f"second waist bound degenerates (atanh argument {w2_arg!r} >= 1)"
        )
    waist_second = atanh(w2_arg)

    clearance_second = asinh(a * sqrt(2.0) / sqrt(d - 1.0))

    t12 = acosh(2.0 * b / sqrt((b - 1.0) * (d - 1.0)))
    t22_arg = 2.0 * a / (d - 1.0)
    if upper(t22_arg) < 1.0:
        raise DomainError(f"t22 bound is vacuous: 2a/(d-1) = {t22_arg!r} < 1")
    t22 = acosh(t22_arg)

    s_lo = sinh_second_cap(a, d)
    cosh_s_lo = sqrt(1.0 + s_lo * s_lo)
    a0_arg = cosh_s_lo * sqrt((c - 1.0) / (c + 1.0))
    if upper(a0_arg) >= 1.0:
        raise DomainError(
            f"second altitude bound degenerates (atanh argument {a0_arg!r} >= 1)"
        )
    altitude_second = atanh(a0_arg)
    second_volume = two_pi_times(altitude_second * cosh_s_lo - 0.5 * acosh(d))

    return RectConstants(
        waist_first=waist_first,
        waist_second=waist_second,
        clearance_second=clearance_second,
        t12=t12,
        t22=t22,
        collar_height=clearance_second - waist_second,
        second_volume=second_volume,
    )


@dataclass(frozen=True)
class EmbeddingFlags:
    """The three disjoint-embedding criteria for the second muffin.

    within_walls: its waist stays inside the boundary-plane clearance.
    clears_first: the two muffins' tubes cannot meet (t12 transversal).
    clears_self:  its own translates cannot meet (t22 transversal).
    """

    within_walls: bool
    clears_first: bool
    clears_self: bool

    @property
    def all_ok(self) -> bool:
        return self.within_walls and self.clears_first and self.clears_self

    def as_tuple(self) -> tuple[bool, bool, bool]:
        return (self.within_walls, self.clears_first, self.clears_self)


def embedding_ok(rc: RectConstants) -> EmbeddingFlags:
    """Check the three embedding inequalities, non-strictly.

    In rigor mode the comparisons demand the inequality certainly holds
    (upper endpoint against lower endpoint); on floats they reduce to the
    plain non-strict comparisons.
    """
    return EmbeddingFlags(
        within_walls=upper(rc.waist_second) <= lower(rc.clearance_second),
        clears_first=upper(rc.waist_first + rc.waist_second) <= lower(rc.t12),
        clears_self=upper(2.0 * rc.waist_second) <= lower(rc.t22),
    )


def collar_area_factor(a, b, c):
    """Area of the boundary outside all four caps, over 4*pi: 3 - cosh(r1) - cosh(r2).

    Evaluated at the corners that maximize the cap radii over the box, so the
    result underestimates the exposed area; it may come out negative, in
    which case the collar adds nothing.
    """
    s = sinh_second_cap(b, c)
    return 3.0 - cosh_cap_radius(a) - sqrt(1.0 + s * s)


def collar_volume_term(h):
    """Collar volume per unit area factor: 2h + sinh(2h), clamped at h = 0."""
    return 2.0 * h + sinh(2.0 * h)


def collar_height_over(a, c, rc: RectConstants):
    """Certified collar height over a box: min of the three ceilings.

    The first muffin's altitude (increasing, so taken at a), half the
    second path length (taken at c), and the second muffin's clearance
    margin.  Never negative; a nonpositive margin zeroes the collar.
    """
    h = smin(first_muffin_altitude(a), 0.5 * acosh(c), rc.collar_height)
    return clamp0(h)

"""Right-angled-hexagon and Lambert-quadrilateral trigonometry kernel.

Lengths are carried as hyperbolic cosines wherever possible: the relations
used here are rational in cosh values, and staying in cosh space avoids
round-tripping through transcendental functions inside hot loops.  Lengths
proper are recovered on demand with a clamped arccosh.

All functions are pure and thread-safe.  Domain violations raise
:class:`DomainError` rather than returning sentinels: a bad argument here
is a caller bug, not a data condition.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._scalar import acosh, atanh, lower, sqrt, upper
from .errors import DegenerateQuadrilateralError, DomainError

__all__ = [
    "DomainError",
    "DegenerateQuadrilateralError",
    "SpectrumPoint",
    "SpecialArcs",
    "LambertSides",
    "sinh_from_cosh",
    "cosh_arc",
    "special_arcs",
    "lambert_sides",
    "sinh_clearance",
    "length_of",
]


def sinh_from_cosh(c):
    """sinh of a nonnegative length given its cosh: sqrt(c^2 - 1)."""
    if lower(c) < 1.0:
        raise DomainError(f"cosh value {c!r} is below 1")
    return sqrt(c * c - 1.0)


@dataclass(frozen=True)
class SpectrumPoint:
    """A point (x, y) = (cosh l1, cosh l2) of orthospectrum parameter space.

    The second-shortest return path is no shorter than the shortest one,
    so 1 < x <= y.
    """

    x: float
    y: float

    def __post_init__(self):
        if not (1.0 < self.x <= self.y):
            raise DomainError(f"spectrum point needs 1 < x <= y, got ({self.x}, {self.y})")


def cosh_arc(ci, cj, ck):
    """cosh of the boundary arc joining feet of return paths i and j.

    The arc is the external hexagon edge opposite the k-th internal edge;
    the right-angled hexagon rule gives

        cosh(arc) = (ci*cj + ck) / (sinh_i * sinh_j),

    symmetric in (ci, cj), where the arguments are the cosh of the three
    internal edge lengths.  Requires ci, cj > 1 (nonzero sinh) and ck >= 1.
    """
    if lower(ci) <= 1.0 or lower(cj) <= 1.0:
        raise DomainError("cosh_arc needs ci, cj > 1")
    if lower(ck) < 1.0:
        raise DomainError("cosh_arc needs ck >= 1")
    return (ci * cj + ck) / (sinh_from_cosh(ci) * sinh_from_cosh(cj))


@dataclass(frozen=True)
class SpecialArcs:
    """Closed forms of the four boundary arcs the volume bounds consume."""

    cosh_arc_111: float
    cosh_arc_112: float
    cosh_arc_121: float
    sinh_half_arc_221: float


def special_arcs(x, y) -> SpecialArcs:
    """Closed-form specializations of :func:`cosh_arc` at (x, y) = (cosh l1, cosh l2).

        cosh(arc_111)      = 1 + 1/(x - 1)
        cosh(arc_112)      = 1 + (1 + y)/(x^2 - 1)
        cosh(arc_121)      = coth(l1) * sqrt(1 + 2/(y - 1))
        sinh(arc_221 / 2)  = sqrt(x + 1) / (sqrt(2) * sinh l2)

    Each agrees with cosh_arc on the matching triple to 1e-12 relative.
    """
    if lower(x) <= 1.0 or lower(y) <= 1.0:
        raise DomainError("special_arcs needs x, y > 1")
    coth_l1 = x / sinh_from_cosh(x)
    return SpecialArcs(
        cosh_arc_111=1.0 + 1.0 / (x - 1.0),
        cosh_arc_112=1.0 + (1.0 + y) / (x * x - 1.0),
        cosh_arc_121=coth_l1 * sqrt(1.0 + 2.0 / (y - 1.0)),
        sinh_half_arc_221=sqrt(x + 1.0) / (sqrt(2.0) * sinh_from_cosh(y)),
    )


@dataclass(frozen=True)
class LambertSides:
    """The two remaining sides of a Lambert quadrilateral (three right angles)."""

    altitude: float
    waist: float


def lambert_sides(cosh_len, cosh_r) -> LambertSides:
    """Solve the Lambert quadrilateral with base l/2 and side r.

    With cosh_len = cosh l and cosh_r = cosh r:

        tanh(altitude) = cosh r * tanh(l/2)
        tanh(waist)    = cosh(l/2) * tanh r

    Both right sides must stay below 1 or the quadrilateral degenerates.
    """
    if lower(cosh_len) <= 1.0:
        raise DomainError("lambert_sides needs cosh_len > 1")
    if lower(cosh_r) < 1.0:
        raise DomainError("lambert_sides needs cosh_r >= 1")
    tanh_half = sqrt((cosh_len - 1.0) / (cosh_len + 1.0))
    cosh_half = sqrt((cosh_len + 1.0) / 2.0)
    tanh_r = sinh_from_cosh(cosh_r) / cosh_r
    arg_a = cosh_r * tanh_half
    arg_w = cosh_half * tanh_r
    if upper(arg_a) >= 1.0 or upper(arg_w) >= 1.0:
        raise DegenerateQuadrilateralError(
            f"quadrilateral degenerates for cosh_len={cosh_len!r}, cosh_r={cosh_r!r}"
        )
    return LambertSides(altitude=atanh(arg_a), waist=atanh(arg_w))


def sinh_clearance(cosh_k, x):
    """sinh of the clearance from a lifted return path to any third boundary plane.

    For the k-th return path:  sinh(clearance) = cosh l1 / sinh(l_k / 2),
    with sinh(l_k / 2) = sqrt((cosh l_k - 1)/2).  The bound x >= 1 carries
    cosh l1.
    """
    if lower(cosh_k) <= 1.0:
        raise DomainError("sinh_clearance needs cosh_k > 1")
    if lower(x) < 1.0:
        raise DomainError("sinh_clearance needs x >= 1")
    return x / sqrt((cosh_k - 1.0) / 2.0)


def length_of(cosh_value):
    """Recover a length from its cosh (clamped at 1 against downward rounding)."""
    return acosh(cosh_value)

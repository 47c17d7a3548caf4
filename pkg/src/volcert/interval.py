"""Outward-rounded interval arithmetic for the optional rigor mode.

Every operation widens its result so the true real value is contained in
[lo, hi] whatever binary64 rounding did.  Arithmetic widens by one ulp per
endpoint; transcendental functions by two ulps, since libm is not promised
to be correctly rounded (IEEE sqrt is, and keeps one ulp).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

_INF = math.inf


def _dn(v: float) -> float:
    return math.nextafter(v, -_INF)


def _up(v: float) -> float:
    return math.nextafter(v, _INF)


def _dn2(v: float) -> float:
    return _dn(_dn(v))


def _up2(v: float) -> float:
    return _up(_up(v))


@dataclass(frozen=True, slots=True)
class Interval:
    """A closed interval [lo, hi] guaranteed to contain the exact value."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (self.lo <= self.hi):
            raise DomainError(f"empty interval [{self.lo}, {self.hi}]")

    @staticmethod
    def point(v: float) -> "Interval":
        return Interval(v, v)

    @staticmethod
    def _coerce(v) -> "Interval":
        if isinstance(v, Interval):
            return v
        return Interval(v, v)

    def __add__(self, other):
        o = Interval._coerce(other)
        return Interval(_dn(self.lo + o.lo), _up(self.hi + o.hi))

    __radd__ = __add__

    def __sub__(self, other):
        o = Interval._coerce(other)
        return Interval(_dn(self.lo - o.hi), _up(self.hi - o.lo))

    def __rsub__(self, other):
        return Interval._coerce(other).__sub__(self)

    def __mul__(self, other):
        o = Interval._coerce(other)
        cands = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(_dn(min(cands)), _up(max(cands)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Interval._coerce(other)
        if o.lo <= 0.0 <= o.hi:
            raise DomainError("interval division by an interval containing zero")
        cands = (self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi)
        return Interval(_dn(min(cands)), _up(max(cands)))

    def __rtruediv__(self, other):
        return Interval._coerce(other).__truediv__(self)

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def sqrt(self) -> "Interval":
        if self.hi < 0.0:
            raise DomainError("sqrt of a negative interval")
        # A slightly negative lo can only come from outward widening of a
        # mathematically nonnegative value, so the floor of the image is 0.
        lo = 0.0 if self.lo < 0.0 else max(0.0, _dn(math.sqrt(self.lo)))
        return Interval(lo, _up(math.sqrt(self.hi)))

    def acosh(self) -> "Interval":
        if self.hi < 1.0:
            raise DomainError("acosh of an interval below 1")
        lo = 0.0 if self.lo < 1.0 else max(0.0, _dn2(math.acosh(self.lo)))
        return Interval(lo, _up2(math.acosh(self.hi)))

    def asinh(self) -> "Interval":
        return Interval(_dn2(math.asinh(self.lo)), _up2(math.asinh(self.hi)))

    def atanh(self) -> "Interval":
        if self.hi >= 1.0 or self.lo <= -1.0:
            raise DomainError("atanh of an interval reaching |1|")
        return Interval(_dn2(math.atanh(self.lo)), _up2(math.atanh(self.hi)))

    def sinh(self) -> "Interval":
        return Interval(_dn2(math.sinh(self.lo)), _up2(math.sinh(self.hi)))

    def cosh(self) -> "Interval":
        if self.lo >= 0.0:
            return Interval(max(1.0, _dn2(math.cosh(self.lo))), _up2(math.cosh(self.hi)))
        if self.hi <= 0.0:
            return Interval(max(1.0, _dn2(math.cosh(self.hi))), _up2(math.cosh(self.lo)))
        return Interval(1.0, _up2(math.cosh(max(-self.lo, self.hi))))

    def contains(self, v: float) -> bool:
        return self.lo <= v <= self.hi

    @property
    def width(self) -> float:
        return self.hi - self.lo


# 2*math.pi is the binary64 nearest to tau, so one ulp out on each side encloses it;
# same for pi.
PI = Interval(_dn(math.pi), _up(math.pi))
TWO_PI = Interval(_dn(math.tau), _up(math.tau))

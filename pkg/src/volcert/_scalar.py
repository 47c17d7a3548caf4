"""Scalar math shims that accept either binary64 floats or Intervals.

The geometric kernels are written once against these functions; in default
mode they reduce to `math.*` on floats, in rigor mode the same code paths
propagate outward-rounded intervals.
"""

from __future__ import annotations

import math

from .interval import PI, TWO_PI, Interval


def lower(v) -> float:
    return v.lo if isinstance(v, Interval) else v


def upper(v) -> float:
    return v.hi if isinstance(v, Interval) else v


def sqrt(v):
    if isinstance(v, Interval):
        return v.sqrt()
    return math.sqrt(v)


def acosh(v):
    """arccosh with the argument clamped at 1, guarding against 1 - eps from rounding."""
    if isinstance(v, Interval):
        return v.acosh()
    return math.acosh(v if v > 1.0 else 1.0)


def asinh(v):
    if isinstance(v, Interval):
        return v.asinh()
    return math.asinh(v)


def atanh(v):
    if isinstance(v, Interval):
        return v.atanh()
    return math.atanh(v)


def sinh(v):
    if isinstance(v, Interval):
        return v.sinh()
    return math.sinh(v)


def cosh(v):
    if isinstance(v, Interval):
        return v.cosh()
    return math.cosh(v)


def smin(*vals):
    if any(isinstance(v, Interval) for v in vals):
        ivs = [Interval._coerce(v) for v in vals]
        return Interval(min(iv.lo for iv in ivs), min(iv.hi for iv in ivs))
    return min(vals)


def smax(*vals):
    if any(isinstance(v, Interval) for v in vals):
        ivs = [Interval._coerce(v) for v in vals]
        return Interval(max(iv.lo for iv in ivs), max(iv.hi for iv in ivs))
    return max(vals)


def clamp0(v):
    """max(v, 0): collar heights never go negative."""
    return smax(v, 0.0)


def pi_times(v):
    if isinstance(v, Interval):
        return PI * v
    return math.pi * v


def two_pi_times(v):
    if isinstance(v, Interval):
        return TWO_PI * v
    return math.tau * v

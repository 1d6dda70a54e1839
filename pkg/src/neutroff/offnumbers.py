"""Triangular and trapezoidal single-valued offnumbers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import ThresholdFrame
from .values import RationalLike, ValidationError, q


def _check_peaks(frame: ThresholdFrame, w, u, y):
    for c, v in zip("tif", (w, u, y)):
        lo, hi = frame.channel(c)
        if not lo <= v <= hi:
            raise ValidationError(f"peak {c.upper()} = {v} outside [{lo}, {hi}]")


@dataclass(frozen=True)
class TriangularOffnumber:
    a1: Fraction
    a2: Fraction
    a3: Fraction
    w: Fraction
    u: Fraction
    y: Fraction
    frame: ThresholdFrame

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "w", "u", "y"):
            object.__setattr__(self, name, q(getattr(self, name)))
        if not self.a1 <= self.a2 <= self.a3:
            raise ValidationError(f"abscissae must satisfy a1 <= a2 <= a3, got {self.a1}, {self.a2}, {self.a3}")
        _check_peaks(self.frame, self.w, self.u, self.y)

    def __call__(self, x: RationalLike):
        return triangular_eval(self, x)


@dataclass(frozen=True)
class TrapezoidalOffnumber:
    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    w: Fraction
    u: Fraction
    y: Fraction
    frame: ThresholdFrame

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "w", "u", "y"):
            object.__setattr__(self, name, q(getattr(self, name)))
        if not self.a1 <= self.a2 <= self.a3 <= self.a4:
            raise ValidationError("abscissae must satisfy a1 <= a2 <= a3 <= a4")
        _check_peaks(self.frame, self.w, self.u, self.y)

    def __call__(self, x: RationalLike):
        return trapezoidal_eval(self, x)


def _rise(x, a, b, peak):
    # left branch: 0 at a, peak at b
    return (x - a) * peak / (b - a)


def _fall_to_one(x, a, b, peak):
    # left branch for I/F: 1 at a, peak at b
    return (b - x + peak * (x - a)) / (b - a)


def _outside(frame: ThresholdFrame):
    return (frame.psi_t, frame.omega_i, frame.omega_f)


def triangular_eval(n: TriangularOffnumber, x: RationalLike) -> tuple[Fraction, Fraction, Fraction]:
    """(T, I, F) at ``x``.

    Branches are taken in the printed order, so a collapsed side never reaches
    its division: with a1 = a2 the left branch is empty and x = a2 hits the peak.
    """
    x = q(x)
    a1, a2, a3 = n.a1, n.a2, n.a3
    if a1 <= x < a2:
        return (_rise(x, a1, a2, n.w), _fall_to_one(x, a1, a2, n.u), _fall_to_one(x, a1, a2, n.y))
    if x == a2:
        return (n.w, n.u, n.y)
    if a2 < x <= a3:
        return (
            (a3 - x) * n.w / (a3 - a2),
            (x - a2 + n.u * (a3 - x)) / (a3 - a2),
            (x - a2 + n.y * (a3 - x)) / (a3 - a2),
        )
    return _outside(n.frame)


def trapezoidal_eval(n: TrapezoidalOffnumber, x: RationalLike) -> tuple[Fraction, Fraction, Fraction]:
    x = q(x)
    a1, a2, a3, a4 = n.a1, n.a2, n.a3, n.a4
    if a1 <= x < a2:
        return (_rise(x, a1, a2, n.w), _fall_to_one(x, a1, a2, n.u), _fall_to_one(x, a1, a2, n.y))
    if a2 <= x <= a3:
        return (n.w, n.u, n.y)
    if a3 < x <= a4:
        return (
            (a4 - x) * n.w / (a4 - a3),
            (x - a3 + n.u * (a4 - x)) / (a4 - a3),
            (x - a3 + n.y * (a4 - x)) / (a4 - a3),
        )
    return _outside(n.frame)

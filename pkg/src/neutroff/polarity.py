"""Bipolar, tripolar and multipolar elements, and antagonism between offsets."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence

from .core import Classification, ThresholdFrame, scan
from .values import RationalLike, SubsetValue, ValidationError, ValueLike, q, sv

# polar components trip at -1 and 1 rather than 0 and 1
POLAR_LO, POLAR_HI = Fraction(-1), Fraction(1)

# baseline ranges per pole
_RANGES = {
    "+": (Fraction(0), Fraction(1)),
    "0": (Fraction(-1), Fraction(1)),
    "-": (Fraction(-1), Fraction(0)),
}


def _triple(x) -> tuple[SubsetValue, SubsetValue, SubsetValue]:
    x = tuple(x)
    if len(x) != 3:
        raise ValidationError(f"expected a (t, i, f) triple, got {len(x)} values")
    return tuple(sv(v) for v in x)  # type: ignore[return-value]


def _check_pole(id: str, pole: str, label: str, trip, relaxed: bool):
    if relaxed:
        return
    lo, hi = _RANGES[pole]
    for c, v in zip("TIF", trip):
        if v.is_empty:
            raise ValidationError(f"{id}.{c}{label}: empty component")
        if not v.within(lo, hi):
            raise ValidationError(f"{id}.{c}{label} = {v} outside baseline [{lo}, {hi}]; mark the element off to relax")


def _records(id: str, label: str, trip):
    for c, v in zip("TIF", trip):
        yield (f"{id}.{c}{label}", v, POLAR_LO, POLAR_HI)


@dataclass(frozen=True)
class BipolarElement:
    id: str
    pos: tuple
    neg: tuple
    off: bool = False

    def __post_init__(self):
        object.__setattr__(self, "id", str(self.id))
        object.__setattr__(self, "pos", _triple(self.pos))
        object.__setattr__(self, "neg", _triple(self.neg))
        _check_pole(self.id, "+", "+", self.pos, self.off)
        _check_pole(self.id, "-", "-", self.neg, self.off)

    @classmethod
    def from_channels(cls, id, t, i, f, off: bool = False) -> "BipolarElement":
        """Build from ``T=(T+, T-)``, ``I=(I+, I-)``, ``F=(F+, F-)`` pairs."""
        return cls(id, (t[0], i[0], f[0]), (t[1], i[1], f[1]), off)

    def records(self):
        yield from _records(self.id, "+", self.pos)
        yield from _records(self.id, "-", self.neg)


@dataclass(frozen=True)
class TripolarElement:
    """Positive, neutral and negative (t, i, f) triples.

    Baseline ranges are [0, 1], [-1, 1] and [-1, 0] per pole; ``off=True``
    lifts them so over/under values can be represented.
    """

    id: str
    pos: tuple
    neu: tuple
    neg: tuple
    off: bool = False

    def __post_init__(self):
        object.__setattr__(self, "id", str(self.id))
        for name in ("pos", "neu", "neg"):
            object.__setattr__(self, name, _triple(getattr(self, name)))
        _check_pole(self.id, "+", "+", self.pos, self.off)
        _check_pole(self.id, "0", "0", self.neu, self.off)
        _check_pole(self.id, "-", "-", self.neg, self.off)

    @classmethod
    def from_channels(cls, id, t, i, f, off: bool = False) -> "TripolarElement":
        """Build from channel-major ``T=(T+, T0, T-)`` etc."""
        t, i, f = tuple(t), tuple(i), tuple(f)
        return cls(id, (t[0], i[0], f[0]), (t[1], i[1], f[1]), (t[2], i[2], f[2]), off)

    def records(self):
        yield from _records(self.id, "+", self.pos)
        yield from _records(self.id, "0", self.neu)
        yield from _records(self.id, "-", self.neg)


@dataclass(frozen=True)
class MultipolarElement:
    """Triples for positive poles b1 < ... < bn, an optional neutral pole, and
    the matching negative poles."""

    id: str
    poles: tuple
    pos: tuple
    neg: tuple
    neu: Optional[tuple] = None
    off: bool = False

    def __post_init__(self):
        object.__setattr__(self, "id", str(self.id))
        poles = tuple(q(b) for b in self.poles)
        if not poles:
            raise ValidationError("a multipolar element needs at least one pole")
        if any(not 0 < b <= 1 for b in poles):
            raise ValidationError(f"pole degrees must lie in (0, 1], got {poles}")
        if any(a >= b for a, b in zip(poles, poles[1:])):
            raise ValidationError(f"pole degrees must be strictly increasing, got {poles}")
        object.__setattr__(self, "poles", poles)
        pos = tuple(_triple(x) for x in self.pos)
        neg = tuple(_triple(x) for x in self.neg)
        if len(pos) != len(poles) or len(neg) != len(poles):
            raise ValidationError(f"{len(poles)} poles but {len(pos)} positive and {len(neg)} negative triples")
        object.__setattr__(self, "pos", pos)
        object.__setattr__(self, "neg", neg)
        if self.neu is not None:
            object.__setattr__(self, "neu", _triple(self.neu))
            _check_pole(self.id, "0", "0", self.neu, self.off)
        for j, (p, n) in enumerate(zip(pos, neg), 1):
            _check_pole(self.id, "+", f"+{j}", p, self.off)
            _check_pole(self.id, "-", f"-{j}", n, self.off)

    def records(self):
        for j, p in enumerate(self.pos, 1):
            yield from _records(self.id, f"+{j}", p)
        if self.neu is not None:
            yield from _records(self.id, "0", self.neu)
        for j, n in enumerate(self.neg, 1):
            yield from _records(self.id, f"-{j}", n)


def full_antagonist(e, frame: Optional[ThresholdFrame] = None):
    """Pointwise negation of every component; the image under full antagonism."""
    trip = tuple(-sv(v) for v in _triple(e))
    if frame is not None:
        for c, v in zip("tif", trip):
            frame.check_value(c, v)
    return trip


def antagonist_projection(e, a: RationalLike, omega_f: RationalLike) -> tuple[Fraction, Fraction, Fraction]:
    """Membership in a rival offset at antagonism degree ``a``.

    The F line depends on T and I only: F- = -omega_f + a (T+ + I+).
    """
    a = q(a)
    if not 0 <= a <= 1:
        raise ValidationError(f"degree of antagonism must lie in [0, 1], got {a}")
    vals = []
    for v in e:
        v = sv(v)
        if not v.is_crisp:
            raise ValidationError(f"projection is defined on crisp values only, got {v}")
        vals.append(v.crisp)
    if len(vals) != 3:
        raise ValidationError("expected a (t, i, f) triple")
    t, i, _ = vals
    return (-a * t, -a * i, -q(omega_f) + a * (t + i))


def not_affected(omega_f: RationalLike) -> tuple[Fraction, Fraction, Fraction]:
    """Membership toward a pole the enrollment does not touch."""
    return (Fraction(0), Fraction(0), q(omega_f))


def tripolar_from_enrollment(
    positive,
    antagonism: Mapping[str, RationalLike],
    omega_f: RationalLike,
    neutral_rule: Optional[Callable[[tuple], tuple]] = None,
    id: str = "x",
    off: bool = True,
):
    """Assemble a polar element from a home-pole triple and rival degrees.

    One rival gives a TripolarElement; several give a MultipolarElement whose
    poles are the rival degrees in ascending order, each negative pole being
    the projection at that degree and each positive pole the home triple.
    """
    pos = tuple(q(sv(v).crisp) for v in positive)
    neutral = neutral_rule(pos) if neutral_rule is not None else not_affected(omega_f)
    if not antagonism:
        raise ValidationError("need at least one rival pole")
    if len(antagonism) == 1:
        (a,) = antagonism.values()
        neg = antagonist_projection(pos, a, omega_f)
        return TripolarElement(id, pos, neutral, neg, off=off)
    ordered = sorted((q(a), name) for name, a in antagonism.items())
    poles = tuple(a for a, _ in ordered)
    negs = tuple(antagonist_projection(pos, a, omega_f) for a in poles)
    return MultipolarElement(id, poles, tuple(pos for _ in poles), negs, neutral, off=off)


def classify_bipolar(e: BipolarElement) -> Classification:
    return scan(e.records())


def classify_tripolar(e: TripolarElement) -> Classification:
    """Over iff some subcomponent exceeds 1, under iff some is below -1."""
    return scan(e.records())


def classify_multipolar(e: MultipolarElement) -> Classification:
    return scan(e.records())

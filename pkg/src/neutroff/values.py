"""Exact rational scalars and subset-valued neutrosophic components.

A component value is a finite union of intervals with rational endpoints and
per-endpoint openness.  Crisp degrees, hesitant sets, intervals and unions of
intervals are all the same type, which keeps every predicate point-set based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Union

RationalLike = Union[int, str, float, Fraction]


class ValidationError(ValueError):
    """Raised when an input violates a structural invariant."""


def q(x: RationalLike) -> Fraction:
    """Coerce ``x`` to an exact :class:`~fractions.Fraction`.

    Strings are parsed as decimal or ``p/q`` literals.  Floats are read through
    their shortest repr, so ``q(0.1) == Fraction(1, 10)``; pass strings when the
    decimal literal matters.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise ValidationError(f"boolean is not a degree: {x!r}")
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValidationError(f"non-finite value: {x!r}")
        return Fraction(repr(x))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError as exc:
            raise ValidationError(f"not a rational literal: {x!r}") from exc
    raise ValidationError(f"cannot interpret {x!r} as a rational number")


@dataclass(frozen=True, slots=True)
class Piece:
    """One interval ``lo..hi``; a crisp point is ``lo == hi`` with both ends closed."""

    lo: Fraction
    hi: Fraction
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", q(self.lo))
        object.__setattr__(self, "hi", q(self.hi))
        if self.lo > self.hi:
            raise ValidationError(f"reversed interval: {self.lo} > {self.hi}")
        if self.lo == self.hi and (self.lo_open or self.hi_open):
            raise ValidationError(f"degenerate interval at {self.lo} must be closed")

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: Fraction) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and self.lo_open:
            return False
        if x == self.hi and self.hi_open:
            return False
        return True

    def reflect(self, center2: Fraction) -> "Piece":
        """Image under ``x -> center2 - x``."""
        return Piece(center2 - self.hi, center2 - self.lo, self.hi_open, self.lo_open)

    def __str__(self) -> str:
        if self.is_point:
            return _fmt(self.lo)
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{_fmt(self.lo)}, {_fmt(self.hi)}{right}"


def _touches(a: Piece, b: Piece) -> bool:
    # a sorted before b; True when a ∪ b is a single interval
    if b.lo < a.hi:
        return True
    if b.lo == a.hi:
        return not (a.hi_open and b.lo_open)
    return False


def _merge(a: Piece, b: Piece) -> Piece:
    if a.lo < b.lo:
        lo, lo_open = a.lo, a.lo_open
    elif b.lo < a.lo:
        lo, lo_open = b.lo, b.lo_open
    else:
        lo, lo_open = a.lo, a.lo_open and b.lo_open
    if a.hi > b.hi:
        hi, hi_open = a.hi, a.hi_open
    elif b.hi > a.hi:
        hi, hi_open = b.hi, b.hi_open
    else:
        hi, hi_open = a.hi, a.hi_open and b.hi_open
    return Piece(lo, hi, lo_open, hi_open)


def canonicalize(pieces: Iterable[Piece]) -> tuple[Piece, ...]:
    ordered = sorted(pieces, key=lambda p: (p.lo, not p.lo_open, p.hi))
    out: list[Piece] = []
    for p in ordered:
        if out and _touches(out[-1], p):
            out[-1] = _merge(out[-1], p)
        else:
            out.append(p)
    return tuple(out)


@dataclass(frozen=True, slots=True)
class SubsetValue:
    """A finite union of rational intervals, always held in canonical form."""

    pieces: tuple[Piece, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pieces", canonicalize(self.pieces))

    # constructors -----------------------------------------------------
    @classmethod
    def point(cls, x: RationalLike) -> "SubsetValue":
        x = q(x)
        return cls((Piece(x, x),))

    @classmethod
    def points(cls, *xs: RationalLike) -> "SubsetValue":
        return cls(tuple(Piece(q(x), q(x)) for x in xs))

    @classmethod
    def interval(cls, lo, hi, lo_open: bool = False, hi_open: bool = False) -> "SubsetValue":
        return cls((Piece(q(lo), q(hi), lo_open, hi_open),))

    @classmethod
    def closed(cls, lo, hi) -> "SubsetValue":
        return cls.interval(lo, hi)

    @classmethod
    def open(cls, lo, hi) -> "SubsetValue":
        return cls.interval(lo, hi, True, True)

    @classmethod
    def union(cls, *values: "SubsetValue") -> "SubsetValue":
        return cls(tuple(p for v in values for p in v.pieces))

    # queries ----------------------------------------------------------
    def __iter__(self) -> Iterator[Piece]:
        return iter(self.pieces)

    def __bool__(self) -> bool:
        return bool(self.pieces)

    @property
    def is_empty(self) -> bool:
        return not self.pieces

    @property
    def is_crisp(self) -> bool:
        return len(self.pieces) == 1 and self.pieces[0].is_point

    @property
    def inf(self) -> Fraction:
        self._require_nonempty()
        return self.pieces[0].lo

    @property
    def sup(self) -> Fraction:
        self._require_nonempty()
        return self.pieces[-1].hi

    @property
    def crisp(self) -> Fraction:
        if not self.is_crisp:
            raise ValidationError(f"{self} is not a crisp value")
        return self.pieces[0].lo

    def contains(self, x: RationalLike) -> bool:
        x = q(x)
        return any(p.contains(x) for p in self.pieces)

    def within(self, lo: Fraction, hi: Fraction) -> bool:
        return all(lo <= p.lo and p.hi <= hi for p in self.pieces)

    def has_point_above(self, c: Fraction) -> bool:
        # sup > c implies points strictly above c whether or not sup is attained
        return bool(self.pieces) and self.sup > c

    def has_point_below(self, c: Fraction) -> bool:
        return bool(self.pieces) and self.inf < c

    def hull(self) -> Piece:
        self._require_nonempty()
        first, last = self.pieces[0], self.pieces[-1]
        return Piece(first.lo, last.hi, first.lo_open, last.hi_open)

    # transforms -------------------------------------------------------
    def reflect(self, center2: RationalLike) -> "SubsetValue":
        """Pointwise ``x -> center2 - x``; openness flags swap sides."""
        c = q(center2)
        return SubsetValue(tuple(p.reflect(c) for p in self.pieces))

    def __neg__(self) -> "SubsetValue":
        return self.reflect(0)

    def map_affine(self, scale: RationalLike, shift: RationalLike = 0) -> "SubsetValue":
        a, b = q(scale), q(shift)
        if a == 0:
            return SubsetValue.point(b) if self.pieces else SubsetValue()
        out = []
        for p in self.pieces:
            lo, hi = a * p.lo + b, a * p.hi + b
            if a > 0:
                out.append(Piece(lo, hi, p.lo_open, p.hi_open))
            else:
                out.append(Piece(hi, lo, p.hi_open, p.lo_open))
        return SubsetValue(tuple(out))

    def _require_nonempty(self):
        if not self.pieces:
            raise ValidationError("empty component value")

    def __str__(self) -> str:
        if not self.pieces:
            return "{}"
        if len(self.pieces) == 1:
            return str(self.pieces[0])
        if all(p.is_point for p in self.pieces):
            return "{" + ", ".join(_fmt(p.lo) for p in self.pieces) + "}"
        return " ∪ ".join(str(p) for p in self.pieces)


ValueLike = Union[SubsetValue, RationalLike, tuple, list, set, frozenset]


def sv(v: ValueLike) -> SubsetValue:
    """Build a :class:`SubsetValue` from shorthand.

    ``1.2`` or ``"6/15"`` is a point, ``(lo, hi)`` a closed interval, a set or
    list of scalars a hesitant set, and a list mixing intervals a union.
    """
    if isinstance(v, SubsetValue):
        return v
    if isinstance(v, Piece):
        return SubsetValue((v,))
    if isinstance(v, tuple):
        if len(v) != 2:
            raise ValidationError(f"interval shorthand needs (lo, hi), got {v!r}")
        return SubsetValue.closed(v[0], v[1])
    if isinstance(v, (set, frozenset, list)):
        return SubsetValue.union(*(sv(x) for x in v))
    return SubsetValue.point(v)


def _fmt(x: Fraction) -> str:
    return format_rational(x)


def format_rational(x: Fraction) -> str:
    """Decimal text when the expansion terminates, ``p/q`` otherwise."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    d = x.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{x.numerator}/{x.denominator}"
    digits = max(twos, fives)
    scaled = abs(x.numerator) * (10**digits) // x.denominator
    sign = "-" if x < 0 else ""
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}".rstrip("0").rstrip(".")

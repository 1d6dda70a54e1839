"""Offnorms, offconorms, offcomplements and the collection-level operators."""

from __future__ import annotations

import enum
import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .core import CHANNELS, Element, OffCollection, ThresholdFrame
from .values import Piece, RationalLike, SubsetValue, ValidationError, ValueLike, q, sv

DEFAULT_SEED = 20170601


class NormFamily(str, enum.Enum):
    """``bounded`` uses the conorm min(omega, a + b) exactly as printed; it
    reproduces the worked operator example but is only a lawful conorm when
    psi = 0.  ``bounded_dual`` pairs the same norm with its true dual under
    x -> psi + omega - x, namely min(omega, a + b - psi)."""

    MIN_MAX = "min_max"
    BOUNDED = "bounded"
    BOUNDED_DUAL = "bounded_dual"

    @classmethod
    def parse(cls, x: Union[str, "NormFamily"]) -> "NormFamily":
        if isinstance(x, cls):
            return x
        key = str(x).lower().replace("-", "_")
        if key in ("minmax", "min_max"):
            return cls.MIN_MAX
        if key == "bounded":
            return cls.BOUNDED
        if key == "bounded_dual":
            return cls.BOUNDED_DUAL
        raise ValidationError(f"unknown norm family {x!r}")


class ComplementVariant(str, enum.Enum):
    SWAP_TF = "swap_tf"
    REFLECT_TF = "reflect_tf"
    REFLECT_ALL = "reflect_all"

    @classmethod
    def parse(cls, x) -> "ComplementVariant":
        if isinstance(x, cls):
            return x
        try:
            return cls(str(x).lower().replace("-", "_"))
        except ValueError:
            raise ValidationError(f"unknown complement variant {x!r}") from None


# ---------------------------------------------------------------------------
# exact interval images


def _min_piece(a: Piece, b: Piece) -> Piece:
    if a.lo != b.lo:
        lo, lo_open = (a.lo, a.lo_open) if a.lo < b.lo else (b.lo, b.lo_open)
    else:
        lo, lo_open = a.lo, a.lo_open and b.lo_open
    if a.hi != b.hi:
        hi, hi_open = (a.hi, a.hi_open) if a.hi < b.hi else (b.hi, b.hi_open)
    else:
        hi, hi_open = a.hi, a.hi_open or b.hi_open
    return _piece(lo, hi, lo_open, hi_open)


def _max_piece(a: Piece, b: Piece) -> Piece:
    if a.lo != b.lo:
        lo, lo_open = (a.lo, a.lo_open) if a.lo > b.lo else (b.lo, b.lo_open)
    else:
        lo, lo_open = a.lo, a.lo_open or b.lo_open
    if a.hi != b.hi:
        hi, hi_open = (a.hi, a.hi_open) if a.hi > b.hi else (b.hi, b.hi_open)
    else:
        hi, hi_open = a.hi, a.hi_open and b.hi_open
    return _piece(lo, hi, lo_open, hi_open)


def _sum_piece(a: Piece, b: Piece, shift: Fraction = Fraction(0)) -> Piece:
    return _piece(a.lo + b.lo + shift, a.hi + b.hi + shift, a.lo_open or b.lo_open, a.hi_open or b.hi_open)


def _floor_at(p: Piece, bound: Fraction) -> Piece:
    """Image of ``p`` under ``x -> max(bound, x)``."""
    if p.hi <= bound:
        return Piece(bound, bound)
    if p.lo < bound:
        return Piece(bound, p.hi, False, p.hi_open)
    return p


def _ceil_at(p: Piece, bound: Fraction) -> Piece:
    """Image of ``p`` under ``x -> min(bound, x)``."""
    if p.lo >= bound:
        return Piece(bound, bound)
    if p.hi > bound:
        return Piece(p.lo, bound, p.lo_open, False)
    return p


def _piece(lo, hi, lo_open, hi_open) -> Piece:
    if lo == hi:
        return Piece(lo, hi)
    return Piece(lo, hi, lo_open, hi_open)


def _crisp_or(p: Piece) -> SubsetValue:
    return SubsetValue((p,))


def scalar_norm(fam: "NormFamily", a: Fraction, b: Fraction, psi: Fraction, omega: Fraction) -> Fraction:
    if fam is NormFamily.MIN_MAX:
        return min(a, b)
    return max(psi, a + b - omega)


def scalar_conorm(fam: "NormFamily", a: Fraction, b: Fraction, psi: Fraction, omega: Fraction) -> Fraction:
    if fam is NormFamily.MIN_MAX:
        return max(a, b)
    shift = -psi if fam is NormFamily.BOUNDED_DUAL else 0
    return min(omega, a + b + shift)


def offnorm(fam, a: ValueLike, b: ValueLike, psi: RationalLike, omega: RationalLike) -> SubsetValue:
    """Offnorm of two component values (hulled first when multi-piece)."""
    fam = NormFamily.parse(fam)
    psi, omega = q(psi), q(omega)
    a, b = sv(a), sv(b)
    if a.is_crisp and b.is_crisp:
        return SubsetValue.point(scalar_norm(fam, a.crisp, b.crisp, psi, omega))
    ha, hb = a.hull(), b.hull()
    if fam is NormFamily.MIN_MAX:
        return _crisp_or(_min_piece(ha, hb))
    return _crisp_or(_floor_at(_sum_piece(ha, hb, -omega), psi))


def offconorm(fam, a: ValueLike, b: ValueLike, psi: RationalLike, omega: RationalLike) -> SubsetValue:
    fam = NormFamily.parse(fam)
    psi, omega = q(psi), q(omega)
    a, b = sv(a), sv(b)
    if a.is_crisp and b.is_crisp:
        return SubsetValue.point(scalar_conorm(fam, a.crisp, b.crisp, psi, omega))
    ha, hb = a.hull(), b.hull()
    if fam is NormFamily.MIN_MAX:
        return _crisp_or(_max_piece(ha, hb))
    shift = -psi if fam is NormFamily.BOUNDED_DUAL else Fraction(0)
    return _crisp_or(_ceil_at(_sum_piece(ha, hb, shift), omega))


def component_complement(v: ValueLike, psi: RationalLike, omega: RationalLike) -> SubsetValue:
    """Pointwise ``x -> psi + omega - x``."""
    return sv(v).reflect(q(psi) + q(omega))


# ---------------------------------------------------------------------------
# element and collection operators


def _check_same(e1: Element, e2: Element, frame: ThresholdFrame):
    e1.validate(frame)
    e2.validate(frame)


def off_and(e1: Element, e2: Element, fam, frame: ThresholdFrame) -> Element:
    _check_same(e1, e2, frame)
    return Element(
        e1.id,
        offnorm(fam, e1.t, e2.t, *frame.channel("t")),
        offconorm(fam, e1.i, e2.i, *frame.channel("i")),
        offconorm(fam, e1.f, e2.f, *frame.channel("f")),
    )


def off_or(e1: Element, e2: Element, fam, frame: ThresholdFrame) -> Element:
    _check_same(e1, e2, frame)
    return Element(
        e1.id,
        offconorm(fam, e1.t, e2.t, *frame.channel("t")),
        offnorm(fam, e1.i, e2.i, *frame.channel("i")),
        offnorm(fam, e1.f, e2.f, *frame.channel("f")),
    )


def complement_element(e: Element, frame: ThresholdFrame, variant="swap_tf") -> Element:
    variant = ComplementVariant.parse(variant)
    ct = lambda: component_complement(e.t, *frame.channel("t"))
    ci = lambda: component_complement(e.i, *frame.channel("i"))
    cf = lambda: component_complement(e.f, *frame.channel("f"))
    if variant is ComplementVariant.SWAP_TF:
        if frame.channel("t") != frame.channel("f"):
            raise ValidationError("swap_tf needs identical T and F ranges")
        return Element(e.id, e.f, ci(), e.t)
    if variant is ComplementVariant.REFLECT_TF:
        return Element(e.id, ct(), e.i, cf())
    return Element(e.id, ct(), ci(), cf())


def _check_compatible(A: OffCollection, B: OffCollection):
    if A.frame != B.frame:
        raise ValidationError("collections use different frames")
    if set(A.ids) != set(B.ids):
        missing = sorted(set(A.ids) ^ set(B.ids))
        raise ValidationError(f"collections differ in element ids: {missing}")


def off_union(A: OffCollection, B: OffCollection, fam="min_max") -> OffCollection:
    _check_compatible(A, B)
    return OffCollection.of(A.frame, (off_or(A[k], B[k], fam, A.frame) for k in A.ids))


def off_intersection(A: OffCollection, B: OffCollection, fam="min_max") -> OffCollection:
    _check_compatible(A, B)
    return OffCollection.of(A.frame, (off_and(A[k], B[k], fam, A.frame) for k in A.ids))


def off_complement(A: OffCollection, variant="swap_tf") -> OffCollection:
    return OffCollection.of(A.frame, (complement_element(e, A.frame, variant) for e in A))


# ---------------------------------------------------------------------------
# axiom verification


@dataclass
class AxiomResult:
    name: str
    passed: bool = True
    checked: int = 0
    counterexample: Optional[tuple] = None

    def fail(self, witness: tuple):
        if self.passed:
            self.passed = False
            self.counterexample = witness


@dataclass
class AxiomReport:
    role: str
    psi: Fraction
    omega: Fraction
    results: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def lines(self) -> list[str]:
        out = []
        for r in self.results.values():
            verdict = "pass" if r.passed else "FAIL"
            line = f"{self.role} {r.name}: {verdict} ({r.checked} cases)"
            if r.counterexample is not None:
                line += " counterexample " + ", ".join(str(x) for x in r.counterexample)
            out.append(line)
        return out


def _crisp_map(fam, role: str, psi: Fraction, omega: Fraction) -> Callable[[Fraction, Fraction], Fraction]:
    if callable(fam) and not isinstance(fam, (str, NormFamily)):
        return lambda a, b: q(fam(a, b))
    fam = NormFamily.parse(fam)
    op = scalar_norm if role == "norm" else scalar_conorm
    return lambda a, b: op(fam, a, b, psi, omega)


def sample_grid(psi: Fraction, omega: Fraction, count: int, seed: int = DEFAULT_SEED, denom: int = 100) -> list[Fraction]:
    """Seeded rationals with denominator ``denom`` drawn uniformly from [psi, omega]."""
    rng = random.Random(seed)
    lo = math.ceil(psi * denom)
    hi = math.floor(omega * denom)
    return [Fraction(rng.randint(lo, hi), denom) for _ in range(count)]


def verify_norm_axioms(
    fam,
    frame: Union[ThresholdFrame, tuple] = (Fraction(-6, 5), Fraction(6, 5)),
    sample_count: int = 1000,
    seed: int = DEFAULT_SEED,
    role: str = "norm",
    channel: str = "t",
) -> AxiomReport:
    """Check overbounding, commutativity, monotonicity and associativity.

    ``fam`` is a NormFamily (tag or name) or any binary map on crisp rationals.
    The boundary set {psi, 0, 1, omega} is checked exhaustively on all pairs and
    triples; ``sample_count`` seeded random pairs and triples are checked on top.
    """
    if sample_count < 1:
        raise ValidationError("sample_count must be >= 1")
    if role not in ("norm", "conorm"):
        raise ValidationError(f"role must be 'norm' or 'conorm', got {role!r}")
    if isinstance(frame, ThresholdFrame):
        psi, omega = frame.channel(channel)
    else:
        psi, omega = q(frame[0]), q(frame[1])
        ThresholdFrame.uniform(psi, omega)  # validates the range
    op = _crisp_map(fam, role, psi, omega)
    report = AxiomReport(role, psi, omega)
    bound = AxiomResult("overbounding")
    comm = AxiomResult("commutativity")
    mono = AxiomResult("monotonicity")
    assoc = AxiomResult("associativity")
    closed = AxiomResult("closure")
    for r in (bound, comm, mono, assoc, closed):
        report.results[r.name] = r

    corners = sorted({psi, Fraction(0), Fraction(1), omega})
    rng_vals = sample_grid(psi, omega, 3 * sample_count, seed)
    singles = corners + rng_vals[:sample_count]
    pairs = list(itertools.product(corners, repeat=2)) + list(zip(rng_vals[0::3], rng_vals[1::3]))
    triples = list(itertools.product(corners, repeat=3)) + list(zip(rng_vals[0::3], rng_vals[1::3], rng_vals[2::3]))

    absorb, unit = (psi, omega) if role == "norm" else (omega, psi)
    for a in singles:
        bound.checked += 1
        got_abs, got_unit = op(a, absorb), op(a, unit)
        if got_abs != absorb:
            bound.fail((f"N({a}, {absorb}) = {got_abs}", f"expected {absorb}"))
        if got_unit != a:
            bound.fail((f"N({a}, {unit}) = {got_unit}", f"expected {a}"))
    for a, b in pairs:
        comm.checked += 1
        closed.checked += 1
        ab, ba = op(a, b), op(b, a)
        if ab != ba:
            comm.fail((f"N({a}, {b}) = {ab}", f"N({b}, {a}) = {ba}"))
        if not (psi <= ab <= omega):
            closed.fail((f"N({a}, {b}) = {ab}", f"outside [{psi}, {omega}]"))
    for x, y, z in triples:
        mono.checked += 1
        assoc.checked += 1
        lo, hi = min(x, y), max(x, y)
        if op(lo, z) > op(hi, z):
            mono.fail((f"N({lo}, {z}) = {op(lo, z)}", f"N({hi}, {z}) = {op(hi, z)}"))
        left, right = op(op(x, y), z), op(x, op(y, z))
        if left != right:
            assoc.fail((f"N(N({x}, {y}), {z}) = {left}", f"N({x}, N({y}, {z})) = {right}"))
    return report


def algebraic_product(a: Fraction, b: Fraction) -> Fraction:
    """The classical product t-norm, kept as a candidate that fails on off frames."""
    return a * b


def algebraic_sum(a: Fraction, b: Fraction) -> Fraction:
    return a + b - a * b

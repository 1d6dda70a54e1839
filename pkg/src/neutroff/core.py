"""Threshold frames, elements, and the over/under/off evidence predicates."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .values import (
    Piece,
    RationalLike,
    SubsetValue,
    ValidationError,
    ValueLike,
    format_rational,
    q,
    sv,
)

CHANNELS = ("t", "i", "f")
ZERO, ONE = Fraction(0), Fraction(1)


@dataclass(frozen=True)
class ThresholdFrame:
    """Per-channel underlimit psi and overlimit omega, each range containing [0, 1]."""

    psi_t: Fraction
    omega_t: Fraction
    psi_i: Fraction
    omega_i: Fraction
    psi_f: Fraction
    omega_f: Fraction

    def __post_init__(self):
        for c in CHANNELS:
            psi = q(getattr(self, f"psi_{c}"))
            omega = q(getattr(self, f"omega_{c}"))
            object.__setattr__(self, f"psi_{c}", psi)
            object.__setattr__(self, f"omega_{c}", omega)
            if psi > 0:
                raise ValidationError(f"underlimit for {c.upper()} must be <= 0, got {psi}")
            if omega < 1:
                raise ValidationError(f"overlimit for {c.upper()} must be >= 1, got {omega}")
            if psi >= omega:
                raise ValidationError(f"empty range for {c.upper()}: [{psi}, {omega}]")

    @classmethod
    def uniform(cls, psi: RationalLike, omega: RationalLike) -> "ThresholdFrame":
        return cls(psi, omega, psi, omega, psi, omega)

    @classmethod
    def unit(cls) -> "ThresholdFrame":
        return cls.uniform(0, 1)

    def channel(self, c: str) -> tuple[Fraction, Fraction]:
        c = c.lower()
        if c not in CHANNELS:
            raise ValidationError(f"unknown channel {c!r}")
        return getattr(self, f"psi_{c}"), getattr(self, f"omega_{c}")

    @property
    def psi(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.psi_t, self.psi_i, self.psi_f)

    @property
    def omega(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.omega_t, self.omega_i, self.omega_f)

    def check_value(self, c: str, v: SubsetValue, where: str = "") -> None:
        lo, hi = self.channel(c)
        if v.is_empty:
            raise ValidationError(f"{where or c.upper()}: empty component value")
        if not v.within(lo, hi):
            raise ValidationError(
                f"{where or c.upper()}: {v} lies outside [{format_rational(lo)}, {format_rational(hi)}]"
            )


def make_frame(psi_t, omega_t, psi_i, omega_i, psi_f, omega_f) -> ThresholdFrame:
    return ThresholdFrame(psi_t, omega_t, psi_i, omega_i, psi_f, omega_f)


# ---------------------------------------------------------------------------
# classification


class Tag(str, enum.Enum):
    STANDARD = "standard"
    OVER = "over"
    UNDER = "under"
    OFF = "off"

    @classmethod
    def from_flags(cls, over: bool, under: bool) -> "Tag":
        if over and under:
            return cls.OFF
        if over:
            return cls.OVER
        if under:
            return cls.UNDER
        return cls.STANDARD


@dataclass(frozen=True)
class Evidence:
    """A component that crosses a classical bound, with the piece that does it."""

    path: str
    direction: str  # "over" or "under"
    witness: Piece

    def __str__(self) -> str:
        return f"{self.path} {self.direction} via {self.witness}"


@dataclass(frozen=True)
class Classification:
    tag: Tag
    evidence: tuple[Evidence, ...] = ()

    @property
    def over(self) -> bool:
        return any(e.direction == "over" for e in self.evidence)

    @property
    def under(self) -> bool:
        return any(e.direction == "under" for e in self.evidence)

    def __eq__(self, other):
        # comparing against a bare tag is the common case in callers and tests
        if isinstance(other, (Tag, str)):
            return self.tag == Tag(other)
        if isinstance(other, Classification):
            return self.tag == other.tag and self.evidence == other.evidence
        return NotImplemented

    def __hash__(self):
        return hash((self.tag, self.evidence))


@dataclass(frozen=True)
class ComponentClass:
    tag: Tag
    partially_over: bool
    totally_over: bool
    partially_under: bool
    totally_under: bool
    over_piece: Optional[Piece] = None
    under_piece: Optional[Piece] = None


def classify_component(
    v: ValueLike,
    psi: RationalLike | None = None,
    omega: RationalLike | None = None,
    lower: RationalLike = 0,
    upper: RationalLike = 1,
) -> ComponentClass:
    """Evidence flags for one component against the classical bounds ``lower``/``upper``.

    Over-evidence means some point is strictly above ``upper``.  Totally over
    follows the convention that a closed endpoint sitting at ``upper`` does not
    spoil totality: the value lies in [upper, inf) and its sup exceeds upper.
    Totally under is the strict point-set statement that every point is below
    ``lower``; an interval open at ``lower`` qualifies, a closed one does not.
    """
    v = sv(v)
    if v.is_empty:
        raise ValidationError("empty component value")
    lower, upper = q(lower), q(upper)
    if psi is not None and omega is not None and not v.within(q(psi), q(omega)):
        raise ValidationError(f"{v} lies outside [{q(psi)}, {q(omega)}]")
    over = v.sup > upper
    under = v.inf < lower
    last = v.pieces[-1]
    totally_over = over and v.inf >= upper
    totally_under = under and (v.sup < lower or (v.sup == lower and last.hi_open))
    over_piece = next((p for p in reversed(v.pieces) if p.hi > upper), None)
    under_piece = next((p for p in v.pieces if p.lo < lower), None)
    return ComponentClass(
        tag=Tag.from_flags(over, under),
        partially_over=over and not totally_over,
        totally_over=totally_over,
        partially_under=under and not totally_under,
        totally_under=totally_under,
        over_piece=over_piece,
        under_piece=under_piece,
    )


def scan(components: Iterable[tuple[str, SubsetValue, Fraction, Fraction]]) -> Classification:
    """Aggregate evidence over ``(path, value, lower, upper)`` records."""
    evidence: list[Evidence] = []
    for path, v, lower, upper in components:
        cc = classify_component(v, lower=lower, upper=upper)
        if cc.over_piece is not None:
            evidence.append(Evidence(path, "over", cc.over_piece))
        if cc.under_piece is not None:
            evidence.append(Evidence(path, "under", cc.under_piece))
    over = any(e.direction == "over" for e in evidence)
    under = any(e.direction == "under" for e in evidence)
    return Classification(Tag.from_flags(over, under), tuple(evidence))


# ---------------------------------------------------------------------------
# elements and collections


@dataclass(frozen=True)
class Element:
    id: str
    t: SubsetValue
    i: SubsetValue
    f: SubsetValue

    def __post_init__(self):
        object.__setattr__(self, "id", str(self.id))
        for c in CHANNELS:
            object.__setattr__(self, c, sv(getattr(self, c)))

    @classmethod
    def of(cls, id, t: ValueLike, i: ValueLike, f: ValueLike) -> "Element":
        return cls(id, sv(t), sv(i), sv(f))

    def components(self) -> tuple[SubsetValue, SubsetValue, SubsetValue]:
        return (self.t, self.i, self.f)

    def replace(self, **kw) -> "Element":
        vals = {"t": self.t, "i": self.i, "f": self.f}
        vals.update({k: sv(v) for k, v in kw.items()})
        return Element(self.id, **vals)

    def validate(self, frame: ThresholdFrame) -> "Element":
        for c in CHANNELS:
            frame.check_value(c, getattr(self, c), f"{self.id}.{c.upper()}")
        return self

    def __str__(self) -> str:
        return f"{self.id}⟨{self.t}, {self.i}, {self.f}⟩"


def element_records(e: Element, prefix: str = ""):
    for c in CHANNELS:
        yield (f"{prefix}{e.id}.{c.upper()}", getattr(e, c), ZERO, ONE)


def classify_element(e: Element, frame: Optional[ThresholdFrame] = None) -> Classification:
    if frame is not None:
        e.validate(frame)
    return scan(element_records(e))


@dataclass(frozen=True)
class OffCollection:
    """Ordered id -> Element mapping under one frame.  Equality ignores the name."""

    frame: ThresholdFrame
    elements: Mapping[str, Element]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        elems = self.elements
        if not isinstance(elems, Mapping):
            elems = {e.id: e for e in elems}
        checked = {}
        for key, e in elems.items():
            if key != e.id:
                raise ValidationError(f"key {key!r} does not match element id {e.id!r}")
            if key in checked:
                raise ValidationError(f"duplicate element id {key!r}")
            checked[key] = e.validate(self.frame)
        object.__setattr__(self, "elements", _FrozenDict(checked))

    @classmethod
    def of(cls, frame: ThresholdFrame, elements: Iterable[Element], name: str = "") -> "OffCollection":
        out: dict[str, Element] = {}
        for e in elements:
            if e.id in out:
                raise ValidationError(f"duplicate element id {e.id!r}")
            out[e.id] = e
        return cls(frame, out, name)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements.values())

    def __getitem__(self, key: str) -> Element:
        return self.elements[key]

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(self.elements)


class _FrozenDict(dict):
    """Insertion-ordered dict that refuses mutation and hashes by content."""

    def _blocked(self, *a, **k):
        raise TypeError("collection elements are immutable")

    __setitem__ = __delitem__ = clear = pop = popitem = setdefault = update = _blocked  # type: ignore

    def __hash__(self):
        return hash(frozenset(self.items()))


def classify_collection(c: OffCollection) -> Classification:
    if len(c) == 0:
        raise ValidationError("cannot classify an empty collection")
    return scan(r for e in c for r in element_records(e))


def normalize_attribute(v: RationalLike, tau_lo: RationalLike, tau_hi: RationalLike) -> Fraction:
    """Affine map sending tau_lo to 0 and tau_hi to 1; results may leave [0, 1]."""
    v, lo, hi = q(v), q(tau_lo), q(tau_hi)
    if lo >= hi:
        raise ValidationError(f"degenerate threshold pair ({lo}, {hi})")
    return (v - lo) / (hi - lo)


# ---------------------------------------------------------------------------
# refined elements

REFINED_FORMS = ("neutrosophic", "fuzzy", "intuitionistic")


@dataclass(frozen=True)
class RefinedElement:
    id: str
    ts: tuple[SubsetValue, ...]
    is_: tuple[SubsetValue, ...] = ()
    fs: tuple[SubsetValue, ...] = ()
    form: str = "neutrosophic"

    def __post_init__(self):
        object.__setattr__(self, "id", str(self.id))
        for name in ("ts", "is_", "fs"):
            object.__setattr__(self, name, tuple(sv(x) for x in getattr(self, name)))
        p, r, s = self.arity
        if self.form == "neutrosophic":
            if min(p, r, s) < 1 or p + r + s < 4:
                raise ValidationError(f"{self.id}: refined neutrosophic needs p, r, s >= 1 and p+r+s >= 4, got ({p}, {r}, {s})")
        elif self.form == "fuzzy":
            if r or s or p < 2:
                raise ValidationError(f"{self.id}: refined fuzzy needs p >= 2 and no I/F parts, got ({p}, {r}, {s})")
        elif self.form == "intuitionistic":
            if r or p < 1 or s < 1 or p + s < 3:
                raise ValidationError(f"{self.id}: refined intuitionistic needs r = 0, p, s >= 1, p+s >= 3, got ({p}, {r}, {s})")
            parts = self.ts + self.fs
            if all(v.within(ZERO, ONE) for v in parts):
                total = sum((v.sup for v in parts), Fraction(0))
                if total > 1:
                    raise ValidationError(f"{self.id}: sum of sups {total} exceeds 1")
        else:
            raise ValidationError(f"unknown refined form {self.form!r}")

    @property
    def arity(self) -> tuple[int, int, int]:
        return (len(self.ts), len(self.is_), len(self.fs))

    def records(self):
        for letter, vals in (("T", self.ts), ("I", self.is_), ("F", self.fs)):
            for j, v in enumerate(vals, 1):
                yield (f"{self.id}.{letter}{j}", v, ZERO, ONE)

    def validate(self, frame: ThresholdFrame) -> "RefinedElement":
        for c, vals in zip(CHANNELS, (self.ts, self.is_, self.fs)):
            for j, v in enumerate(vals, 1):
                frame.check_value(c, v, f"{self.id}.{c.upper()}{j}")
        return self


def classify_refined(e: RefinedElement, frame: Optional[ThresholdFrame] = None) -> Classification:
    if frame is not None:
        e.validate(frame)
    return scan(e.records())


def classify_refined_collection(
    elems: Sequence[RefinedElement], frame: Optional[ThresholdFrame] = None
) -> Classification:
    if not elems:
        raise ValidationError("cannot classify an empty collection")
    for e in elems:
        if frame is not None:
            e.validate(frame)
    return scan(r for e in elems for r in e.records())


# ---------------------------------------------------------------------------
# label scales


@dataclass(frozen=True)
class LabelScale:
    """Labels L0..Ln mapped to k/n, with virtual labels below L0 and above Ln."""

    labels: tuple[str, ...]
    below: int = 0
    above: int = 0

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.labels) < 2:
            raise ValidationError("a label scale needs at least two labels")
        if self.below < 0 or self.above < 0:
            raise ValidationError("extension counts must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.labels) - 1

    def value(self, k: int) -> Fraction:
        if not (-self.below <= k <= self.n + self.above):
            raise ValidationError(f"label index {k} outside [{-self.below}, {self.n + self.above}]")
        return Fraction(k, self.n)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValidationError(f"unknown label {label!r}") from None

    def frame(self) -> ThresholdFrame:
        return ThresholdFrame.uniform(Fraction(-self.below, self.n), 1 + Fraction(self.above, self.n))


def classify_label_element(t: Iterable[int], i: Iterable[int], f: Iterable[int], scale: LabelScale, id: str = "x") -> Classification:
    def conv(ks):
        ks = list(ks)
        if not ks:
            raise ValidationError("empty label set")
        return SubsetValue.points(*(scale.value(k) for k in ks))

    e = Element(id, conv(t), conv(i), conv(f))
    return classify_element(e, scale.frame())


# ---------------------------------------------------------------------------
# complex elements


@dataclass(frozen=True)
class ComplexElement:
    id: str
    t_amp: SubsetValue
    i_amp: SubsetValue
    f_amp: SubsetValue
    t_phase: SubsetValue = SubsetValue.point(0)
    i_phase: SubsetValue = SubsetValue.point(0)
    f_phase: SubsetValue = SubsetValue.point(0)

    def __post_init__(self):
        object.__setattr__(self, "id", str(self.id))
        for name in ("t_amp", "i_amp", "f_amp", "t_phase", "i_phase", "f_phase"):
            object.__setattr__(self, name, sv(getattr(self, name)))

    def amplitudes(self) -> Element:
        return Element(self.id, self.t_amp, self.i_amp, self.f_amp)

    def validate(self, frame: ThresholdFrame) -> "ComplexElement":
        self.amplitudes().validate(frame)
        return self

    def records(self, include_phases: bool = False):
        yield from (
            (f"{self.id}.{c.upper()}1", v, ZERO, ONE)
            for c, v in zip(CHANNELS, (self.t_amp, self.i_amp, self.f_amp))
        )
        if include_phases:
            yield from (
                (f"{self.id}.{c.upper()}2", v, ZERO, ONE)
                for c, v in zip(CHANNELS, (self.t_phase, self.i_phase, self.f_phase))
            )


def classify_complex(
    e: ComplexElement, frame: Optional[ThresholdFrame] = None, include_phases: bool = False
) -> Classification:
    """Evidence scan over amplitudes; phases join the scan only on request.

    Phases are angles, and the worked complex examples classify sets by their
    amplitudes even where a phase interval sits above 1.
    """
    if frame is not None:
        e.validate(frame)
    return scan(e.records(include_phases))


def classify_complex_collection(
    elems: Sequence[ComplexElement], frame: Optional[ThresholdFrame] = None, include_phases: bool = False
) -> Classification:
    if not elems:
        raise ValidationError("cannot classify an empty collection")
    for e in elems:
        if frame is not None:
            e.validate(frame)
    return scan(r for e in elems for r in e.records(include_phases))


# ---------------------------------------------------------------------------
# offquantifiers


def _has_off_component(x) -> bool:
    if isinstance(x, Element):
        comps = x.components()
    elif isinstance(x, SubsetValue):
        comps = (x,)
    else:
        comps = tuple(sv(c) for c in x)
    return any(v.sup > 1 or v.inf < 0 for v in comps)


def off_exists(
    c: OffCollection,
    pred: Callable[[Element], bool],
    degree: Optional[Callable[[Element], object]] = None,
) -> tuple[bool, list[str]]:
    """Witnesses satisfying ``pred`` whose components (or attached degree) leave [0, 1]."""
    witnesses = []
    for e in c:
        if not pred(e):
            continue
        if _has_off_component(e) or (degree is not None and _has_off_component(degree(e))):
            witnesses.append(e.id)
    return (bool(witnesses), witnesses)


def off_forall(c: OffCollection, pred: Callable[[Element], bool]) -> tuple[bool, list[str]]:
    violators = [e.id for e in c if not pred(e)]
    return (not violators, violators)

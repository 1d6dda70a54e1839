"""Off-probability classification and off-statistics aggregation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .core import (
    Classification,
    Element,
    OffCollection,
    ThresholdFrame,
    ZERO,
    ONE,
    classify_collection,
    normalize_attribute,
    scan,
)
from .values import RationalLike, SubsetValue, ValidationError, q, sv


@dataclass(frozen=True)
class OffProbabilityAssessment:
    """Chance that an event occurs, indeterminate chance, chance it does not."""

    event: str
    ch_occurs: SubsetValue
    ch_indet: SubsetValue
    ch_not: SubsetValue

    def __post_init__(self):
        object.__setattr__(self, "event", str(self.event))
        for name in ("ch_occurs", "ch_indet", "ch_not"):
            object.__setattr__(self, name, sv(getattr(self, name)))

    def as_element(self) -> Element:
        return Element(self.event, self.ch_occurs, self.ch_indet, self.ch_not)


@dataclass(frozen=True)
class RefinedOffProbability:
    event: str
    occurs: tuple
    indet: tuple
    anti: tuple

    def __post_init__(self):
        object.__setattr__(self, "event", str(self.event))
        for name in ("occurs", "indet", "anti"):
            object.__setattr__(self, name, tuple(sv(v) for v in getattr(self, name)))
        p, r, s = len(self.occurs), len(self.indet), len(self.anti)
        if p + r + s < 4:
            raise ValidationError(f"{self.event}: a refined probability needs p + r + s >= 4, got {p + r + s}")

    def records(self):
        for label, vals in (("ch", self.occurs), ("neut", self.indet), ("anti", self.anti)):
            for j, v in enumerate(vals, 1):
                yield (f"{self.event}.{label}{j}", v, ZERO, ONE)


def classify_probability(space: Sequence[OffProbabilityAssessment], frame: ThresholdFrame) -> Classification:
    if not space:
        raise ValidationError("empty probability space")
    return classify_collection(OffCollection.of(frame, (a.as_element() for a in space)))


def classify_refined_probability(
    space: Sequence[RefinedOffProbability], frame: Optional[ThresholdFrame] = None
) -> Classification:
    if not space:
        raise ValidationError("empty probability space")
    if frame is not None:
        for a in space:
            for c, vals in zip("tif", (a.occurs, a.indet, a.anti)):
                for j, v in enumerate(vals, 1):
                    frame.check_value(c, v, f"{a.event}.{c}{j}")
    return scan(r for a in space for r in a.records())


def off_mean(sample: Iterable) -> tuple[Fraction, Fraction, Fraction]:
    """Channel-wise mean of crisp triples (or crisp Elements)."""
    rows = []
    for x in sample:
        if isinstance(x, Element):
            x = x.components()
        vals = tuple(sv(v).crisp if not isinstance(v, (int, Fraction)) else q(v) for v in x)
        if len(vals) != 3:
            raise ValidationError("expected (t, i, f) triples")
        rows.append(vals)
    if not rows:
        raise ValidationError("mean of an empty sample")
    n = len(rows)
    return tuple(sum((r[k] for r in rows), Fraction(0)) / n for k in range(3))  # type: ignore[return-value]


@dataclass(frozen=True)
class EventRule:
    """Points and counts credited per unit of an event."""

    event: str
    points_t: Fraction = Fraction(0)
    count_i: Fraction = Fraction(0)
    count_f: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("points_t", "count_i", "count_f"):
            object.__setattr__(self, name, q(getattr(self, name)))


# built devices earn a point, wrecked ones cost two, pending ones are
# indeterminate and missed ones count against membership
DEFAULT_RULES = (
    EventRule("built", 1, 0, 0),
    EventRule("wrecked", -2, 0, 0),
    EventRule("pending", 0, 1, 0),
    EventRule("missed", 0, 0, 1),
)


@dataclass
class PipelineResult:
    memberships: dict
    collection: OffCollection
    classification: Classification
    mean: tuple


def contribution_pipeline(
    events: Mapping[str, Sequence[tuple]],
    rules: Sequence[EventRule] = DEFAULT_RULES,
    norm: RationalLike = 20,
    tau_lo: RationalLike = 0,
    frame: Optional[ThresholdFrame] = None,
) -> PipelineResult:
    """Turn per-individual event logs into (t, i, f) memberships.

    Raw totals are normalized with thresholds (tau_lo, norm), so t is the
    signed point total over the norm, i the pending count over the norm and f
    the missed count over the norm.
    """
    if not events:
        raise ValidationError("empty sample")
    table = {r.event: r for r in rules}
    members: dict[str, tuple] = {}
    for ind, log in events.items():
        pts = pend = miss = Fraction(0)
        for ev, qty in log:
            if ev not in table:
                raise ValidationError(f"{ind}: no rule for event {ev!r}")
            r, qty = table[ev], q(qty)
            pts += r.points_t * qty
            pend += r.count_i * qty
            miss += r.count_f * qty
        members[str(ind)] = tuple(normalize_attribute(v, tau_lo, norm) for v in (pts, pend, miss))
    if frame is None:
        frame = _envelope(members.values())
    coll = OffCollection.of(frame, (Element(k, *v) for k, v in members.items()), name="sample")
    return PipelineResult(members, coll, classify_collection(coll), off_mean(members.values()))


def _envelope(rows) -> ThresholdFrame:
    """Smallest frame holding every value, used when the caller gives none."""
    rows = list(rows)
    psi = [min([Fraction(0)] + [r[k] for r in rows]) for k in range(3)]
    omega = [max([Fraction(1)] + [r[k] for r in rows]) for k in range(3)]
    return ThresholdFrame(psi[0], omega[0], psi[1], omega[1], psi[2], omega[2])

"""Graphs, matrices, labeled modular structures, closure and off-topology checks."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .algebra import ComplementVariant, NormFamily, off_complement, off_intersection, off_union
from .core import (
    Classification,
    Element,
    OffCollection,
    RefinedElement,
    ThresholdFrame,
    element_records,
    scan,
)
from .polarity import BipolarElement, MultipolarElement, TripolarElement
from .values import RationalLike, SubsetValue, ValidationError, format_rational, q

POLAR_TYPES = (BipolarElement, TripolarElement, MultipolarElement)


def records(obj, label: Optional[str] = None):
    """Evidence records for any supported element, optionally renamed to ``label``.

    Plain and refined elements trip at 0 and 1, polar ones at -1 and 1.
    """
    if isinstance(obj, Element):
        recs = element_records(obj)
    elif isinstance(obj, (RefinedElement,) + POLAR_TYPES):
        recs = obj.records()
    else:
        raise ValidationError(f"cannot classify object of type {type(obj).__name__}")
    if label is None:
        yield from recs
        return
    cut = len(obj.id)
    for path, v, lo, hi in recs:
        yield (label + path[cut:], v, lo, hi)


# ---------------------------------------------------------------------------
# graphs and matrices


@dataclass(frozen=True)
class NeutroGraph:
    vertices: Mapping[str, object]
    edges: Mapping[tuple, object] = field(default_factory=dict)

    def __post_init__(self):
        verts = dict(self.vertices)
        edges = {}
        for key, e in dict(self.edges).items():
            u, v = (str(k) for k in key)
            for end in (u, v):
                if end not in verts:
                    raise ValidationError(f"edge ({u}, {v}) names missing vertex {end!r}")
            edges[(u, v)] = e
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)

    def records(self):
        for vid, e in self.vertices.items():
            yield from records(e, str(vid))
        for (u, v), e in self.edges.items():
            yield from records(e, f"{u}-{v}")


def classify_graph(g: NeutroGraph) -> Classification:
    return scan(g.records())


@dataclass(frozen=True)
class MatrixCell:
    """Underlying entry value plus its neutrosophic label."""

    value: object
    label: object


@dataclass(frozen=True)
class NeutroMatrix:
    cells: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.cells)
        if not rows or not rows[0]:
            raise ValidationError("a matrix needs at least one cell")
        width = len(rows[0])
        for j, r in enumerate(rows):
            if len(r) != width:
                raise ValidationError(f"row {j} has {len(r)} cells, expected {width}")
            for k, c in enumerate(r):
                if not isinstance(c, MatrixCell):
                    raise ValidationError(f"cell [{j},{k}] is not labeled")
        object.__setattr__(self, "cells", rows)

    @classmethod
    def of(cls, rows: Iterable[Iterable[tuple]]) -> "NeutroMatrix":
        """Rows of ``(value, label)`` pairs."""
        return cls(tuple(tuple(MatrixCell(v, lab) for v, lab in r) for r in rows))

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0])

    def records(self):
        for j, row in enumerate(self.cells):
            for k, c in enumerate(row):
                yield from records(c.label, f"[{j},{k}]{c.value}")


def classify_matrix(m: NeutroMatrix) -> Classification:
    return scan(m.records())


# ---------------------------------------------------------------------------
# labeled modular structures


def _label(t) -> tuple[Fraction, Fraction, Fraction]:
    t = tuple(q(x) for x in t)
    if len(t) != 3:
        raise ValidationError(f"a label is a crisp (t, i, f) triple, got {t}")
    return t  # type: ignore[return-value]


@dataclass(frozen=True)
class LabeledResidue:
    residue: int
    labels: frozenset

    def __post_init__(self):
        labels = frozenset(_label(x) for x in self.labels)
        if not labels:
            raise ValidationError(f"residue {self.residue} has no label")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def of(cls, residue: int, *labels) -> "LabeledResidue":
        return cls(residue, frozenset(labels))

    def merged(self) -> tuple[SubsetValue, SubsetValue, SubsetValue]:
        """Per-channel hesitant view, e.g. (-0.1, {0.1, 0.2}, 0.7)."""
        return tuple(SubsetValue.points(*{lab[k] for lab in self.labels}) for k in range(3))  # type: ignore

    def __str__(self) -> str:
        return f"{self.residue}({', '.join(str(v) for v in self.merged())})"


_OPS = {"add_mod": lambda a, b: a + b, "mul_mod": lambda a, b: a * b}
_COMBINERS = {"min": min, "max": max}


@dataclass(frozen=True)
class LabeledLaw:
    carrier_op: str
    combiner: tuple = ("max", "min", "min")

    def __post_init__(self):
        op = {"add": "add_mod", "mul": "mul_mod"}.get(self.carrier_op, self.carrier_op)
        if op not in _OPS:
            raise ValidationError(f"unknown carrier operation {self.carrier_op!r}")
        comb = tuple(self.combiner)
        if len(comb) != 3 or any(c not in _COMBINERS for c in comb):
            raise ValidationError(f"combiner needs min or max for each of t, i, f, got {comb}")
        object.__setattr__(self, "carrier_op", op)
        object.__setattr__(self, "combiner", comb)

    def apply(self, r1: int, l1: tuple, r2: int, l2: tuple, m: int) -> tuple[int, tuple]:
        r = _OPS[self.carrier_op](r1, r2) % m
        lab = tuple(_COMBINERS[c](a, b) for c, a, b in zip(self.combiner, l1, l2))
        return r, lab


def generate_labeled_structure(
    generators: Iterable[LabeledResidue], law: LabeledLaw, modulus: int
) -> dict[int, LabeledResidue]:
    """Close the generators under the law; residues reached twice keep every label."""
    if modulus < 1:
        raise ValidationError(f"modulus must be >= 1, got {modulus}")
    found: set[tuple[int, tuple]] = set()
    for g in generators:
        r = int(g.residue)
        if not 0 <= r < modulus:
            raise ValidationError(f"residue {r} outside [0, {modulus})")
        found.update((r, lab) for lab in g.labels)
    if not found:
        raise ValidationError("no generators")
    # labels only ever take existing channel values, so the fixpoint is finite
    frontier = set(found)
    while frontier:
        new = set()
        for (r1, l1) in frontier:
            for (r2, l2) in list(found):
                for a, b in (((r1, l1), (r2, l2)), ((r2, l2), (r1, l1))):
                    x = law.apply(a[0], a[1], b[0], b[1], modulus)
                    if x not in found:
                        new.add(x)
            found |= new
        frontier = new
    out: dict[int, set] = {}
    for r, lab in found:
        out.setdefault(r, set()).add(lab)
    return {r: LabeledResidue(r, frozenset(out[r])) for r in sorted(out)}


# ---------------------------------------------------------------------------
# closure of a family of collections


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    checked: int = 0
    witness: Optional[str] = None

    def fail(self, witness: str):
        if self.passed:
            self.passed = False
            self.witness = witness


@dataclass
class StructureReport:
    title: str
    results: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> CheckResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            line = f"{self.title} {r.name}: {'pass' if r.passed else 'FAIL'} ({r.checked} checks)"
            if r.witness:
                line += f"; witness: {r.witness}"
            out.append(line)
        return out


def _show(c: OffCollection) -> str:
    body = ", ".join(str(e) for e in c)
    return f"{c.name or 'collection'}{{{body}}}"


def _family(family: Iterable[OffCollection]) -> list[OffCollection]:
    fam = list(family)
    if not fam:
        raise ValidationError("empty family")
    frame, ids = fam[0].frame, set(fam[0].ids)
    for c in fam[1:]:
        if c.frame != frame:
            raise ValidationError("family members use different frames")
        if set(c.ids) != ids:
            raise ValidationError("family members differ in element ids")
    return fam


def check_closure(family: Iterable[OffCollection], fam="min_max", variant="swap_tf") -> StructureReport:
    """Union, intersection and complement must land back in the family."""
    members = _family(family)
    fam, variant = NormFamily.parse(fam), ComplementVariant.parse(variant)
    pool = set(members)
    union, inter, comp = CheckResult("union"), CheckResult("intersection"), CheckResult("complement")
    for a, b in itertools.product(members, repeat=2):
        for res, op in ((union, off_union), (inter, off_intersection)):
            res.checked += 1
            out = op(a, b, fam)
            if out not in pool:
                res.fail(f"{_show(a)} {res.name} {_show(b)} = {_show(out)} not in family")
    for a in members:
        comp.checked += 1
        out = off_complement(a, variant)
        if out not in pool:
            comp.fail(f"complement of {_show(a)} = {_show(out)} not in family")
    return StructureReport("closure", [union, inter, comp])


# ---------------------------------------------------------------------------
# off-topologies

TOPOLOGY_KINDS = ("over", "under", "off")


def topology_constants(frame: ThresholdFrame, kind: str) -> tuple[tuple, tuple]:
    """The two constant triples every kind of topology must contain."""
    p, o = frame.psi, frame.omega
    if kind == "over":
        return (Fraction(0), o[1], o[2]), (o[0], Fraction(0), Fraction(0))
    if kind == "under":
        return (p[0], Fraction(1), Fraction(1)), (Fraction(1), p[1], p[2])
    if kind == "off":
        return (p[0], o[1], o[2]), (o[0], p[1], p[2])
    raise ValidationError(f"unknown topology kind {kind!r}; expected one of {TOPOLOGY_KINDS}")


def constant_collection(frame: ThresholdFrame, ids: Sequence[str], triple, name: str = "") -> OffCollection:
    return OffCollection.of(frame, (Element(k, *triple) for k in ids), name=name)


def check_topology(family: Iterable[OffCollection], frame: ThresholdFrame, kind: str) -> StructureReport:
    """Axiom a: both constants present.  b: pairwise intersections stay.  c: unions stay.

    Unions are checked pairwise; on a finite family, closure under pairwise
    union gives closure under every finite union by induction.
    """
    members = _family(family)
    if members[0].frame != frame:
        raise ValidationError("family frame differs from the given frame")
    needs_over = kind in ("over", "off")
    needs_under = kind in ("under", "off")
    if kind in TOPOLOGY_KINDS:
        if needs_over and all(o == 1 for o in frame.omega):
            raise ValidationError(f"an {kind}topology needs some overlimit above 1")
        if needs_under and all(p == 0 for p in frame.psi):
            raise ValidationError(f"an {kind}topology needs some underlimit below 0")
    lo, hi = topology_constants(frame, kind)
    ids = members[0].ids
    pool = set(members)
    a = CheckResult("a")
    for tag, trip in (("lo", lo), ("hi", hi)):
        a.checked += 1
        c = constant_collection(frame, ids, trip)
        if c not in pool:
            shown = ", ".join(format_rational(x) for x in trip)
            a.fail(f"constant ({shown}) missing from family")
    b, c_ = CheckResult("b"), CheckResult("c")
    for x, y in itertools.combinations_with_replacement(members, 2):
        b.checked += 1
        out = off_intersection(x, y, "min_max")
        if out not in pool:
            b.fail(f"{_show(x)} ∩ {_show(y)} = {_show(out)} not in family")
        c_.checked += 1
        out = off_union(x, y, "min_max")
        if out not in pool:
            c_.fail(f"{_show(x)} ∪ {_show(y)} = {_show(out)} not in family")
    return StructureReport(f"{kind}topology", [a, b, c_])

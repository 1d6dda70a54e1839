"""JSON and CSV dataset formats, exact on read and round-trip safe on write."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping, Optional

from .core import (
    ComplexElement,
    Element,
    LabelScale,
    OffCollection,
    RefinedElement,
    ThresholdFrame,
)
from .offnumbers import TrapezoidalOffnumber, TriangularOffnumber
from .polarity import BipolarElement, MultipolarElement, TripolarElement
from .stats import EventRule, OffProbabilityAssessment
from .symbolic import SymbolicOrder
from .structures import LabeledLaw, LabeledResidue, NeutroGraph, NeutroMatrix
from .values import Piece, SubsetValue, ValidationError, q

# ---------------------------------------------------------------------------
# scalars and values


def number(x: Any, where: str = "") -> Fraction:
    """JSON numbers arrive as int or Fraction; strings like "6/15" are accepted too."""
    if isinstance(x, str):
        try:
            return Fraction(x.strip().replace("−", "-"))
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"{where}: not a number: {x!r}") from None
    try:
        return q(x)
    except (ValidationError, TypeError) as exc:
        raise ValidationError(f"{where}: {exc}") from None


def _is_num(x) -> bool:
    return isinstance(x, (int, Fraction, float, str)) and not isinstance(x, bool)


def parse_value(v: Any, where: str = "") -> SubsetValue:
    """A number, ``[lo, hi]``, ``{"lo", "hi", "lo_open", "hi_open"}``, ``{"points": [...]}``
    or an array of those (a union)."""
    if _is_num(v):
        return SubsetValue.point(number(v, where))
    if isinstance(v, Mapping):
        if "points" in v:
            pts = v["points"]
            if not isinstance(pts, list) or not pts:
                raise ValidationError(f"{where}: 'points' must be a nonempty array")
            return SubsetValue.points(*(number(x, where) for x in pts))
        try:
            lo, hi = number(v["lo"], where), number(v["hi"], where)
        except KeyError as exc:
            raise ValidationError(f"{where}: interval object missing {exc.args[0]!r}") from None
        return SubsetValue.interval(lo, hi, bool(v.get("lo_open", False)), bool(v.get("hi_open", False)))
    if isinstance(v, list):
        if len(v) == 2 and all(_is_num(x) for x in v):
            return SubsetValue.closed(number(v[0], where), number(v[1], where))
        if not v:
            raise ValidationError(f"{where}: empty value")
        return SubsetValue.union(*(parse_value(x, f"{where}[{k}]") for k, x in enumerate(v)))
    raise ValidationError(f"{where}: cannot read value {v!r}")


def _num_out(x: Fraction):
    # plain JSON number when it reads back to the same rational, else "p/q"
    if x.denominator == 1:
        return int(x)
    f = float(x)
    if Fraction(repr(f)) == x:
        return f
    return f"{x.numerator}/{x.denominator}"


def _piece_out(p: Piece):
    if p.is_point:
        return _num_out(p.lo)
    if not p.lo_open and not p.hi_open:
        return [_num_out(p.lo), _num_out(p.hi)]
    return {"lo": _num_out(p.lo), "hi": _num_out(p.hi), "lo_open": p.lo_open, "hi_open": p.hi_open}


def value_to_json(v: SubsetValue):
    if len(v.pieces) == 1:
        return _piece_out(v.pieces[0])
    if all(p.is_point for p in v.pieces):
        return {"points": [_num_out(p.lo) for p in v.pieces]}
    return [_piece_out(p) if not p.is_point else {"points": [_num_out(p.lo)]} for p in v.pieces]


# ---------------------------------------------------------------------------
# frames and elements


def _get(obj: Mapping, key: str, where: str):
    if not isinstance(obj, Mapping):
        raise ValidationError(f"{where}: expected an object")
    if key not in obj:
        raise ValidationError(f"{where}: missing key {key!r}")
    return obj[key]


def parse_frame(obj: Optional[Mapping], where: str = "frame") -> ThresholdFrame:
    if obj is None:
        return ThresholdFrame.unit()
    psi, omega = _get(obj, "psi", where), _get(obj, "omega", where)
    if _is_num(psi):
        psi = [psi] * 3
    if _is_num(omega):
        omega = [omega] * 3
    if len(psi) != 3 or len(omega) != 3:
        raise ValidationError(f"{where}: psi and omega need three entries each")
    ps = [number(x, f"{where}.psi") for x in psi]
    om = [number(x, f"{where}.omega") for x in omega]
    return ThresholdFrame(ps[0], om[0], ps[1], om[1], ps[2], om[2])


def frame_to_json(f: ThresholdFrame) -> dict:
    return {"psi": [_num_out(x) for x in f.psi], "omega": [_num_out(x) for x in f.omega]}


def _triple(obj, where: str):
    return tuple(parse_value(_get(obj, c, where), f"{where}.{c}") for c in "TIF")


def parse_element(id: str, obj: Mapping, where: str = "") -> Element:
    where = where or id
    return Element(id, *_triple(obj, where))


def element_to_json(e: Element) -> dict:
    return {c.upper(): value_to_json(getattr(e, c)) for c in "tif"}


def parse_polar(id: str, obj: Mapping, where: str = ""):
    """Plain element, or a polar one when "pos"/"neg" are present."""
    where = where or id
    if not isinstance(obj, Mapping):
        raise ValidationError(f"{where}: expected an object")
    if "pos" not in obj and "neg" not in obj:
        return parse_element(id, obj, where)
    off = bool(obj.get("off", True))
    if "poles" in obj:
        poles = [number(x, f"{where}.poles") for x in obj["poles"]]
        pos = [_triple(p, f"{where}.pos[{k}]") for k, p in enumerate(_get(obj, "pos", where))]
        neg = [_triple(p, f"{where}.neg[{k}]") for k, p in enumerate(_get(obj, "neg", where))]
        neu = _triple(obj["neu"], f"{where}.neu") if "neu" in obj else None
        return MultipolarElement(id, poles, pos, neg, neu, off=off)
    pos = _triple(_get(obj, "pos", where), f"{where}.pos")
    neg = _triple(_get(obj, "neg", where), f"{where}.neg")
    if "neu" in obj:
        return TripolarElement(id, pos, _triple(obj["neu"], f"{where}.neu"), neg, off=off)
    return BipolarElement(id, pos, neg, off=off)


def parse_refined(id: str, obj: Mapping, where: str = "") -> RefinedElement:
    """Arrays under "T", "I", "F" list the subcomponents; "form" picks the family."""
    where = where or id

    def parts(c):
        raw = obj.get(c, [])
        if not isinstance(raw, list):
            raise ValidationError(f"{where}.{c}: refined components are arrays of values")
        return tuple(parse_value(x, f"{where}.{c}{k + 1}") for k, x in enumerate(raw))

    return RefinedElement(id, parts("T"), parts("I"), parts("F"), obj.get("form", "neutrosophic"))


def _elements(doc: Mapping, key: str = "elements") -> Mapping:
    elems = _get(doc, key, "document")
    if not isinstance(elems, Mapping):
        raise ValidationError(f"{key}: expected an object keyed by element id")
    return elems


def parse_collection(doc: Mapping, name: str = "") -> OffCollection:
    frame = parse_frame(doc.get("frame"))
    elems = (parse_element(str(k), v, f"elements.{k}") for k, v in _elements(doc).items())
    return OffCollection.of(frame, elems, name=doc.get("name", name))


def collection_to_json(c: OffCollection) -> dict:
    out: dict = {"frame": frame_to_json(c.frame)}
    if c.name:
        out["name"] = c.name
    out["elements"] = {e.id: element_to_json(e) for e in c}
    return out


def parse_graph(doc: Mapping) -> NeutroGraph:
    verts = {str(k): parse_polar(str(k), v, f"vertices.{k}") for k, v in _get(doc, "vertices", "graph").items()}
    edges = {}
    for k, e in enumerate(doc.get("edges", [])):
        where = f"edges[{k}]"
        u, v = str(_get(e, "from", where)), str(_get(e, "to", where))
        edges[(u, v)] = parse_polar(f"{u}-{v}", e, where)
    return NeutroGraph(verts, edges)


def parse_matrix(doc: Mapping) -> NeutroMatrix:
    rows = []
    for j, row in enumerate(_get(doc, "rows", "matrix")):
        cells = []
        for k, cell in enumerate(row):
            where = f"rows[{j}][{k}]"
            val = _get(cell, "value", where)
            cells.append((val, parse_polar(str(val), cell, where)))
        rows.append(cells)
    return NeutroMatrix.of(rows)


def parse_complex(id: str, obj: Mapping, where: str = "") -> ComplexElement:
    where = where or id
    amp = _triple(_get(obj, "amplitude", where), f"{where}.amplitude")
    ph = _triple(obj["phase"], f"{where}.phase") if "phase" in obj else (0, 0, 0)
    return ComplexElement(id, *amp, *ph)


def parse_label_scale(doc: Mapping) -> LabelScale:
    scale = _get(doc, "scale", "document")
    return LabelScale(tuple(_get(scale, "labels", "scale")), int(scale.get("below", 0)), int(scale.get("above", 0)))


def label_indices(scale: LabelScale, raw, where: str) -> list[int]:
    items = raw if isinstance(raw, list) else [raw]
    out = []
    for x in items:
        if isinstance(x, int) and not isinstance(x, bool):
            out.append(x)
        elif isinstance(x, str):
            out.append(scale.index(x))
        else:
            raise ValidationError(f"{where}: labels are indices or names, got {x!r}")
    return out


def parse_offnumber(doc: Mapping):
    frame = parse_frame(doc.get("frame"))
    shape = doc.get("shape", "triangular")
    a = [number(x, "a") for x in _get(doc, "a", "offnumber")]
    w, u, y = (number(x, "peak") for x in _get(doc, "peak", "offnumber"))
    if shape == "triangular":
        if len(a) != 3:
            raise ValidationError("a triangular offnumber needs three abscissae")
        return TriangularOffnumber(*a, w, u, y, frame)
    if shape == "trapezoidal":
        if len(a) != 4:
            raise ValidationError("a trapezoidal offnumber needs four abscissae")
        return TrapezoidalOffnumber(*a, w, u, y, frame)
    raise ValidationError(f"unknown offnumber shape {shape!r}")


def parse_probability(doc: Mapping) -> tuple[ThresholdFrame, list[OffProbabilityAssessment]]:
    frame = parse_frame(doc.get("frame"))
    space = []
    for k, v in _elements(doc, "events").items():
        t, i, f = _triple(v, f"events.{k}")
        space.append(OffProbabilityAssessment(str(k), t, i, f))
    return frame, space


def parse_rules(doc) -> list[EventRule]:
    if not isinstance(doc, list):
        raise ValidationError("rules file must hold a list of rule objects")
    out = []
    for k, r in enumerate(doc):
        where = f"rules[{k}]"
        out.append(EventRule(
            str(_get(r, "event", where)),
            number(r.get("points_t", 0), where),
            number(r.get("count_i", 0), where),
            number(r.get("count_f", 0), where),
        ))
    return out


def parse_structure(doc: Mapping):
    m = int(_get(doc, "modulus", "structure"))
    law_doc = _get(doc, "law", "structure")
    law = LabeledLaw(_get(law_doc, "op", "law"), tuple(law_doc.get("combiner", ("max", "min", "min"))))
    gens = []
    for k, g in enumerate(_get(doc, "generators", "structure")):
        where = f"generators[{k}]"
        lab = tuple(number(x, where) for x in _get(g, "label", where))
        gens.append(LabeledResidue.of(int(_get(g, "residue", where)), lab))
    return gens, law, m


def parse_family(doc: Mapping) -> tuple[ThresholdFrame, list[OffCollection]]:
    frame = parse_frame(doc.get("frame"))
    fam = []
    for k, member in enumerate(_get(doc, "family", "document")):
        elems = (parse_element(str(i), v, f"family[{k}].{i}") for i, v in _elements(member).items())
        fam.append(OffCollection.of(frame, elems, name=member.get("name", f"#{k}")))
    return frame, fam


# ---------------------------------------------------------------------------
# files


def load_json(path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh, parse_float=Fraction)
    except FileNotFoundError:
        raise ValidationError(f"{path}: no such file") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def dump_json(obj, path=None) -> str:
    text = json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def load_collection(path) -> OffCollection:
    return parse_collection(load_json(path), name=Path(path).stem)


def save_collection(c: OffCollection, path=None) -> str:
    return dump_json(collection_to_json(c), path)


def _read_csv(path) -> tuple[list[str], list[dict]]:
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            rows = list(reader)
            return [h.strip().lower() for h in (reader.fieldnames or [])], rows
    except FileNotFoundError:
        raise ValidationError(f"{path}: no such file") from None


def load_sample_csv(path) -> dict[str, tuple[Fraction, Fraction, Fraction]]:
    """Rows ``id,t,i,f`` with decimal or p/q literals."""
    header, rows = _read_csv(path)
    if header[:4] != ["id", "t", "i", "f"]:
        raise ValidationError(f"{path}: header must be id,t,i,f")
    out = {}
    for n, row in enumerate(rows, 2):
        rid = row["id"].strip()
        if rid in out:
            raise ValidationError(f"{path}:{n}: duplicate id {rid!r}")
        out[rid] = tuple(number(row[c], f"{path}:{n}:{c}") for c in "tif")
    return out


def load_events_csv(path) -> dict[str, list[tuple[str, Fraction]]]:
    """Rows ``id,event,qty``; an id may repeat across rows."""
    header, rows = _read_csv(path)
    if header[:3] != ["id", "event", "qty"]:
        raise ValidationError(f"{path}: header must be id,event,qty")
    out: dict[str, list] = {}
    for n, row in enumerate(rows, 2):
        out.setdefault(row["id"].strip(), []).append((row["event"].strip(), number(row["qty"], f"{path}:{n}:qty")))
    return out


def csv_kind(path) -> str:
    header, _ = _read_csv(path)
    if header[:4] == ["id", "t", "i", "f"]:
        return "sample"
    if header[:3] == ["id", "event", "qty"]:
        return "events"
    raise ValidationError(f"{path}: unrecognised header {','.join(header)}")


@dataclass
class Workspace:
    """Frame plus named collections and auxiliary objects loaded from one file."""

    frame: ThresholdFrame
    collections: dict = field(default_factory=dict)
    scales: dict = field(default_factory=dict)
    orders: dict = field(default_factory=dict)
    numbers: dict = field(default_factory=dict)

    @classmethod
    def from_json(cls, doc: Mapping, name: str = "main") -> "Workspace":
        frame = parse_frame(doc.get("frame"))
        ws = cls(frame)
        if "elements" in doc:
            ws.collections[name] = parse_collection(doc, name)
        for cname, cdoc in dict(doc.get("collections", {})).items():
            sub = {"frame": doc.get("frame"), "elements": cdoc}
            ws.collections[cname] = parse_collection(sub, cname)
        for sname, sdoc in dict(doc.get("scales", {})).items():
            ws.scales[sname] = parse_label_scale({"scale": sdoc})
        for oname, chain in dict(doc.get("orders", {})).items():
            ws.orders[oname] = SymbolicOrder(tuple(chain))
        for nname, ndoc in dict(doc.get("numbers", {})).items():
            ws.numbers[nname] = parse_offnumber({"frame": doc.get("frame"), **ndoc})
        return ws

    @classmethod
    def load(cls, path) -> "Workspace":
        return cls.from_json(load_json(path), Path(path).stem)

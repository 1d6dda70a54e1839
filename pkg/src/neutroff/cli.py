"""Command line front door: ``neutroff {classify,combine,eval,stats,check}``.

Exit codes: 0 success, 1 validation error, 2 an axiom or consistency check failed.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import io
from .algebra import (
    DEFAULT_SEED,
    algebraic_product,
    algebraic_sum,
    off_complement,
    off_intersection,
    off_union,
    verify_norm_axioms,
)
from .core import (
    Classification,
    Element,
    OffCollection,
    Tag,
    ThresholdFrame,
    classify_collection,
    classify_complex_collection,
    classify_element,
    classify_label_element,
    classify_refined,
    classify_refined_collection,
    scan,
)
from .dependence import DependenceSpec, max_component_sum
from .polarity import antagonist_projection
from .stats import DEFAULT_RULES, classify_probability, contribution_pipeline, off_mean
from .structures import (
    check_closure,
    check_topology,
    classify_graph,
    classify_matrix,
    generate_labeled_structure,
    records,
)
from .symbolic import eval_formula
from .values import ValidationError, format_rational

EXIT_OK, EXIT_INVALID, EXIT_FINDING = 0, 1, 2

_NOUNS = {
    "set": "set", "refined": "set", "complex": "set", "tripolar": "set", "label": "set",
    "graph": "graph", "matrix": "matrix", "probability": "probability",
}
_COLORS = {Tag.STANDARD: "32", Tag.OVER: "33", Tag.UNDER: "36", Tag.OFF: "35"}


def _use_color(stream) -> bool:
    return "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


def _paint(text: str, tag: Tag, color: bool) -> str:
    return f"\x1b[{_COLORS[tag]}m{text}\x1b[0m" if color else text


def describe(tag: Tag, noun: str) -> str:
    """``offset``, ``overgraph``, ... and plain ``standard`` for classical data."""
    return "standard" if tag is Tag.STANDARD else f"{tag.value}{noun}"


def _witness(c: Classification) -> str:
    if not c.evidence:
        return ""
    return "; witness: " + "; ".join(str(e) for e in c.evidence)


def _line(c: Classification, noun: str, color: bool) -> str:
    return _paint(describe(c.tag, noun), c.tag, color) + _witness(c)


def _fmt_triple(t) -> str:
    return "(" + ", ".join(format_rational(x) for x in t) + ")"


# ---------------------------------------------------------------------------
# classify


def _classify(doc, kind: str, include_phases: bool):
    """Return (overall classification, [(object id, classification)])."""
    if kind == "set":
        c = io.parse_collection(doc)
        return classify_collection(c), [(e.id, classify_element(e)) for e in c]
    if kind == "graph":
        g = io.parse_graph(doc)
        parts = [(k, scan(records(v, k))) for k, v in g.vertices.items()]
        parts += [(f"{u}-{v}", scan(records(e, f"{u}-{v}"))) for (u, v), e in g.edges.items()]
        return classify_graph(g), parts
    if kind == "matrix":
        m = io.parse_matrix(doc)
        parts = []
        for j, row in enumerate(m.cells):
            for k, cell in enumerate(row):
                label = f"[{j},{k}]{cell.value}"
                parts.append((label, scan(records(cell.label, label))))
        return classify_matrix(m), parts
    if kind == "probability":
        frame, space = io.parse_probability(doc)
        return classify_probability(space, frame), [(a.event, classify_element(a.as_element(), frame)) for a in space]
    if kind == "refined":
        frame = io.parse_frame(doc.get("frame")) if "frame" in doc else None
        elems = [io.parse_refined(str(k), v, f"elements.{k}") for k, v in io._elements(doc).items()]
        return classify_refined_collection(elems, frame), [(e.id, classify_refined(e, frame)) for e in elems]
    if kind == "complex":
        frame = io.parse_frame(doc.get("frame"))
        elems = [io.parse_complex(str(k), v, f"elements.{k}") for k, v in io._elements(doc).items()]
        parts = [(e.id, classify_complex_collection([e], frame, include_phases)) for e in elems]
        return classify_complex_collection(elems, frame, include_phases), parts
    if kind == "tripolar":
        elems = [io.parse_polar(str(k), v, f"elements.{k}") for k, v in io._elements(doc).items()]
        if not elems:
            raise ValidationError("no elements")
        return scan(r for e in elems for r in records(e)), [(e.id, scan(records(e))) for e in elems]
    if kind == "label":
        scale = io.parse_label_scale(doc)
        parts = []
        for k, v in io._elements(doc).items():
            idx = [io.label_indices(scale, io._get(v, c, f"elements.{k}"), f"elements.{k}.{c}") for c in "TIF"]
            parts.append((str(k), classify_label_element(*idx, scale, id=str(k))))
        if not parts:
            raise ValidationError("no elements")
        evidence = tuple(e for _, c in parts for e in c.evidence)
        overall = Classification(Tag.from_flags(any(c.over for _, c in parts), any(c.under for _, c in parts)), evidence)
        return overall, parts
    raise ValidationError(f"unknown kind {kind!r}")


def cmd_classify(args, out) -> int:
    doc = io.load_json(args.input)
    overall, parts = _classify(doc, args.kind, args.include_phases)
    noun = _NOUNS[args.kind]
    if args.json:
        io_doc = {
            "kind": args.kind,
            "class": describe(overall.tag, noun),
            "tag": overall.tag.value,
            "evidence": [str(e) for e in overall.evidence],
            "objects": {k: {"tag": c.tag.value, "evidence": [str(e) for e in c.evidence]} for k, c in parts},
        }
        out.write(io.dump_json(io_doc))
        return EXIT_OK
    color = _use_color(out)
    print(_line(overall, noun, color), file=out)
    elem_noun = "element" if noun == "set" else ("cell" if noun == "matrix" else "")
    for k, c in parts:
        label = describe(c.tag, elem_noun) if elem_noun else c.tag.value
        print(f"  {k}: {_paint(label, c.tag, color)}{_witness(c)}", file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# combine


def cmd_combine(args, out) -> int:
    a = io.load_collection(args.a)
    if args.op == "complement":
        if args.b is not None:
            raise ValidationError("complement takes a single collection")
        res = off_complement(a, args.complement_variant)
    else:
        if args.b is None:
            raise ValidationError(f"{args.op} needs two collections")
        b = io.load_collection(args.b)
        op = off_union if args.op == "union" else off_intersection
        res = op(a, b, args.family)
    text = io.save_collection(res, args.output)
    if args.output is None:
        out.write(text)
    else:
        print(f"wrote {args.output}", file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# eval


def _parse_triple(text: str):
    parts = [p for p in text.replace(";", ",").split(",") if p.strip()]
    if len(parts) != 3:
        raise ValidationError(f"expected t,i,f but got {text!r}")
    return tuple(io.number(p, "element") for p in parts)


def _parse_depend(text: str) -> DependenceSpec:
    if Path(text).is_file():
        doc = io.load_json(text)
        pairs = doc.get("pairwise", doc)
    else:
        pairs = {}
        for item in text.split(","):
            if not item.strip():
                continue
            if "=" not in item:
                raise ValidationError(f"dependence entries look like tf=0.3, got {item!r}")
            k, v = item.split("=", 1)
            pairs[k.strip()] = v.strip()
    out = {}
    for k, v in pairs.items():
        key = k.lower().rstrip("_")
        if len(key) != 2 or any(c not in "tif" for c in key):
            raise ValidationError(f"pair name must be two of t, i, f, got {k!r}")
        out[frozenset(key)] = io.number(v, k)
    return DependenceSpec(out)


def cmd_eval(args, out) -> int:
    did = False
    if args.number is not None:
        if args.at is None:
            raise ValidationError("--number needs --at")
        n = io.parse_offnumber(io.load_json(args.number))
        x = io.number(args.at, "--at")
        print(f"N({format_rational(x)}) = {_fmt_triple(n(x))}", file=out)
        did = True
    if args.sym is not None:
        print(eval_formula(args.sym, args.order).value, file=out)
        did = True
    if args.project is not None:
        if args.element is None or args.omega_f is None:
            raise ValidationError("--project needs --element and --omega-f")
        a = io.number(args.project, "--project")
        res = antagonist_projection(_parse_triple(args.element), a, io.number(args.omega_f, "--omega-f"))
        print(_fmt_triple(res), file=out)
        did = True
    if args.depend is not None:
        spec = _parse_depend(args.depend)
        print(f"max t+i+f = {format_rational(max_component_sum(spec))}", file=out)
        did = True
    if not did:
        raise ValidationError("nothing to evaluate; give --number/--at, --sym, --project or --depend")
    return EXIT_OK


# ---------------------------------------------------------------------------
# stats


def cmd_stats(args, out) -> int:
    kind = io.csv_kind(args.sample)
    if kind == "events":
        if args.norm is None:
            raise ValidationError("an event log needs --norm")
        rules = io.parse_rules(io.load_json(args.rules)) if args.rules else list(DEFAULT_RULES)
        res = contribution_pipeline(io.load_events_csv(args.sample), rules, io.number(args.norm, "--norm"))
        members, cls, mean = res.memberships, res.classification, res.mean
    else:
        members = io.load_sample_csv(args.sample)
        if not members:
            raise ValidationError(f"{args.sample}: empty sample")
        frame = _sample_frame(members.values())
        coll = OffCollection.of(frame, (Element(k, *v) for k, v in members.items()))
        cls, mean = classify_collection(coll), off_mean(members.values())
    color = _use_color(out)
    for k, v in members.items():
        print(f"{k}: {_fmt_triple(v)}", file=out)
    print(f"mean: {_fmt_triple(mean)}", file=out)
    label = describe(cls.tag, "statistics")
    if cls.tag is Tag.OFF:
        label += " (under- and over-evidence present)"
    print(_paint(label, cls.tag, color) + _witness(cls), file=out)
    return EXIT_OK


def _sample_frame(rows) -> ThresholdFrame:
    rows = list(rows)
    psi = [min([Fraction(0)] + [r[k] for r in rows]) for k in range(3)]
    omega = [max([Fraction(1)] + [r[k] for r in rows]) for k in range(3)]
    return ThresholdFrame(psi[0], omega[0], psi[1], omega[1], psi[2], omega[2])


# ---------------------------------------------------------------------------
# check


def cmd_check(args, out) -> int:
    ok = True
    if args.axioms == "norms":
        psi, omega = io.number(args.psi, "--psi"), io.number(args.omega, "--omega")
        families = [args.family] if args.family else ["min_max", "bounded", "bounded_dual"]
        for fam in families:
            for role in ("norm", "conorm"):
                op = fam
                if fam == "product":
                    op = algebraic_product if role == "norm" else algebraic_sum
                rep = verify_norm_axioms(op, (psi, omega), args.samples, args.seed, role)
                for line in rep.lines():
                    print(f"{fam} {line}", file=out)
                ok &= rep.passed
    elif args.axioms in ("topology", "closure"):
        if not args.inputs:
            raise ValidationError(f"--axioms {args.axioms} needs a family file")
        doc = io.load_json(args.inputs[0])
        frame, fam = io.parse_family(doc)
        if args.axioms == "topology":
            kind = args.kind or doc.get("kind")
            if kind is None:
                raise ValidationError("topology check needs --kind or a 'kind' key")
            rep = check_topology(fam, frame, kind)
        else:
            rep = check_closure(fam, args.family or "min_max", args.complement_variant)
        for line in rep.lines():
            print(line, file=out)
        ok = rep.passed
    elif args.axioms == "structure":
        if not args.inputs:
            raise ValidationError("--axioms structure needs a structure file")
        gens, law, m = io.parse_structure(io.load_json(args.inputs[0]))
        result = generate_labeled_structure(gens, law, m)
        print("{" + ", ".join(str(r) for r in result.values()) + "}", file=out)
        for r in result.values():
            labels = sorted(r.labels)
            if len(labels) > 1:
                shown = " and ".join(_fmt_triple(lab) for lab in labels)
                print(f"  residue {r.residue} hesitates between {shown}", file=out)
    else:
        raise ValidationError(f"unknown check {args.axioms!r}")
    return EXIT_OK if ok else EXIT_FINDING


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # usage errors are validation errors, keeping 2 for check findings
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="neutroff", description="Classify and combine neutrosophic off-data.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify a dataset and print evidence")
    c.add_argument("input")
    c.add_argument("--kind", default="set", choices=sorted(_NOUNS))
    c.add_argument("--include-phases", action="store_true", help="scan complex phases as well as amplitudes")
    c.add_argument("--json", action="store_true", help="machine-readable report")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("combine", help="union, intersection or complement of collections")
    c.add_argument("a")
    c.add_argument("b", nargs="?")
    c.add_argument("--op", required=True, choices=["union", "intersect", "complement"])
    c.add_argument("--family", default="min_max", choices=["min_max", "minmax", "bounded", "bounded_dual"])
    c.add_argument("--complement-variant", default="swap_tf", choices=["swap_tf", "reflect_tf", "reflect_all"])
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_combine)

    c = sub.add_parser("eval", help="offnumbers, symbolic formulas, antagonism, dependence")
    c.add_argument("--number", help="offnumber JSON file")
    c.add_argument("--at", help="abscissa for --number")
    c.add_argument("--sym", help="symbolic formula, e.g. 'IO -> F'")
    c.add_argument("--order", default="default", choices=["default", "alt"])
    c.add_argument("--project", help="degree of antagonism")
    c.add_argument("--element", help="t,i,f triple for --project")
    c.add_argument("--omega-f", help="overlimit of F for --project")
    c.add_argument("--depend", help="pairwise degrees like 'tf=0.3,if=0.6' or a JSON file")
    c.set_defaults(func=cmd_eval)

    c = sub.add_parser("stats", help="off-statistics of a CSV sample or event log")
    c.add_argument("sample")
    c.add_argument("--norm", help="normalizing total for event logs")
    c.add_argument("--rules", help="JSON list of event rules")
    c.set_defaults(func=cmd_stats)

    c = sub.add_parser("check", help="axiom, closure, topology and structure checks")
    c.add_argument("--axioms", required=True, choices=["norms", "topology", "closure", "structure"])
    c.add_argument("inputs", nargs="*")
    c.add_argument("--family", choices=["min_max", "minmax", "bounded", "bounded_dual", "product"])
    c.add_argument("--complement-variant", default="swap_tf", choices=["swap_tf", "reflect_tf", "reflect_all"])
    c.add_argument("--kind", choices=["over", "under", "off"])
    c.add_argument("--psi", default="-1.2")
    c.add_argument("--omega", default="1.2")
    c.add_argument("--samples", type=int, default=1000)
    c.add_argument("--seed", type=int, default=DEFAULT_SEED)
    c.set_defaults(func=cmd_check)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

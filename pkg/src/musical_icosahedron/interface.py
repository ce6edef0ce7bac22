"""
I/O surface: JSON assignment documents, SVG/DOT drawings and the command line.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .assignment import (
    Assignment, AssignmentError, NotHexagonSymmetric, TypeLabel, classify_type, hexagon_partition,
)
from .generalize import reconcile_all, stabilizer_orbit_scales
from .polyhedron import ChordKind, build_graph, chord_kind
from .search import ConstraintSet, derive_reference_types, enumerate_assignments, reference
from .theorems import VerificationReport, run_all
from .tones import (
    CHROMATIC, NAMES, PYTHAGOREAN_CHAIN, WHOLE_TONE, ToneError, format_tones, get_template, parse_tone,
    tone_name,
)

log = logging.getLogger(__name__)

SCHEMA_VERSION = "1"


class DocumentError(ValueError):
    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field = field_name


@dataclass(frozen=True)
class AssignmentDocument:
    vertices: tuple[str, ...]
    type_label: str | None = None
    hexagon: tuple[str, ...] | None = None
    schema_version: str = SCHEMA_VERSION

    @classmethod
    def from_assignment(cls, a: Assignment, label: TypeLabel | str | None = None) -> AssignmentDocument:
        if label is None:
            label = classify_type(a)
        try:
            hexagon = tuple(tone_name(t) for t in sorted(hexagon_partition(a)[0]))
        except NotHexagonSymmetric:
            hexagon = None
        return cls(tuple(tone_name(t) for t in a.tone_at), str(label) if label else None, hexagon)

    def to_assignment(self) -> Assignment:
        return Assignment(tuple(NAMES.index(n) for n in self.vertices))

    def to_dict(self) -> dict:
        return {"schema_version": self.schema_version, "vertices": list(self.vertices),
                "type_label": self.type_label, "hexagon": list(self.hexagon) if self.hexagon else None}


def to_json(doc: AssignmentDocument | Sequence[AssignmentDocument]) -> str:
    if isinstance(doc, AssignmentDocument):
        return json.dumps(doc.to_dict(), indent=2, ensure_ascii=False) + "\n"
    return json.dumps([d.to_dict() for d in doc], indent=2, ensure_ascii=False) + "\n"


def _tone_list(obj, field_name: str, length: int) -> tuple[str, ...]:
    if not isinstance(obj, list):
        raise DocumentError(field_name, "expected a list of tone names")
    if len(obj) != length:
        raise DocumentError(field_name, f"expected {length} entries, got {len(obj)}")
    out = []
    for i, x in enumerate(obj):
        if not isinstance(x, str):
            raise DocumentError(f"{field_name}[{i}]", "expected a tone name")
        try:
            out.append(tone_name(parse_tone(x)))
        except ToneError as e:
            raise DocumentError(f"{field_name}[{i}]", str(e)) from None
    if len(set(out)) != len(out):
        raise DocumentError(field_name, "duplicate tone")
    return tuple(out)


def document_from_dict(d) -> AssignmentDocument:
    if not isinstance(d, dict):
        raise DocumentError("document", "expected a JSON object")
    unknown = set(d) - {"schema_version", "vertices", "type_label", "hexagon"}
    if unknown:
        raise DocumentError(sorted(unknown)[0], "unknown field")
    if d.get("schema_version") != SCHEMA_VERSION:
        raise DocumentError("schema_version", f"expected {SCHEMA_VERSION!r}, got {d.get('schema_version')!r}")
    if "vertices" not in d:
        raise DocumentError("vertices", "missing")
    vertices = _tone_list(d["vertices"], "vertices", 12)
    label = d.get("type_label")
    if label is not None:
        if not isinstance(label, str):
            raise DocumentError("type_label", "expected a string or null")
        try:
            label = str(TypeLabel.parse(label))
        except ValueError as e:
            raise DocumentError("type_label", str(e)) from None
    hexagon = d.get("hexagon")
    if hexagon is not None:
        hexagon = _tone_list(hexagon, "hexagon", 6)
    doc = AssignmentDocument(vertices, label, hexagon)
    a = doc.to_assignment()
    if hexagon is not None:
        try:
            actual = {tone_name(t) for t in hexagon_partition(a)[0]}
        except NotHexagonSymmetric:
            raise DocumentError("hexagon", "assignment has no edge hexagon") from None
        if set(hexagon) != actual:
            raise DocumentError("hexagon", f"does not match the assignment ({', '.join(sorted(actual))})")
    return doc


def from_json(text: str) -> AssignmentDocument | list[AssignmentDocument]:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError("document", f"invalid JSON: {e}") from None
    if isinstance(d, list):
        return [document_from_dict(x) for x in d]
    return document_from_dict(d)


# ---------------------------------------------------------------- rendering

CANVAS = 480
INNER_R = 100
OUTER_R = 200

CHORD_STYLE = {ChordKind.EDGE: "", ChordKind.MIDDLE: "8,5", ChordKind.DIAMETER: "2,4"}


@dataclass(frozen=True)
class Highlight:
    tones: tuple[int, ...]
    cyclic: bool = False
    color: str = "#d62728"
    label: str = ""


@dataclass(frozen=True)
class RenderSpec:
    assignment: Assignment
    highlights: tuple[Highlight, ...] = ()
    title: str = ""
    fmt: str = "svg"


LAYOUT_NOTE = ("projection along the 3-fold axis through two opposite faces; the six equator "
               "vertices (edge hexagon) on the outer circle r=200, the two axis faces (hexagram) "
               "on the inner circle r=100; rotated so C is at the top")


def _axis_face(a: Assignment) -> tuple[int, int, int]:
    g = build_graph()
    try:
        _, hexagram = hexagon_partition(a)
        ring = sorted(a.vertex_of[t] for t in hexagram)
        first = min(ring, key=lambda v: a.tone_at[v])
        return tuple(sorted([first] + [w for w in ring if g.adjacent(first, w)]))
    except NotHexagonSymmetric:
        # any face keeping C off the axis faces
        c = a.vertex_of[0]
        for f in g.faces:
            if c not in f and g.opposite[c] not in f:
                return tuple(sorted(f))
        raise AssertionError("unreachable")


def layout(a: Assignment) -> dict[int, tuple[float, float]]:
    """Vertex -> (x, y) canvas position."""
    g = build_graph()
    X = np.asarray(g.coords, dtype=float)
    face = _axis_face(a)
    axis = X[list(face)].sum(axis=0)
    axis /= np.linalg.norm(axis)
    inner = set(face) | {g.opposite[v] for v in face}
    c = a.vertex_of[0]
    up = X[c] - (X[c] @ axis) * axis
    up /= np.linalg.norm(up)
    right = np.cross(up, axis)
    pos = {}
    for v in range(12):
        ang = math.atan2(float(X[v] @ right), float(X[v] @ up))
        step = round(ang / (math.pi / 3)) % 6
        r = INNER_R if v in inner else OUTER_R
        theta = step * math.pi / 3
        pos[v] = (CANVAS / 2 + r * math.sin(theta), CANVAS / 2 - r * math.cos(theta))
    return pos


def tone_below_c(a: Assignment) -> int | None:
    """Inner-ring tone on the same ray as C, when C is on the outer ring."""
    pos = layout(a)
    c = a.vertex_of[0]
    cx, cy = pos[c]
    if abs(cy - (CANVAS / 2 - OUTER_R)) > 1e-6:
        return None
    for v, (x, y) in pos.items():
        if v != c and abs(x - cx) < 1e-6 and y < CANVAS / 2:
            return a.tone_at[v]
    return None


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _segments(a: Assignment, h: Highlight) -> list[tuple[int, int, ChordKind]]:
    g = build_graph()
    vs = a.vertices(h.tones)
    pairs = list(zip(vs, vs[1:]))
    if h.cyclic and len(vs) > 2:
        pairs.append((vs[-1], vs[0]))
    return [(u, v, chord_kind(g, u, v)) for u, v in pairs]


def render_svg(spec: RenderSpec) -> str:
    a = spec.assignment
    g = build_graph()
    pos = layout(a)
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f"<!-- {LAYOUT_NOTE}; chords: solid = Edge, dashed = Middle, dotted = Diameter -->",
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" '
           f'viewBox="0 0 {CANVAS} {CANVAS}">']
    if spec.title:
        out.append(f'<title>{spec.title}</title>')
    out.append('<g stroke="#bbbbbb" stroke-width="1">')
    for u, v in g.edges:
        (x1, y1), (x2, y2) = pos[u], pos[v]
        out.append(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>')
    out.append("</g>")
    for h in spec.highlights:
        out.append(f'<g stroke="{h.color}" stroke-width="3" fill="none" class="{h.label}">')
        for u, v, kind in _segments(a, h):
            (x1, y1), (x2, y2) = pos[u], pos[v]
            dash = CHORD_STYLE[kind]
            extra = f' stroke-dasharray="{dash}"' if dash else ""
            out.append(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                       f'data-chord="{kind.value}"{extra}/>')
        out.append("</g>")
    out.append('<g font-family="sans-serif" font-size="14" text-anchor="middle">')
    for v in range(12):
        x, y = pos[v]
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="14" fill="white" stroke="black"/>')
        out.append(f'<text x="{_fmt(x)}" y="{_fmt(y + 5)}">{tone_name(a.tone_at[v])}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_dot(spec: RenderSpec) -> str:
    a = spec.assignment
    g = build_graph()
    lines = [f"// {LAYOUT_NOTE}", "graph icosahedron {", "  node [shape=circle];"]
    pos = layout(a)
    for v in range(12):
        x, y = pos[v]
        lines.append(f'  v{v} [label="{tone_name(a.tone_at[v])}", pos="{_fmt(x)},{_fmt(CANVAS - y)}!"];')
    for u, v in g.edges:
        lines.append(f'  v{u} -- v{v} [chord="Edge", color="gray"];')
    for h in spec.highlights:
        for u, v, kind in _segments(a, h):
            style = {"Edge": "solid", "Middle": "dashed", "Diameter": "dotted"}[kind.value]
            lines.append(f'  v{u} -- v{v} [chord="{kind.value}", color="{h.color}", style={style}, penwidth=3];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def render(spec: RenderSpec) -> str:
    if spec.fmt == "svg":
        return render_svg(spec)
    if spec.fmt == "dot":
        return render_dot(spec)
    raise ValueError(f"unknown format {spec.fmt!r}")


# ---------------------------------------------------------------- reports

def format_report(report: VerificationReport) -> str:
    lines = []
    for r in report.results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name}")
    s = report.summary()
    lines.append(f"{s['passed']}/{s['checks']} checks passed")
    return "\n".join(lines) + "\n"


def report_dict(report: VerificationReport | None = None) -> dict:
    report = run_all() if report is None else report
    d = report.to_dict()
    d["appendix"] = [r.to_dict() for r in reconcile_all()]
    d["types"] = [AssignmentDocument.from_assignment(a, lab).to_dict()
                  for lab, a in derive_reference_types().items()]
    return d


# ---------------------------------------------------------------- CLI

class UsageError(ValueError):
    pass


def parse_constraints(text: str) -> ConstraintSet:
    """'chromatic,wholetone:C' -> ConstraintSet; ':open' drops a wrap edge, 'hexsym' adds the symmetry."""
    cycles = []
    sym = False
    for raw in text.split(","):
        tok = raw.strip()
        if not tok:
            continue
        if tok.lower() == "hexsym":
            sym = True
            continue
        parts = tok.split(":")
        open_chain = parts[-1].lower() == "open"
        if open_chain:
            parts = parts[:-1]
        name = parts[0].lower()
        if name in ("chromatic", "pythagorean"):
            if len(parts) != 1:
                raise UsageError(f"bad constraint {tok!r}")
            tmpl = CHROMATIC if name == "chromatic" else PYTHAGOREAN_CHAIN
            cycles.append((tmpl.at(0).tones, not open_chain))
        elif name == "wholetone":
            if len(parts) != 2:
                raise UsageError(f"bad constraint {tok!r}; expected wholetone:<tone>")
            try:
                root = parse_tone(parts[1])
            except ToneError as e:
                raise UsageError(str(e)) from None
            cycles.append((WHOLE_TONE.at(root).tones, not open_chain))
        else:
            raise UsageError(f"unknown constraint {tok!r}")
    if not cycles and not sym:
        raise UsageError("empty constraint list")
    return ConstraintSet(tuple(cycles), symmetry_required=sym)


def _label(s: str) -> TypeLabel:
    try:
        return TypeLabel.parse(s)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _tone(s: str) -> int:
    try:
        return parse_tone(s)
    except ToneError as e:
        raise UsageError(str(e)) from None


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_verify(args) -> int:
    report = run_all()
    sys.stdout.write(format_report(report))
    if not report.passed:
        for r in report.failures:
            sys.stderr.write(f"{r.name}: {json.dumps(r.counterexamples, ensure_ascii=False)}\n")
        return 3
    return 0


def cmd_enumerate(args) -> int:
    c = parse_constraints(args.constraints)
    res = enumerate_assignments(c)
    docs = [AssignmentDocument.from_assignment(rep) for rep in res.representatives]
    sys.stdout.write(to_json(docs))
    log.info("%d assignments in %d classes", res.raw_count, res.class_count)
    return 0


def cmd_types(args) -> int:
    docs = [AssignmentDocument.from_assignment(a, lab) for lab, a in derive_reference_types().items()]
    sys.stdout.write(to_json(docs))
    return 0


def cmd_render(args) -> int:
    a = reference(_label(args.type))
    highlights = []
    colors = ("#d62728", "#2ca02c", "#1f77b4", "#ff7f0e")
    for i, name in enumerate(args.scale or ()):
        try:
            tmpl = get_template(name)
        except KeyError as e:
            raise UsageError(str(e.args[0])) from None
        inst = tmpl.at(_tone(args.root))
        highlights.append(Highlight(inst.tones, inst.cyclic, colors[i % len(colors)], tmpl.name))
    fmt = "dot" if args.output.endswith(".dot") else "svg"
    title = f"type {args.type}" + (f": {', '.join(args.scale)} on {tone_name(_tone(args.root))}" if args.scale else "")
    _write(args.output, render(RenderSpec(a, tuple(highlights), title, fmt)))
    return 0


def cmd_generalize(args) -> int:
    try:
        fam = stabilizer_orbit_scales(args.base, args.gen, args.family)
    except (ValueError, KeyError) as e:
        raise UsageError(str(e)) from None
    print(f"{fam.base} {fam.generation.value} generalization on type {fam.source}")
    for e in fam.entries:
        print(e)
    return 0


def cmd_classify(args) -> int:
    a = reference(_label(args.type))
    tones = [_tone(t) for t in args.tones]
    if len(set(tones)) != 3:
        raise UsageError("need three distinct tones")
    from .assignment import triangle_of

    tri = triangle_of(a, tones)
    print(tri.kind.value if not args.apex else f"{tri.kind.value} apex={tone_name(a.tone_at[tri.apex])}")
    return 0


def cmd_report(args) -> int:
    _write(args.output, json.dumps(report_dict(), indent=2, ensure_ascii=False) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="musical-icosahedron",
                                description="Tone-to-vertex assignments on the icosahedron.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("verify", help="run every structural check").set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="list assignment classes meeting neighbouring constraints")
    e.add_argument("--constraints", required=True,
                   help="comma list of chromatic | pythagorean | wholetone:<tone>, each optionally "
                        "suffixed :open; add 'hexsym' to require the whole-tone symmetry")
    e.set_defaults(func=cmd_enumerate)

    sub.add_parser("types", help="print the twelve reference types").set_defaults(func=cmd_types)

    r = sub.add_parser("render", help="draw a type as SVG or DOT")
    r.add_argument("--type", required=True)
    r.add_argument("--scale", action="append", help="catalog scale to highlight (repeatable)")
    r.add_argument("--root", default="C")
    r.add_argument("-o", "--output", required=True)
    r.set_defaults(func=cmd_render)

    g = sub.add_parser("generalize", help="generalized major/minor scales")
    g.add_argument("--base", choices=["c-major", "c-minor"], required=True)
    g.add_argument("--gen", choices=["first", "second"], required=True)
    g.add_argument("--family", choices=["chromatic", "pythagorean"], default="chromatic")
    g.set_defaults(func=cmd_generalize)

    c = sub.add_parser("classify", help="triangle kind of three tones on a type")
    c.add_argument("--type", required=True)
    c.add_argument("--apex", action="store_true", help="also print the apex tone")
    c.add_argument("tones", nargs=3)
    c.set_defaults(func=cmd_classify)

    rp = sub.add_parser("report", help="write the full JSON report")
    rp.add_argument("-o", "--output", required=True)
    rp.set_defaults(func=cmd_report)
    return p


def cli_main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (UsageError, ToneError, AssignmentError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        return 1


def main() -> None:
    sys.exit(cli_main())


__all__ = [
    "AssignmentDocument", "DocumentError", "Highlight", "RenderSpec", "UsageError", "cli_main",
    "document_from_dict", "format_report", "from_json", "layout", "main", "parse_constraints", "render",
    "render_dot", "render_svg", "report_dict", "to_json", "tone_below_c", "format_tones",
]

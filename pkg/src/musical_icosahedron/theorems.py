"""
Mechanical verification of the structural claims about the reference types.

Every check is a finite, exhaustive statement.  A check receives the
mapping of type labels to assignments (the derived reference types by
default) and re-derives every figure it needs from those assignments, so a
corrupted mapping can be fed in to confirm that the checks bite.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cache
from itertools import combinations
from typing import Callable, Mapping

from .assignment import (
    Assignment, Family, NotHexagonSymmetric, TypeLabel, apply_symmetry, canonical_form, figure_of,
    has_hexagon_symmetry, hexagon_partition, read_figure, satisfies_neighboring, spatial_inversion,
    transpose_assignment, transposition_vertex_map, triangle_of,
)
from .polyhedron import (
    ChordKind, Shape, SymmetryOp, automorphism_group, build_graph, chord_kind, is_golden_rectangle,
)
from .search import (
    ConstraintSet, chromatic_whole_tone, derive_reference_types, enumerate_assignments,
    enumerate_hexagon_symmetric, family_of, prohibition_search,
)
from .tones import (
    CHROMATIC, DORIAN, HEXATONIC_MAJOR, HEXATONIC_MAJOR_TRIAD, HEXATONIC_MINOR, HEXATONIC_MINOR_TRIAD,
    LYDIAN, MAJOR, MAJOR_TRIAD, MESSIAEN_FOUR, MINOR, MINOR_TRIAD, MIXOLYDIAN, PENTATONIC_MAJOR,
    PENTATONIC_MINOR, PHRYGIAN, PYTHAGOREAN_CHAIN, WHOLE_TONE_C, WHOLE_TONE_CS, ScaleTemplate,
    TriadTemplate, format_tones, tone_name, union_of,
)

log = logging.getLogger(__name__)

Types = Mapping[TypeLabel, Assignment]

CHROMATIC_TYPES = tuple(TypeLabel(Family.CHROMATIC, i) for i in range(1, 5))
PYTHAGOREAN_TYPES = tuple(TypeLabel(Family.PYTHAGOREAN, i) for i in range(1, 5))
EXCEPTIONAL_TYPES = tuple(TypeLabel(Family.EXCEPTIONAL, i) for i in range(1, 5))

# The four exceptional "red line" tone sequences with the residue every
# step interval must have modulo 4.
RED_LINES: dict[str, tuple[tuple[int, ...], int]] = {
    "1*": ((0, 9, 2, 11, 4, 1, 6, 3, 8, 5, 10, 7), 1),
    "2*": ((0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 1), 3),
    "3*": ((0, 11, 2, 1, 4, 3, 6, 5, 8, 7, 10, 9), 3),
    "4*": ((0, 5, 2, 7, 4, 9, 6, 11, 8, 1, 10, 3), 1),
}


@dataclass
class CheckResult:
    name: str
    details: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": self.details,
                "counterexamples": self.counterexamples}


@dataclass
class VerificationReport:
    results: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def summary(self) -> dict:
        return {"checks": len(self.results), "passed": sum(r.passed for r in self.results),
                "failed": len(self.failures)}

    def to_dict(self) -> dict:
        return {"summary": self.summary(), "results": [r.to_dict() for r in self.results]}

    def __getitem__(self, name: str) -> CheckResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


def _types(types: Types | None) -> dict[TypeLabel, Assignment]:
    return dict(derive_reference_types() if types is None else types)


def _t(s: str) -> TypeLabel:
    return TypeLabel.parse(s)


def _names(ts) -> str:
    return format_tones(ts, "")


def _perm(op: SymmetryOp) -> list[int]:
    return list(op.perm)


def _triads_of_kind(a: Assignment, tmpl: TriadTemplate, kind: Shape, roots=range(12)) -> list[int]:
    """Roots whose triad does *not* classify as ``kind``."""
    return [x for x in roots if triangle_of(a, tmpl.at(x).tones).kind is not kind]


def _golden_family(name: str, types: Types, table) -> CheckResult:
    res = CheckResult(name)
    counts = {}
    for labels, tmpl, kind in table:
        for lab in labels:
            bad = _triads_of_kind(types[lab], tmpl, kind)
            counts[f"{lab}:{tmpl.name}"] = 12 - len(bad)
            for x in bad:
                tones = tmpl.at(x).tones
                res.counterexamples.append({
                    "type": str(lab), "triad": _names(tones), "expected": kind.value,
                    "got": triangle_of(types[lab], tones).kind.value})
    res.details["matching"] = counts
    return res


def check_golden_theorem(types: Types | None = None) -> CheckResult:
    """Major triads are golden triangles on types 1, 4; minor triads on 2, 3."""
    t = _types(types)
    res = _golden_family("golden_theorem", t, [
        ((_t("1"), _t("4")), MAJOR_TRIAD, Shape.GOLDEN_TRIANGLE),
        ((_t("2"), _t("3")), MINOR_TRIAD, Shape.GOLDEN_TRIANGLE),
    ])
    # C#-major on type 2 is only a control; record what it is
    res.details["control_c#_major_on_2"] = triangle_of(t[_t("2")], MAJOR_TRIAD.at(1).tones).kind.value
    return res


def check_golden_theorem_2(types: Types | None = None) -> CheckResult:
    """Gnomon counterpart on the Pythagorean types, plus the combined duality."""
    t = _types(types)
    res = _golden_family("golden_theorem_2", t, [
        ((_t("1'"), _t("4'")), MINOR_TRIAD, Shape.GOLDEN_GNOMON),
        ((_t("2'"), _t("3'")), MAJOR_TRIAD, Shape.GOLDEN_GNOMON),
        ((_t("1'"), _t("4'")), HEXATONIC_MAJOR_TRIAD, Shape.GOLDEN_GNOMON),
        ((_t("2'"), _t("3'")), HEXATONIC_MINOR_TRIAD, Shape.GOLDEN_GNOMON),
    ])
    first = check_golden_theorem(t)
    res.details["golden_duality"] = first.passed and not res.counterexamples
    if not first.passed:
        res.counterexamples.append({"golden_duality": "chromatic half fails",
                                    "failures": len(first.counterexamples)})
    return res


def _fifth_rooted(n: int, m: int) -> tuple[int, int]:
    """Rotate the triad {0, n, m} so that its base tone has its fifth in it.

    (4, 7), (3, 8) and (5, 9) describe the same chord starting from each of
    its tones; this picks the spelling built on the lower tone of the
    perfect fifth.  Shapes without exactly one fifth are left alone.
    """
    tones = {0, n, m}
    bases = [b for b in tones if (b + 7) % 12 in tones]
    if len(bases) != 1:
        return n, m
    b = bases[0]
    rel = sorted((x - b) % 12 for x in tones if x != b)
    return rel[0], rel[1]


def triad_scan(a: Assignment, kind: Shape, apex_class: frozenset[int]) -> list[tuple[int, int]]:
    """All 0<n<m<12 such that every (X, X+n, X+m) has the given kind with apex tone in apex_class."""
    found = []
    for n, m in combinations(range(1, 12), 2):
        ok = True
        for x in range(12):
            tri = triangle_of(a, (x, x + n, x + m))
            if tri.kind is not kind or a.tone_at[tri.apex] not in apex_class:
                ok = False
                break
        if ok:
            found.append((n, m))
    return found


def normalized_scan(a: Assignment, kind: Shape, apex_class: frozenset[int]) -> tuple[list, list]:
    raw = triad_scan(a, kind, apex_class)
    return raw, sorted({_fifth_rooted(n, m) for n, m in raw})


def check_triad_uniqueness(types: Types | None = None) -> CheckResult:
    t = _types(types)
    res = CheckResult("triad_uniqueness")
    expected = {
        ("1", "hexagon"): [(4, 7)], ("4", "hexagon"): [(4, 7)],
        ("2", "hexagon"): [(3, 7)], ("3", "hexagon"): [(3, 7)],
        ("1", "hexagram"): [(7, 10)], ("4", "hexagram"): [(7, 10)],
        ("2", "hexagram"): [(7, 9)], ("3", "hexagram"): [(7, 9)],
    }
    scans = {}
    for (lab, where), want in expected.items():
        a = t[_t(lab)]
        try:
            hexagon, hexagram = hexagon_partition(a)
        except NotHexagonSymmetric as e:
            res.counterexamples.append({"type": lab, "error": str(e)})
            continue
        raw, norm = normalized_scan(a, Shape.GOLDEN_TRIANGLE, hexagon if where == "hexagon" else hexagram)
        scans[f"{lab}:{where}"] = {"raw": [list(p) for p in raw], "normalized": [list(p) for p in norm]}
        if norm != want:
            res.counterexamples.append({"type": lab, "apex": where, "expected": [list(p) for p in want],
                                        "got": [list(p) for p in norm]})
    gnomons = {}
    for lab in PYTHAGOREAN_TYPES:
        a = t[lab]
        try:
            hexagon, hexagram = hexagon_partition(a)
        except NotHexagonSymmetric as e:
            res.counterexamples.append({"type": str(lab), "error": str(e)})
            continue
        for where, cls in (("hexagon", hexagon), ("hexagram", hexagram)):
            raw, norm = normalized_scan(a, Shape.GOLDEN_GNOMON, cls)
            gnomons[f"{lab}:{where}"] = {"raw": [list(p) for p in raw], "normalized": [list(p) for p in norm]}
            if len(norm) != 1:
                res.counterexamples.append({"type": str(lab), "apex": where, "gnomon_shapes": len(norm)})
    res.details["triangle_scans"] = scans
    res.details["gnomon_scans"] = gnomons
    return res


def check_fundamental_hexatonic(types: Types | None = None) -> CheckResult:
    """Unions of fundamental triads rebuild the hexatonic and pentatonic scales."""
    res = CheckResult("fundamental_hexatonic")
    hmin, hmaj = HEXATONIC_MINOR_TRIAD, HEXATONIC_MAJOR_TRIAD
    for x in range(12):
        cases = [
            ("hexatonic-minor", [hmin.at(x), hmin.at(x + 7), hmin.at(x + 5)], HEXATONIC_MINOR.at(x)),
            ("hexatonic-major", [hmaj.at(x), hmaj.at(x + 7), hmaj.at(x + 5)], HEXATONIC_MAJOR.at(x)),
            ("pentatonic-minor", [hmin.at(x), hmin.at(x + 5)], PENTATONIC_MINOR.at(x)),
            ("pentatonic-major", [hmaj.at(x), hmaj.at(x + 7)], PENTATONIC_MAJOR.at(x)),
        ]
        for name, parts, scale in cases:
            if union_of(parts) != scale.tone_set():
                res.counterexamples.append({"root": tone_name(x), "scale": name,
                                            "union": _names(sorted(union_of(parts)))})
    # pairing the minor triad on X with the one on X+7 misses the pentatonic minor
    alt = union_of([hmin.at(0), hmin.at(7)])
    res.details["alternative_pairing_c"] = _names(sorted(alt))
    res.details["alternative_is_pentatonic_minor"] = alt == PENTATONIC_MINOR.at(0).tone_set()
    if res.details["alternative_is_pentatonic_minor"]:
        res.counterexamples.append({"alternative_pairing": "unexpectedly pentatonic"})
    return res


def check_tritone_and_messiaen(types: Types | None = None) -> CheckResult:
    t = _types(types)
    g = build_graph()
    res = CheckResult("tritone_and_messiaen")
    for lab, a in t.items():
        for x in range(6):
            if g.opposite[a.vertex_of[x]] != a.vertex_of[x + 6]:
                res.counterexamples.append({"type": str(lab), "tritone": _names((x, x + 6))})
    sets = sorted({frozenset(tm.at(r).tones) for tm in MESSIAEN_FOUR for r in range(12)},
                  key=lambda s: sorted(s))
    res.details["messiaen_transpositions"] = len(sets)
    other = {}
    for lab, a in t.items():
        ok = [is_golden_rectangle(g, a.vertices(sorted(s))) for s in sets]
        if lab.family is Family.CHROMATIC:
            for s, good in zip(sets, ok):
                if not good:
                    res.counterexamples.append({"type": str(lab), "messiaen": _names(sorted(s))})
        else:
            other[str(lab)] = sum(ok)
    res.details["golden_rectangles_on_other_types"] = other
    return res


def check_hexagon_symmetry_and_type_map(types: Types | None = None) -> CheckResult:
    t = _types(types)
    res = CheckResult("hexagon_symmetry_and_type_map")
    keys = {canonical_form(a): lab for lab, a in t.items()}
    swap = {1: 4, 4: 1, 2: 3, 3: 2}
    type_map = {}
    for lab, a in t.items():
        for k in range(2, 12, 2):
            if not transposition_vertex_map(a, k)[1]:
                res.counterexamples.append({"type": str(lab), "shift": k, "symmetry": False})
        for k in range(1, 12, 2):
            got = keys.get(canonical_form(transpose_assignment(a, k)))
            want = TypeLabel(lab.family, swap[lab.index])
            if k == 1:
                type_map[str(lab)] = str(got) if got else None
            if got != want:
                res.counterexamples.append({"type": str(lab), "shift": k, "expected": str(want),
                                            "got": str(got) if got else None})
        try:
            hexagon, _ = hexagon_partition(a)
        except NotHexagonSymmetric:
            res.counterexamples.append({"type": str(lab), "hexagon": None})
            continue
        want_hex = WHOLE_TONE_C if lab.index in (1, 2) else WHOLE_TONE_CS
        if hexagon != want_hex:
            res.counterexamples.append({"type": str(lab), "hexagon": _names(sorted(hexagon))})
        if lab.family is Family.CHROMATIC:
            for x in sorted(hexagon):
                tri = triangle_of(a, (x, x + 1, x + 2))
                if tri.kind is not Shape.FACE:
                    res.counterexamples.append({"type": str(lab), "triplet": _names((x, x + 1, x + 2)),
                                                "got": tri.kind.value})
        if lab.family is Family.PYTHAGOREAN:
            faces = sum(triangle_of(a, (x, x + 7, x + 14)).kind is Shape.FACE for x in hexagon)
            res.details.setdefault("fifths_triplets_on_faces", {})[str(lab)] = faces
    res.details["semitone_type_map"] = type_map
    return res


def _placed(a: Assignment, h: SymmetryOp) -> Assignment:
    return apply_symmetry(a, h)


def _set_witnesses(src: Assignment, dst: Assignment, fig_tmpl: ScaleTemplate, root: int,
                   target: frozenset[int]) -> list[SymmetryOp]:
    fig = figure_of(src, fig_tmpl.at(root))
    return [op for op in automorphism_group() if frozenset(read_figure(dst, apply_symmetry(fig, op))) == target]


def major_minor_witnesses(src: Assignment, dst: Assignment, q1: ScaleTemplate, q2: ScaleTemplate) -> dict:
    """Search the symmetries carrying the X-q1 figure on ``src`` onto the X-q2 set on ``dst``.

    A type is a class of placements, so a bare two-fold rotation only makes
    sense for a chosen placement of ``dst``.  Reading on ``h(dst)`` through
    ``c`` is reading on ``dst`` through ``h^-1 c``; the search therefore
    finds the placements ``h`` for which every root has a two-fold witness.
    """
    G = automorphism_group()
    W = [_set_witnesses(src, dst, q1, x, q2.at(x).tone_set()) for x in range(12)]
    placements = []
    for h in G:
        per_root = []
        for ws in W:
            twofold = sorted(h * k for k in ws if (h * k).is_rotation and (h * k).order == 2)
            if not twofold:
                break
            per_root.append(twofold[0])
        else:
            placements.append((h, per_root))
    common = set(W[0]).intersection(*W[1:]) if all(W) else set()
    return {"witnesses": W, "placements": placements, "common": common}


def _conjugation_holds(src: Assignment, dst: Assignment, q1: ScaleTemplate, q2: ScaleTemplate,
                       c2: SymmetryOp, x: int) -> bool:
    """Some A_dst(x) C2 A_src(x)^-1 carries the X-q1 figure to the X-q2 set."""
    A_src = _set_witnesses(src, src, q1, 0, q1.at(x).tone_set())
    A_dst = _set_witnesses(dst, dst, q2, 0, q2.at(x).tone_set())
    fig = figure_of(src, q1.at(x))
    target = q2.at(x).tone_set()
    return any(frozenset(read_figure(dst, apply_symmetry(fig, a3 * c2 * a1.inverse()))) == target
               for a1 in A_src for a3 in A_dst)


def check_major_minor_duality(types: Types | None = None) -> CheckResult:
    t = _types(types)
    res = CheckResult("major_minor_duality")
    pairs = [("1", "3", MAJOR, MINOR), ("2", "4", MINOR, MAJOR),
             ("1'", "3'", MAJOR, MINOR), ("2'", "4'", MINOR, MAJOR)]
    for s, d, q1, q2 in pairs:
        src, dst = t[_t(s)], t[_t(d)]
        key = f"{s}->{d}:{q1.name}->{q2.name}"
        found = major_minor_witnesses(src, dst, q1, q2)
        missing = [tone_name(x) for x, ws in enumerate(found["witnesses"]) if not ws]
        if missing:
            res.counterexamples.append({"pair": key, "roots_without_witness": missing})
            continue
        if not found["placements"]:
            res.counterexamples.append({"pair": key, "placement": None})
            continue
        h, per_root = found["placements"][0]
        placed = _placed(dst, h)
        c2 = per_root[0]
        conj = [x for x in range(12) if not _conjugation_holds(src, placed, q1, q2, c2, x)]
        if conj:
            res.counterexamples.append({"pair": key, "conjugation_fails": [tone_name(x) for x in conj]})
        # the identity must not already do the job
        ident = frozenset(read_figure(placed, figure_of(src, q1.at(0))))
        if ident == q2.at(0).tone_set():
            res.counterexamples.append({"pair": key, "identity_control": "reads the target set"})
        res.details[key] = {
            "placements": len(found["placements"]),
            "placement": _perm(h),
            "two_fold_witness": {tone_name(x): _perm(op) for x, op in enumerate(per_root)},
            "witnesses_per_root": [len(ws) for ws in found["witnesses"]],
            "single_element_for_all_roots": bool(found["common"]),
        }
    return res


def gregorian_name(a: Assignment, template: ScaleTemplate, root: int) -> tuple[ScaleTemplate, int]:
    """The mode read off the inverted figure of a major or minor scale.

    A root on the hexagon names the mode a semitone up (Mixolydian from
    major, Phrygian from minor); a root on the hexagram names it a
    semitone down (Lydian, Dorian).
    """
    hexagon, _ = hexagon_partition(a)
    up = root in hexagon
    if template is MAJOR:
        return (MIXOLYDIAN, (root + 1) % 12) if up else (LYDIAN, (root - 1) % 12)
    if template is MINOR:
        return (PHRYGIAN, (root + 1) % 12) if up else (DORIAN, (root - 1) % 12)
    raise ValueError("only major and minor scales have a Gregorian partner")


def check_gregorian_duality(types: Types | None = None) -> CheckResult:
    t = _types(types)
    res = CheckResult("gregorian_duality")
    named = {(0, "major"): ("mixolydian", 1), (1, "major"): ("lydian", 0),
             (0, "minor"): ("phrygian", 1), (1, "minor"): ("dorian", 0)}
    for pair in (("1", "4"), ("2", "3")):
        seen = set()
        for lab in pair:
            a = t[_t(lab)]
            try:
                hexagon_partition(a)
            except NotHexagonSymmetric:
                res.counterexamples.append({"type": lab, "hexagon": None})
                continue
            for tmpl in (MAJOR, MINOR):
                for x in range(12):
                    read = frozenset(read_figure(a, spatial_inversion(figure_of(a, tmpl.at(x)))))
                    mode, root = gregorian_name(a, tmpl, x)
                    if read != mode.at(root).tone_set():
                        res.counterexamples.append({"type": lab, "scale": tmpl.at(x).name,
                                                    "read": _names(sorted(read)),
                                                    "named": mode.at(root).name})
                    seen.add((mode.name, root))
                    if lab == pair[0] == "1" and (x, tmpl.name) in named:
                        if named[(x, tmpl.name)] != (mode.name, root):
                            res.counterexamples.append({"named_correspondence": tmpl.at(x).name,
                                                        "got": mode.at(root).name})
        res.details[f"instances_{pair[0]}_{pair[1]}"] = len(seen)
        if len(seen) != 48:
            res.counterexamples.append({"types": list(pair), "distinct_mode_instances": len(seen)})
    a1 = t[_t("1")]
    examples = {}
    if _has_partition(a1):
        for tmpl in (MAJOR, MINOR):
            for x in (0, 1):
                mode, root = gregorian_name(a1, tmpl, x)
                examples[tmpl.at(x).name] = mode.at(root).name
    res.details["type_1_examples"] = examples
    return res


def _has_partition(a: Assignment) -> bool:
    try:
        hexagon_partition(a)
    except NotHexagonSymmetric:
        return False
    return True


def _chord_kinds(a: Assignment, seq) -> list[ChordKind]:
    g = build_graph()
    vs = a.vertices(seq)
    return [chord_kind(g, vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def check_chromatic_pythagorean_duality(types: Types | None = None) -> CheckResult:
    t = _types(types)
    res = CheckResult("chromatic_pythagorean_duality")
    chain, chrom = PYTHAGOREAN_CHAIN.at(0).tones, CHROMATIC.at(0).tones
    for labels, seq, name in ((CHROMATIC_TYPES, chain, "fifths-chain"), (PYTHAGOREAN_TYPES, chrom, "chromatic")):
        for lab in labels:
            kinds = _chord_kinds(t[lab], seq)
            middles = sum(k is ChordKind.MIDDLE for k in kinds)
            res.details[f"{lab}:{name}"] = middles
            if middles != 12:
                res.counterexamples.append({"type": str(lab), "figure": name, "middle_chords": middles})
    return res


def self_duality_table(a: Assignment) -> dict[tuple[str, str], dict[str, int]]:
    """Triangle kinds of major/minor triads grouped by the whole-tone class of the root."""
    out = {}
    for tmpl in (MAJOR_TRIAD, MINOR_TRIAD):
        for cls_name, cls in (("C", WHOLE_TONE_C), ("C#", WHOLE_TONE_CS)):
            counts: dict[str, int] = {}
            for x in sorted(cls):
                k = triangle_of(a, tmpl.at(x).tones).kind.value
                counts[k] = counts.get(k, 0) + 1
            out[(tmpl.name, cls_name)] = counts
    return out


def literal_self_duality(a: Assignment, swapped: bool) -> list[str]:
    """Failures of: C-class majors are triangles and C#-class minors are gnomons (classes swapped if asked)."""
    maj_cls, min_cls = (WHOLE_TONE_CS, WHOLE_TONE_C) if swapped else (WHOLE_TONE_C, WHOLE_TONE_CS)
    bad = [MAJOR_TRIAD.at(x).name for x in sorted(maj_cls)
           if triangle_of(a, MAJOR_TRIAD.at(x).tones).kind is not Shape.GOLDEN_TRIANGLE]
    bad += [MINOR_TRIAD.at(x).name for x in sorted(min_cls)
            if triangle_of(a, MINOR_TRIAD.at(x).tones).kind is not Shape.GOLDEN_GNOMON]
    return bad


def check_self_duality_and_redlines(types: Types | None = None) -> CheckResult:
    """Exceptional types: every major/minor triad is a golden triangle or gnomon, split by whole-tone class.

    On the types with C's whole-tone scale on the hexagon, majors on that
    scale and minors on the other are triangles, the remaining triads are
    gnomons; the roles of the two classes swap on the other two types.
    """
    t = _types(types)
    res = CheckResult("self_duality_and_redlines")
    tables = {}
    for lab in EXCEPTIONAL_TYPES:
        a = t[lab]
        c_side = lab.index in (1, 2)
        tri_cls = {"major-triad": WHOLE_TONE_C if c_side else WHOLE_TONE_CS,
                   "minor-triad": WHOLE_TONE_CS if c_side else WHOLE_TONE_C}
        for tmpl in (MAJOR_TRIAD, MINOR_TRIAD):
            for x in range(12):
                want = Shape.GOLDEN_TRIANGLE if x in tri_cls[tmpl.name] else Shape.GOLDEN_GNOMON
                got = triangle_of(a, tmpl.at(x).tones).kind
                if got is not want:
                    res.counterexamples.append({"type": str(lab), "triad": tmpl.at(x).name,
                                                "expected": want.value, "got": got.value})
        tables[str(lab)] = {f"{k[0]}@{k[1]}": v for k, v in self_duality_table(a).items()}
        literal = literal_self_duality(a, swapped=lab.index in (2, 3))
        res.details.setdefault("literal_statement_failures", {})[str(lab)] = len(literal)
    res.details["tables"] = tables
    for name, (seq, residue) in RED_LINES.items():
        a = t[_t(name)]
        kinds = _chord_kinds(a, seq)
        steps = [(seq[(i + 1) % 12] - seq[i]) % 12 for i in range(12)]
        edges = sum(k is ChordKind.EDGE for k in kinds)
        ok_res = all(s % 4 == residue for s in steps)
        res.details.setdefault("red_lines", {})[name] = {"edges": edges, "steps": steps, "residue_ok": ok_res}
        if edges != 12 or not ok_res:
            res.counterexamples.append({"red_line": name, "edges": edges, "residue_ok": ok_res})
    res.details["red_line_uniqueness"] = "not verified"
    return res


def check_reference_types(types: Types | None = None) -> CheckResult:
    """Each type meets its family's defining conditions and the twelve are distinct classes."""
    t = _types(types)
    res = CheckResult("reference_types")
    chain_of = {Family.CHROMATIC: CHROMATIC, Family.PYTHAGOREAN: PYTHAGOREAN_CHAIN}
    for lab, a in t.items():
        if not has_hexagon_symmetry(a):
            res.counterexamples.append({"type": str(lab), "hexagon_symmetry": False})
            continue
        if family_of(a) is not lab.family:
            res.counterexamples.append({"type": str(lab), "family": family_of(a).value})
        chain = chain_of.get(lab.family)
        if chain is not None:
            root = 0 if lab.index in (1, 2) else 1
            wt = tuple(range(root, 12, 2))
            if not (satisfies_neighboring(a, chain.at(0).tones, True) and satisfies_neighboring(a, wt, True)):
                res.counterexamples.append({"type": str(lab), "neighboring": False})
    keys = [canonical_form(a) for a in t.values()]
    if len(set(keys)) != len(keys):
        res.counterexamples.append({"distinct_classes": len(set(keys))})
    res.details["types"] = {str(lab): _names(a.tone_at) for lab, a in t.items()}
    return res


@cache
def _enumeration_counts() -> dict:
    counts = {}
    for chain in (CHROMATIC, PYTHAGOREAN_CHAIN):
        for root in ("C", "C#"):
            c = chromatic_whole_tone(root, chain)
            counts[f"{chain.name}+whole-tone:{root}"] = enumerate_assignments(c).class_count
            sym = ConstraintSet(c.cycles, symmetry_required=True)
            counts[f"{chain.name}+whole-tone:{root}+hexsym"] = enumerate_assignments(sym).class_count
    hs = enumerate_hexagon_symmetric()
    counts["hexsym:raw"] = hs.raw_count
    counts["hexsym:classes"] = hs.class_count
    return counts


def check_enumeration_counts(types: Types | None = None) -> CheckResult:
    t = _types(types)
    res = CheckResult("enumeration_counts")
    counts = dict(_enumeration_counts())
    res.details["counts"] = counts
    want = {
        "chromatic+whole-tone:C+hexsym": 2, "chromatic+whole-tone:C#+hexsym": 2,
        "pythagorean-chain+whole-tone:C+hexsym": 2, "pythagorean-chain+whole-tone:C#+hexsym": 2,
        "hexsym:raw": 1440, "hexsym:classes": 12,
    }
    for k, v in want.items():
        if counts[k] != v:
            res.counterexamples.append({"count": k, "expected": v, "got": counts[k]})
    hs = enumerate_hexagon_symmetric()
    fam = {f.value: 0 for f in Family}
    for rep in hs.representatives:
        fam[family_of(rep).value] += 1
    res.details["families"] = fam
    if sorted(fam.values()) != [4, 4, 4]:
        res.counterexamples.append({"families": fam})
    if set(hs.per_class.values()) != {120}:
        res.counterexamples.append({"free_action": sorted(set(hs.per_class.values()))})
    known = {k for k, _ in hs.classes}
    for lab, a in t.items():
        if canonical_form(a) not in known:
            res.counterexamples.append({"type": str(lab), "in_enumeration": False})
    return res


def check_prohibition_lemma(types: Types | None = None) -> CheckResult:
    res = CheckResult("prohibition_lemma")
    n = prohibition_search().raw_count
    res.details["assignments"] = n
    if n:
        res.counterexamples.append({"assignments": n})
    return res


ROSTER: tuple[Callable[[Types | None], CheckResult], ...] = (
    check_reference_types,
    check_prohibition_lemma,
    check_enumeration_counts,
    check_golden_theorem,
    check_golden_theorem_2,
    check_triad_uniqueness,
    check_fundamental_hexatonic,
    check_tritone_and_messiaen,
    check_hexagon_symmetry_and_type_map,
    check_major_minor_duality,
    check_gregorian_duality,
    check_chromatic_pythagorean_duality,
    check_self_duality_and_redlines,
)


def run_all(types: Types | None = None) -> VerificationReport:
    """Run every check in a fixed order; a crashing check is reported, not raised."""
    t = _types(types)
    results = []
    for check in ROSTER:
        try:
            r = check(t)
        except Exception as e:  # noqa: BLE001 - a broken check is itself a failure
            log.exception("check %s raised", check.__name__)
            r = CheckResult(check.__name__.removeprefix("check_"), {}, [{"error": f"{type(e).__name__}: {e}"}])
        results.append(r)
    return VerificationReport(results)

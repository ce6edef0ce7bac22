"""
Generalized triads and scales from the golden figures and from the
symmetries fixing C's vertex, with the published tables to compare against.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cache

from .assignment import (
    Assignment, Family, TypeLabel, apply_symmetry, figure_of, hexagon_partition, read_figure,
)
from .polyhedron import Shape, automorphism_group, build_graph, classify_triangle
from .search import derive_reference_types
from .theorems import CheckResult
from .tones import (
    MAJOR, MINOR, ScaleTemplate, ascending_normal_form, format_tones, parse_tone,
)


class Generation(str, Enum):
    FIRST = "first"
    SECOND = "second"


class Pattern(str, Enum):
    MAJOR = "major"
    MINOR = "minor"


Triad = tuple[int, int, int]

# (family, pattern) -> (type with C on the hexagon, its semitone partner)
_TYPE_PAIRS = {
    (Family.CHROMATIC, Pattern.MAJOR): ("1", "4"),
    (Family.CHROMATIC, Pattern.MINOR): ("2", "3"),
    (Family.PYTHAGOREAN, Pattern.MAJOR): ("2'", "3'"),
    (Family.PYTHAGOREAN, Pattern.MINOR): ("1'", "4'"),
}
_KIND = {Family.CHROMATIC: Shape.GOLDEN_TRIANGLE, Family.PYTHAGOREAN: Shape.GOLDEN_GNOMON}

# tonic, subdominant and dominant triads of the C scale, in the order the
# tables list their images
_PRIMARY_TRIADS = {
    "major": ((0, 4, 7), (5, 9, 0), (7, 11, 2)),
    "minor": ((0, 3, 7), (5, 8, 0), (7, 10, 2)),
}


def _coerce(enum, x):
    return x if isinstance(x, enum) else enum(str(x).lower())


def _family(x) -> Family:
    if isinstance(x, Family):
        return x
    return Family(str(x).capitalize())


@dataclass(frozen=True)
class GeneralizedTriadSet:
    source: tuple[TypeLabel, ...]
    apex_class: str
    kind: Shape
    patterns: tuple[Triad, ...]
    triads: frozenset[frozenset[int]]

    def pattern_names(self) -> list[str]:
        return [format_tones(p, "") for p in self.patterns]

    def transposition_classes(self) -> frozenset[frozenset[int]]:
        return frozenset(_class_of(t) for t in self.triads)


def _class_of(tones) -> frozenset[int]:
    """Smallest transposition of a tone set, used as a class key."""
    ts = sorted(tones)
    return min((frozenset((t - r) % 12 for t in ts) for r in ts), key=sorted)


def _apex_patterns(a: Assignment, kind: Shape, apex_tone: int) -> list[Triad]:
    """Triads of the given kind whose apex sits on ``apex_tone``, spelt upward from it."""
    g = build_graph()
    v = a.vertex_of[apex_tone]
    out = []
    others = [u for u in range(12) if u != v]
    for i, u in enumerate(others):
        for w in others[i + 1:]:
            tri = classify_triangle(g, (v, u, w))
            if tri.kind is kind and tri.apex == v:
                out.append(ascending_normal_form(a.tones((v, u, w)), apex_tone))
    return sorted(out, key=lambda p: [(t - apex_tone) % 12 for t in p])


def golden_triads(family: Family | str = Family.CHROMATIC, pattern: Pattern | str = Pattern.MAJOR,
                  generation: Generation | str = Generation.FIRST,
                  types: dict[TypeLabel, Assignment] | None = None) -> GeneralizedTriadSet:
    """Golden triangles (gnomons for the Pythagorean family) read as triads.

    First generation: figures whose apex is on the hexagon of either type of
    the pair.  Second: every figure of that kind on either type.  Patterns are
    the figures with apex on C, on the type with C on the hexagon (first) or
    on both types (second).
    """
    family, pattern = _family(family), _coerce(Pattern, pattern)
    generation = _coerce(Generation, generation)
    if family not in _KIND:
        raise ValueError(f"no golden generalization for the {family.value} family")
    t = derive_reference_types() if types is None else types
    labels = tuple(TypeLabel.parse(s) for s in _TYPE_PAIRS[(family, pattern)])
    kind = _KIND[family]
    g = build_graph()
    triads = set()
    for lab in labels:
        a = t[lab]
        hexagon, _ = hexagon_partition(a)
        for tri in _all_triangles():
            k = classify_triangle(g, tri)
            if k.kind is not kind:
                continue
            if generation is Generation.FIRST and a.tone_at[k.apex] not in hexagon:
                continue
            triads.add(frozenset(a.tones(tri)))
    pat_types = labels[:1] if generation is Generation.FIRST else labels
    patterns = []
    for lab in pat_types:
        patterns += [p for p in _apex_patterns(t[lab], kind, 0) if p not in patterns]
    apex = "Hexagon" if generation is Generation.FIRST else "All"
    return GeneralizedTriadSet(labels, apex, kind, tuple(patterns), frozenset(triads))


@cache
def _all_triangles() -> tuple[tuple[int, int, int], ...]:
    return tuple((a, b, c) for a in range(12) for b in range(a + 1, 12) for c in range(b + 1, 12))


@dataclass(frozen=True)
class ScaleEntry:
    tones: tuple[int, ...]
    triads: tuple[Triad, ...]
    op: tuple[int, ...]
    name: str | None = None

    def tone_set(self) -> frozenset[int]:
        return frozenset(self.tones)

    def __str__(self):
        tri = ", ".join(format_tones(t, "") for t in self.triads)
        return f"{self.name or '?'}: {format_tones(self.tones)} ({tri})"


@dataclass(frozen=True)
class GeneralizedScaleFamily:
    base: str
    generation: Generation
    source: TypeLabel
    entries: tuple[ScaleEntry, ...]


def orbit_scales(a: Assignment, template: ScaleTemplate, root: int = 0,
                 triads: tuple[Triad, ...] = ()) -> list[ScaleEntry]:
    """Images of a scale's figure under the ten symmetries fixing the root's vertex.

    Works for any catalog scale; ``triads`` are extra tone groups carried
    along by the same symmetries (for major and minor: tonic, subdominant,
    dominant).
    """
    base = figure_of(a, template.at(root))
    tri_figs = [figure_of(a, tuple((root + t) % 12 for t in tri)) for tri in triads]
    out = []
    for op in automorphism_group().stabilizer(a.vertex_of[root]):
        tones = ascending_normal_form(read_figure(a, apply_symmetry(base, op)), root)
        imgs = tuple(read_figure(a, apply_symmetry(f, op)) for f in tri_figs)
        out.append(ScaleEntry(tones, imgs, op.perm))
    return sorted(out, key=lambda e: ([(t - root) % 12 for t in e.tones], e.triads, e.op))


def scale_source(base: Pattern | str, generation: Generation | str,
                 family: Family | str = Family.CHROMATIC) -> TypeLabel:
    base, generation, family = _coerce(Pattern, _base_pattern(base)), _coerce(Generation, generation), _family(family)
    first, second = _TYPE_PAIRS[(family, base)]
    return TypeLabel.parse(first if generation is Generation.FIRST else second)


def _base_pattern(base) -> str:
    s = str(getattr(base, "value", base)).lower()
    return s.removeprefix("c-")


def stabilizer_orbit_scales(base: Pattern | str = Pattern.MAJOR, generation: Generation | str = Generation.FIRST,
                            family: Family | str = Family.CHROMATIC,
                            types: dict[TypeLabel, Assignment] | None = None) -> GeneralizedScaleFamily:
    """The ten generalized C-major (C-minor) scales of one generation, named from the tables when possible."""
    pattern = _coerce(Pattern, _base_pattern(base))
    generation = _coerce(Generation, generation)
    family = _family(family)
    src = scale_source(pattern, generation, family)
    t = derive_reference_types() if types is None else types
    tmpl = MAJOR if pattern is Pattern.MAJOR else MINOR
    entries = orbit_scales(t[src], tmpl, 0, _PRIMARY_TRIADS[pattern.value])
    if family is Family.CHROMATIC:
        names = {}
        for name, tones, _ in APPENDIX[_listing_for(pattern, generation)]:
            names.setdefault(frozenset(_parse_tones(tones)), name)
        entries = [ScaleEntry(e.tones, e.triads, e.op, names.get(e.tone_set())) for e in entries]
    return GeneralizedScaleFamily(f"C-{pattern.value}", generation, src, tuple(entries))


def _listing_for(pattern: Pattern, generation: Generation) -> str:
    return {(Pattern.MAJOR, Generation.FIRST): "A9", (Pattern.MINOR, Generation.FIRST): "A10",
            (Pattern.MAJOR, Generation.SECOND): "A11", (Pattern.MINOR, Generation.SECOND): "A12"}[
        (pattern, generation)]


_TONE_TOKEN = re.compile(r"[A-G](?:#|b)?")


def _parse_tones(s: str) -> tuple[int, ...]:
    """'C Eb E' or 'CEbE' -> tones."""
    toks = _TONE_TOKEN.findall(s.replace(" ", ""))
    if "".join(toks) != s.replace(" ", ""):
        raise ValueError(f"cannot split {s!r} into tone names")
    return tuple(parse_tone(x) for x in toks)


# Published generalized scales: name, ascending tones, images of the
# tonic / subdominant / dominant triads.
APPENDIX: dict[str, list[tuple[str, str, tuple[str, str, str]]]] = {
    "A9": [
        ("C-major", "C D E F G A B", ("CEG", "FAC", "GBD")),
        ("C1-major", "C Eb E F G G# Bb", ("CGG#", "EFC", "G#BbEb")),
        ("C2-major", "C C# E G G# A B", ("CG#A", "GEC", "AC#B")),
        ("C3-major", "C D F G G# A Bb", ("CAF", "G#GC", "FDBb")),
        ("C4-major", "C C# Eb E F G# A", ("CFE", "G#AC", "EEbC#")),
        ("MC-major", "C Eb F G G# A Bb", ("CG#G", "AFC", "GEbBb")),
        ("MC1-major", "C C# E F G# A B", ("CAG#", "EFC", "G#BC#")),
        ("MC2-major", "C D E F G A Bb", ("CFA", "EGC", "ABbD")),
        ("MC3-major", "C C# Eb E F G G#", ("CEF", "GG#C", "FC#Eb")),
        ("MC4-major", "C D E G G# A B", ("CGE", "G#AC", "EDB")),
    ],
    "A10": [
        ("C-minor", "C D Eb F G G# Bb", ("CEbG", "FG#C", "GBbD")),
        ("C1-minor", "C E F G G# A B", ("CGG#", "EFC", "G#AB")),
        ("C2-minor", "C C# Eb E F G# Bb", ("CG#F", "EbEC", "FC#Bb")),
        ("C3-minor", "C D Eb E F G A", ("CFE", "GEbC", "EDA")),
        ("C4-minor", "C C# Eb E G G# B", ("CEEb", "G#GC", "EbBC#")),
        ("MC-minor", "C D Eb E F G Bb", ("CGEb", "FEC", "EbDBb")),
        ("MC1-minor", "C Eb E G G# A B", ("CG#G", "EEbC", "GBA")),
        ("MC2-minor", "C C# Eb F G G# Bb", ("CFG#", "EbGC", "G#BbC#")),
        ("MC3-minor", "C D E F G G# A", ("CEF", "GG#C", "FAD")),
        ("MC4-minor", "C C# Eb E F G# B", ("CEbE", "G#FC", "EC#B")),
    ],
    "A11": [
        ("C-major", "C D E F G A B", ("CEG", "FAC", "GBD")),
        ("C1'-major", "C C# Eb F G# A Bb", ("CC#F", "EbG#C", "FABb")),
        ("C2'-major", "C D Eb E G G# B", ("CBEb", "DEC", "EbG#G")),
        ("C3'-major", "C C# D E F A Bb", ("CAD", "BbC#C", "DEF")),
        ("C4'-major", "C C# Eb G G# Bb B", ("CG#Bb", "GBC", "BbC#Eb")),
        ("MC'-major", "C C# Eb F G# Bb B", ("CG#Eb", "FC#C", "EbBBb")),
        ("MC1'-major", "C D Eb E G A B", ("CED", "EbBC", "DAG")),
        ("MC2'-major", "C C# D F G# A Bb", ("CG#Bb", "DAC", "BbG#F")),
        ("MC3'-major", "C Eb E G G# Bb B", ("CBG", "BbG#C", "GEEb")),
        ("MC4'-major", "C C# D E F G A", ("CAF", "GEC", "FC#D")),
    ],
    "A12": [
        ("C-minor", "C D Eb F G Ab Bb", ("CEbG", "FAbC", "GBbD")),
        ("C1'-minor", "C D E F G A B", ("CEA", "GBC", "ADF")),
        ("C2'-minor", "C C# F G G# A Bb", ("CG#Bb", "AC#C", "BbFG")),
        ("C3'-minor", "C D Eb G A Bb B", ("CBD", "BbEbC", "DGA")),
        ("C4'-minor", "C C# D E F A Bb", ("CC#F", "DEC", "FABb")),
        ("MC'-minor", "C D E G A Bb B", ("CBG", "AEC", "GDBb")),
        ("MC1'-minor", "C C# D F G# A Bb", ("CC#A", "BbG#C", "AFD")),
        ("MC2'-minor", "C D Eb F G Bb B", ("CEbBb", "DBC", "BbGF")),
        ("MC3'-minor", "C C# D E F G A", ("CED", "FC#C", "DAG")),
        ("MC4'-minor", "C Eb F G G# A Bb", ("CG#F", "GEbC", "FBbA")),
    ],
}

LISTING_SOURCES = {
    "A9": (Pattern.MAJOR, Generation.FIRST), "A10": (Pattern.MINOR, Generation.FIRST),
    "A11": (Pattern.MAJOR, Generation.SECOND), "A12": (Pattern.MINOR, Generation.SECOND),
}

# Published root-based triad patterns for the chromatic family.
TRIAD_LISTS: dict[tuple[str, str], tuple[str, ...]] = {
    ("major", "first"): ("CEG", "CGG#", "CG#A", "CFA", "CEF"),
    ("major", "second"): ("CEG", "CGG#", "CG#A", "CFA", "CEF", "CDEb", "CEbF", "CFG", "CGBb", "CDBb"),
    ("minor", "first"): ("CEbG", "CGG#", "CFG#", "CEF", "CEbE"),
    ("minor", "second"): ("CEbG", "CGG#", "CFG#", "CEF", "CEbE", "CDF", "CFG", "CGA", "CABb", "CDBb"),
}

# Stated overlaps between the major and minor pattern lists.
TRIAD_OVERLAPS = {
    "first": ("CGG#", "CEF"),
    "second": ("CFG", "CDBb"),
}

# Entries whose published triads are the right tone sets but not in the
# order the symmetry carries the tonic/subdominant/dominant tones.
KNOWN_ORDER_VARIANTS: dict[str, set[str]] = {"A9": {"C4-major", "MC1-major"}}

# Published entries that contradict themselves; the correction is applied
# only when the row still reads exactly as published, and is reported.
KNOWN_TYPOS: dict[tuple[str, str], dict] = {
    ("A11", "MC2'-major"): {
        "published": ("CG#Bb", "DAC", "BbG#F"),
        "corrected": ("CC#Bb", "DAC", "BbG#F"),
        "reason": "the three published triads omit C#, which is in the scale; "
                  "the tonic triad repeats the one listed for C4'-major",
    },
}


def _entry_key(tones, triads) -> tuple:
    return (frozenset(tones), tuple(sorted(tuple(sorted(t)) for t in triads)))


def reconcile_appendix(listing: str, data: list | None = None,
                       types: dict[TypeLabel, Assignment] | None = None) -> CheckResult:
    """Diff a generated family (or the triad pattern lists) against the published data.

    ``data`` replaces the embedded table, which is how a corrupted copy is
    fed in.  Entries are matched as (tone set, multiset of triad sets); the
    order inside each published triad is compared separately and reported.
    """
    listing = listing.upper() if listing.upper() in APPENDIX else listing
    if listing in ("TriadLists", "triads", "TRIADLISTS"):
        return _reconcile_triads(data, types)
    if listing not in APPENDIX:
        raise KeyError(f"unknown listing {listing!r}")
    rows = APPENDIX[listing] if data is None else data
    pattern, gen = LISTING_SOURCES[listing]
    fam = stabilizer_orbit_scales(pattern, gen, types=types)
    res = CheckResult(f"appendix_{listing}")
    gen_keys = Counter(_entry_key(e.tones, e.triads) for e in fam.entries)
    pub_keys = Counter()
    ordered = {}
    by_key = {_entry_key(e.tones, e.triads): e for e in fam.entries}
    for name, tones, triads in rows:
        typo = KNOWN_TYPOS.get((listing, name))
        if typo and tuple(triads) == typo["published"]:
            res.details.setdefault("annotated_typos", {})[name] = dict(typo)
            triads = typo["corrected"]
        tri = [_parse_tones(x) for x in triads]
        key = _entry_key(_parse_tones(tones), tri)
        pub_keys[key] += 1
        e = by_key.get(key)
        if e is not None:
            same = list(e.triads) == [tuple(x) for x in tri]
            ordered[name] = same
            if not same:
                res.details.setdefault("order_variants", {})[name] = {
                    "published": list(triads), "generated": [format_tones(x, "") for x in e.triads],
                    "known": name in KNOWN_ORDER_VARIANTS.get(listing, set())}
    missing = pub_keys - gen_keys
    extra = gen_keys - pub_keys
    name_of = {_entry_key(_parse_tones(t), [_parse_tones(x) for x in tr]): n for n, t, tr in rows}
    for key, n in sorted(missing.items(), key=lambda kv: sorted(kv[0][0])):
        res.counterexamples.append({"missing": name_of.get(key), "tones": format_tones(sorted(key[0])),
                                    "count": n})
    for key, n in sorted(extra.items(), key=lambda kv: sorted(kv[0][0])):
        res.counterexamples.append({"extra": format_tones(sorted(key[0])),
                                    "triads": [format_tones(t, "") for t in key[1]], "count": n})
    res.details["source_type"] = str(fam.source)
    res.details["matched"] = sum((pub_keys & gen_keys).values())
    res.details["entries"] = len(rows)
    res.details["triads_in_published_order"] = sum(ordered.values())
    return res


def _reconcile_triads(data, types) -> CheckResult:
    lists = TRIAD_LISTS if data is None else data
    res = CheckResult("appendix_triad_lists")
    gen_sets = {}
    for (pattern, gen), pub in sorted(lists.items()):
        got = golden_triads(Family.CHROMATIC, pattern, gen, types)
        gen_sets[(pattern, gen)] = got
        want = {frozenset(_parse_tones(p)) for p in pub}
        have = {frozenset(p) for p in got.patterns}
        res.details[f"{pattern}/{gen}"] = {"patterns": got.pattern_names(), "triads": len(got.triads),
                                           "classes": len(got.transposition_classes())}
        for p in sorted(want - have, key=sorted):
            res.counterexamples.append({"list": f"{pattern}/{gen}", "missing": format_tones(sorted(p), "")})
        for p in sorted(have - want, key=sorted):
            res.counterexamples.append({"list": f"{pattern}/{gen}", "extra": format_tones(sorted(p), "")})
        # the full sets are the patterns and all their transpositions
        closure = {frozenset((t + k) % 12 for t in p) for p in have for k in range(12)}
        if closure != set(got.triads):
            res.counterexamples.append({"list": f"{pattern}/{gen}", "closure": False})
    for gen, stated in TRIAD_OVERLAPS.items():
        if ("major", gen) not in gen_sets or ("minor", gen) not in gen_sets:
            continue
        common = set(gen_sets[("major", gen)].patterns) & set(gen_sets[("minor", gen)].patterns)
        common = {frozenset(p) for p in common}
        res.details[f"overlap/{gen}"] = sorted(format_tones(sorted(p), "") for p in common)
        for p in stated:
            if frozenset(_parse_tones(p)) not in common:
                res.counterexamples.append({"overlap": gen, "missing": p})
    return res


def reconcile_all(types: dict[TypeLabel, Assignment] | None = None) -> list[CheckResult]:
    return [reconcile_appendix("TriadLists", types=types)] + [
        reconcile_appendix(k, types=types) for k in APPENDIX]

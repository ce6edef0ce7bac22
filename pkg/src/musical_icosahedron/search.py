"""
Backtracking enumeration of musical icosahedra under neighbouring
constraints, and derivation of the twelve labelled reference types.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cache
from typing import Sequence

from .assignment import (
    ALL_LABELS, Assignment, Family, TypeLabel, canonical_form, has_hexagon_symmetry,
    hexagon_partition, satisfies_neighboring, transpose_assignment, triangle_of,
)
from .polyhedron import N, Shape, build_graph
from .tones import (
    CHROMATIC, MAJOR_TRIAD, MINOR_TRIAD, PYTHAGOREAN_CHAIN, WHOLE_TONE, WHOLE_TONE_C,
    WHOLE_TONE_CS, ScaleTemplate, parse_tone,
)

log = logging.getLogger(__name__)


class ReferenceTypeError(RuntimeError):
    pass


@dataclass(frozen=True)
class ConstraintSet:
    cycles: tuple[tuple[tuple[int, ...], bool], ...] = ()
    symmetry_required: bool = False

    def __post_init__(self):
        for seq, _ in self.cycles:
            if len(set(seq)) != len(seq):
                raise ValueError(f"constraint sequence repeats a tone: {seq}")

    @classmethod
    def of(cls, *templates: tuple[ScaleTemplate, int] | tuple[ScaleTemplate, int, bool],
           symmetry_required: bool = False) -> ConstraintSet:
        cycles = []
        for item in templates:
            tmpl, root = item[0], item[1]
            cyclic = item[2] if len(item) > 2 else tmpl.cyclic
            cycles.append((tmpl.at(root).tones, cyclic))
        return cls(tuple(cycles), symmetry_required)

    def tone_edges(self) -> frozenset[frozenset[int]]:
        out = set()
        for seq, cyclic in self.cycles:
            pairs = list(zip(seq, seq[1:]))
            if cyclic and len(seq) > 2:
                pairs.append((seq[-1], seq[0]))
            out.update(frozenset(p) for p in pairs)
        return frozenset(out)

    def neighbours(self) -> list[set[int]]:
        nb = [set() for _ in range(N)]
        for e in self.tone_edges():
            x, y = tuple(e)
            nb[x].add(y)
            nb[y].add(x)
        return nb

    def feasible(self) -> bool:
        return all(len(s) <= 5 for s in self.neighbours())

    def check(self, a: Assignment) -> bool:
        if not all(satisfies_neighboring(a, seq, cyc) for seq, cyc in self.cycles):
            return False
        return not self.symmetry_required or has_hexagon_symmetry(a)


@dataclass
class EnumerationResult:
    assignments: list[Assignment]
    classes: list[tuple[tuple[int, ...], Assignment]]
    per_class: dict[tuple[int, ...], int] = field(default_factory=dict)

    @property
    def raw_count(self) -> int:
        return len(self.assignments)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def representatives(self) -> list[Assignment]:
        return [rep for _, rep in self.classes]


def _search_order(nb: Sequence[set[int]]) -> list[int]:
    # greedy: most already-placed neighbours, then degree, then tone index
    order: list[int] = []
    left = set(range(N))
    while left:
        t = max(left, key=lambda x: (len(nb[x] & set(order)), len(nb[x]), -x))
        order.append(t)
        left.remove(t)
    return order


def _backtrack(c: ConstraintSet) -> list[tuple[int, ...]]:
    g = build_graph()
    adj, dist = g.adjacency, g.distance
    nb = c.neighbours()
    order = _search_order(nb)
    pos = {t: i for i, t in enumerate(order)}
    earlier_nb = [[u for u in nb[t] if pos[u] < pos[t]] for t in order]
    vertex_of = [-1] * N
    used = [False] * N
    out = []

    # pairs (x, y) whose images under +2 are both placed once t is placed
    sym_checks: list[list[tuple[int, int]]] = [[] for _ in range(N)]
    if c.symmetry_required:
        for x in range(N):
            for y in range(x + 1, N):
                last = max(pos[x], pos[y], pos[(x + 2) % 12], pos[(y + 2) % 12])
                sym_checks[last].append((x, y))

    def extend(i):
        if i == N:
            out.append(tuple(vertex_of))
            return
        t = order[i]
        prev = earlier_nb[i]
        cands = sorted(adj[vertex_of[prev[0]]]) if prev else range(N)
        for v in cands:
            if used[v]:
                continue
            if any(v not in adj[vertex_of[u]] for u in prev[1:]):
                continue
            vertex_of[t] = v
            used[v] = True
            if all(dist[vertex_of[x], vertex_of[y]] == dist[vertex_of[(x + 2) % 12], vertex_of[(y + 2) % 12]]
                   for x, y in sym_checks[i]):
                extend(i + 1)
            used[v] = False
            vertex_of[t] = -1

    extend(0)
    return out


def enumerate_assignments(c: ConstraintSet) -> EnumerationResult:
    """All assignments meeting ``c``, grouped by canonical key."""
    if not c.feasible():
        return EnumerationResult([], [], {})
    found = [Assignment.from_vertex_of(vo) for vo in _backtrack(c)]
    for a in found:
        if not c.check(a):
            raise AssertionError(f"search produced an assignment violating its constraints: {a}")
    keyed = sorted((canonical_form(a), a) for a in found)
    per_class = Counter(k for k, _ in keyed)
    classes = [(k, Assignment(k)) for k in sorted(per_class)]
    log.debug("enumerated %d assignments in %d classes", len(found), len(classes))
    return EnumerationResult([a for _, a in keyed], classes, dict(per_class))


# ``enumerate`` is the name used throughout the docs; keep the builtin reachable.
enumerate_constraints = enumerate_assignments


def chromatic_whole_tone(root: int | str, chain: ScaleTemplate = CHROMATIC, open_chain: bool = False) -> ConstraintSet:
    return ConstraintSet.of((chain, 0, not open_chain), (WHOLE_TONE, parse_tone(root)))


def prohibition_constraints(drop_tone: int | None = None) -> ConstraintSet:
    """For every X: X+-1 and X+-2 adjacent to X (optionally without X=drop_tone)."""
    cycles = []
    for x in range(N):
        for step in (1, 2):
            y = (x + step) % 12
            if drop_tone is not None and drop_tone in (x, y):
                continue
            cycles.append(((x, y), False))
    return ConstraintSet(tuple(cycles))


def prohibition_search(drop_tone: int | None = None) -> EnumerationResult:
    return enumerate_assignments(prohibition_constraints(drop_tone))


@cache
def enumerate_hexagon_symmetric() -> EnumerationResult:
    return enumerate_assignments(ConstraintSet(symmetry_required=True))


def family_of(a: Assignment) -> Family:
    if satisfies_neighboring(a, CHROMATIC.at(0).tones, True):
        return Family.CHROMATIC
    if satisfies_neighboring(a, PYTHAGOREAN_CHAIN.at(0).tones, True):
        return Family.PYTHAGOREAN
    return Family.EXCEPTIONAL


def _is_type_one(family: Family, a: Assignment) -> bool:
    c_major = MAJOR_TRIAD.at(0).tones
    if family is Family.CHROMATIC:
        return triangle_of(a, c_major).kind is Shape.GOLDEN_TRIANGLE
    if family is Family.PYTHAGOREAN:
        return triangle_of(a, MINOR_TRIAD.at(0).tones).kind is Shape.GOLDEN_GNOMON
    # exceptional: the C-major golden triangle has its apex on E, not on C
    tri = triangle_of(a, c_major)
    return tri.kind is Shape.GOLDEN_TRIANGLE and a.tone_at[tri.apex] == 4


@cache
def derive_reference_types() -> dict[TypeLabel, Assignment]:
    """Label the twelve hexagon-symmetric classes.

    Families come from the neighbouring condition (chromatic scale, then
    the fifths chain, else exceptional).  Within a family the two classes
    with the C whole-tone scale on the hexagon are split by a golden-figure
    test; types 3 and 4 are the semitone raises of 2 and 1.
    """
    classes = enumerate_hexagon_symmetric().classes
    if len(classes) != 12:
        raise ReferenceTypeError(f"expected 12 hexagon-symmetric classes, got {len(classes)}")
    by_key = {k: rep for k, rep in classes}
    out: dict[TypeLabel, Assignment] = {}
    for fam in Family:
        members = [rep for _, rep in classes if family_of(rep) is fam]
        if len(members) != 4:
            raise ReferenceTypeError(f"{fam.value}: expected 4 classes, got {len(members)}")
        c_side = [a for a in members if hexagon_partition(a)[0] == WHOLE_TONE_C]
        ones = [a for a in c_side if _is_type_one(fam, a)]
        if len(c_side) != 2 or len(ones) != 1:
            raise ReferenceTypeError(f"{fam.value}: cannot separate types 1 and 2")
        one = ones[0]
        two = next(a for a in c_side if a is not one)
        four = by_key[canonical_form(transpose_assignment(one, 1))]
        three = by_key[canonical_form(transpose_assignment(two, 1))]
        if len({one, two, three, four}) != 4 or any(
                hexagon_partition(a)[0] != WHOLE_TONE_CS for a in (three, four)):
            raise ReferenceTypeError(f"{fam.value}: semitone raises do not close the family")
        for i, a in enumerate((one, two, three, four), start=1):
            out[TypeLabel(fam, i)] = a
    return {lab: out[lab] for lab in ALL_LABELS}


@cache
def reference_keys() -> dict[tuple[int, ...], TypeLabel]:
    return {canonical_form(a): lab for lab, a in derive_reference_types().items()}


def reference(label: TypeLabel | str) -> Assignment:
    if isinstance(label, str):
        label = TypeLabel.parse(label)
    return derive_reference_types()[label]


def cyclicity_report() -> dict[str, int]:
    """Class counts for closed vs open chromatic scale / fifths chain."""
    out = {}
    for chain in (CHROMATIC, PYTHAGOREAN_CHAIN):
        for open_chain in (False, True):
            for root in ("C", "C#"):
                c = chromatic_whole_tone(root, chain, open_chain)
                key = f"{chain.name}{':open' if open_chain else ''}+whole-tone:{root}"
                out[key] = enumerate_assignments(c).class_count
    return out

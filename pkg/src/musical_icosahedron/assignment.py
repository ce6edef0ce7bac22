"""
Musical icosahedra: bijections between the 12 tones and the 12 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .polyhedron import (
    N, ChordKind, SymmetryOp, TriangleKind, automorphism_group, build_graph, chord_kind,
    classify_triangle,
)
from .tones import WHOLE_TONE_C, WHOLE_TONE_CS, ScaleInstance, format_tones, tone_name


class AssignmentError(ValueError):
    pass


class NotHexagonSymmetric(AssignmentError):
    pass


@dataclass(frozen=True, order=True)
class Assignment:
    """``tone_at[v]`` is the tone sitting on vertex ``v``."""

    tone_at: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.tone_at) != list(range(N)):
            raise AssignmentError(f"not a bijection onto the 12 tones: {self.tone_at}")

    @classmethod
    def from_vertex_of(cls, vertex_of: Sequence[int]) -> Assignment:
        tone_at = [0] * N
        for t, v in enumerate(vertex_of):
            tone_at[v] = t
        return cls(tuple(tone_at))

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        inv = [0] * N
        for v, t in enumerate(self.tone_at):
            inv[t] = v
        return tuple(inv)

    def vertices(self, tones: Iterable[int]) -> tuple[int, ...]:
        return tuple(self.vertex_of[t % 12] for t in tones)

    def tones(self, vertices: Iterable[int]) -> tuple[int, ...]:
        return tuple(self.tone_at[v] for v in vertices)

    def swap(self, x: int, y: int) -> Assignment:
        """Exchange the vertices of tones ``x`` and ``y``."""
        vo = list(self.vertex_of)
        vo[x], vo[y] = vo[y], vo[x]
        return Assignment.from_vertex_of(vo)

    def __str__(self):
        return format_tones(self.tone_at, " ")


@dataclass(frozen=True)
class Figure:
    """A path (or closed cycle) of vertices traced on the icosahedron."""

    vertices: tuple[int, ...]
    cyclic: bool = False

    def __post_init__(self):
        vs = self.vertices
        steps = zip(vs, vs[1:] + (vs[:1] if self.cyclic else ()))
        if any(a == b for a, b in steps):
            raise AssignmentError(f"consecutive figure vertices must differ: {vs}")

    @property
    def chords(self) -> tuple[ChordKind, ...]:
        g = build_graph()
        vs = self.vertices
        pairs = list(zip(vs, vs[1:]))
        if self.cyclic and len(vs) > 2:
            pairs.append((vs[-1], vs[0]))
        return tuple(chord_kind(g, a, b) for a, b in pairs)


class Family(str, Enum):
    CHROMATIC = "Chromatic"
    PYTHAGOREAN = "Pythagorean"
    EXCEPTIONAL = "Exceptional"


_MARK = {Family.CHROMATIC: "", Family.PYTHAGOREAN: "'", Family.EXCEPTIONAL: "*"}


@dataclass(frozen=True, order=True)
class TypeLabel:
    family: Family
    index: int

    def __str__(self):
        return f"{self.index}{_MARK[self.family]}"

    @classmethod
    def parse(cls, s: str) -> TypeLabel:
        s = s.strip().replace("′", "'")
        if not s or not s[0].isdigit():
            raise ValueError(f"bad type label {s!r}")
        index, mark = int(s[0]), s[1:]
        fam = {"": Family.CHROMATIC, "'": Family.PYTHAGOREAN, "p": Family.PYTHAGOREAN,
               "*": Family.EXCEPTIONAL, "s": Family.EXCEPTIONAL}.get(mark)
        if fam is None or not 1 <= index <= 4:
            raise ValueError(f"bad type label {s!r}")
        return cls(fam, index)


ALL_LABELS = tuple(TypeLabel(f, i) for f in Family for i in range(1, 5))


def _check_distinct(seq: Sequence[int]) -> None:
    if len(set(seq)) != len(seq):
        raise AssignmentError(f"duplicate tones in {format_tones(seq)}")


def satisfies_neighboring(a: Assignment, seq: Sequence[int], cyclic: bool) -> bool:
    seq = [t % 12 for t in seq]
    _check_distinct(seq)
    if len(seq) < 2:
        raise AssignmentError("need at least two tones")
    g = build_graph()
    vs = a.vertices(seq)
    pairs = list(zip(vs, vs[1:]))
    if cyclic and len(vs) > 2:
        pairs.append((vs[-1], vs[0]))
    return all(g.adjacent(u, v) for u, v in pairs)


def figure_of(a: Assignment, s: ScaleInstance | Sequence[int], cyclic: bool | None = None) -> Figure:
    if isinstance(s, ScaleInstance):
        tones, cyc = s.tones, s.cyclic
    else:
        tones, cyc = tuple(t % 12 for t in s), False
    _check_distinct(tones)
    return Figure(a.vertices(tones), cyc if cyclic is None else cyclic)


def read_figure(a: Assignment, f: Figure) -> tuple[int, ...]:
    return a.tones(f.vertices)


def apply_symmetry(x, op: SymmetryOp):
    if isinstance(x, Assignment):
        return Assignment.from_vertex_of(tuple(op.perm[v] for v in x.vertex_of))
    if isinstance(x, Figure):
        return Figure(tuple(op.perm[v] for v in x.vertices), x.cyclic)
    raise TypeError(type(x))


def spatial_inversion(f: Figure) -> Figure:
    opp = build_graph().opposite
    return Figure(tuple(opp[v] for v in f.vertices), f.cyclic)


def transpose_assignment(a: Assignment, k: int) -> Assignment:
    return Assignment(tuple((t + k) % 12 for t in a.tone_at))


def transposition_vertex_map(a: Assignment, k: int) -> tuple[tuple[int, ...], bool]:
    perm = tuple(a.vertex_of[(t + k) % 12] for t in a.tone_at)
    return perm, perm in automorphism_group()


def has_hexagon_symmetry(a: Assignment) -> bool:
    return transposition_vertex_map(a, 2)[1]


def canonical_form(a: Assignment) -> tuple[int, ...]:
    """Lexicographically least tone word over the whole symmetry orbit."""
    words = np.asarray(a.tone_at)[automorphism_group().perm_array]
    return tuple(int(t) for t in min(map(tuple, words)))


def canonical_forms(tone_ats: np.ndarray) -> np.ndarray:
    """Vectorised canonical_form for an (n, 12) array of tone_at rows."""
    perms = automorphism_group().perm_array
    words = tone_ats[:, perms]  # (n, 120, 12)
    # base-12 encoding preserves lexicographic order
    weights = 12 ** np.arange(N - 1, -1, -1, dtype=np.int64)
    codes = words @ weights
    best = codes.argmin(axis=1)
    return words[np.arange(len(tone_ats)), best]


def orbit_size(a: Assignment) -> int:
    words = np.asarray(a.tone_at)[automorphism_group().perm_array]
    return len({tuple(w) for w in words})


def triangle_of(a: Assignment, tones: Sequence[int]) -> TriangleKind:
    return classify_triangle(build_graph(), a.vertices(tones))


def _is_cycle(a: Assignment, cls: frozenset[int], dist: int) -> bool:
    g = build_graph()
    start = min(cls)
    return all(g.dist(a.vertex_of[(start + 2 * i) % 12], a.vertex_of[(start + 2 * i + 2) % 12]) == dist
               for i in range(6))


def hexagon_partition(a: Assignment) -> tuple[frozenset[int], frozenset[int]]:
    """(hexagon, hexagram) whole-tone classes: Edge 6-cycle vs Middle 6-cycle."""
    for hexagon, hexagram in ((WHOLE_TONE_C, WHOLE_TONE_CS), (WHOLE_TONE_CS, WHOLE_TONE_C)):
        if _is_cycle(a, hexagon, 1) and _is_cycle(a, hexagram, 2):
            return hexagon, hexagram
    raise NotHexagonSymmetric(f"no whole-tone class forms an edge hexagon on {a}")


def classify_type(a: Assignment) -> TypeLabel | None:
    from .search import reference_keys

    return reference_keys().get(canonical_form(a))


def describe(a: Assignment) -> str:
    label = classify_type(a)
    head = f"type {label}" if label else "unclassified"
    return f"{head}: " + " ".join(f"{v}:{tone_name(t)}" for v, t in enumerate(a.tone_at))

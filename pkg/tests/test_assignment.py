from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from musical_icosahedron.assignment import (
    Assignment, AssignmentError, Family, Figure, NotHexagonSymmetric, TypeLabel, apply_symmetry,
    canonical_form, canonical_forms, classify_type, describe, figure_of, has_hexagon_symmetry,
    hexagon_partition, orbit_size, read_figure, satisfies_neighboring, spatial_inversion,
    transpose_assignment, transposition_vertex_map, triangle_of,
)
from musical_icosahedron.polyhedron import ChordKind, automorphism_group
from musical_icosahedron.search import reference
from musical_icosahedron.tones import CHROMATIC, MAJOR, WHOLE_TONE_C, WHOLE_TONE_CS

GROUP = automorphism_group()
ops = st.sampled_from(GROUP.ops)
assignments = st.permutations(range(12)).map(lambda p: Assignment(tuple(p)))


def test_bijection_required():
    with pytest.raises(AssignmentError):
        Assignment((0,) * 12)
    with pytest.raises(AssignmentError):
        Assignment(tuple(range(11)))


@given(assignments)
def test_vertex_of_inverts_tone_at(a):
    assert all(a.tone_at[a.vertex_of[t]] == t for t in range(12))
    assert Assignment.from_vertex_of(a.vertex_of) == a


@given(assignments, st.integers(0, 11), st.integers(0, 11))
def test_swap(a, x, y):
    b = a.swap(x, y)
    assert b.vertex_of[x] == a.vertex_of[y] and b.vertex_of[y] == a.vertex_of[x]
    assert b.swap(x, y) == a


@given(assignments, ops)
def test_canonical_form_is_group_invariant(a, op):
    assert canonical_form(apply_symmetry(a, op)) == canonical_form(a)


@given(assignments)
def test_canonical_form_idempotent_and_in_orbit(a):
    k = canonical_form(a)
    assert canonical_form(Assignment(k)) == k
    assert k in {tuple(a.tone_at[p] for p in op.perm) for op in GROUP}


@given(st.lists(assignments, min_size=1, max_size=8))
def test_vectorised_canonical_form(xs):
    arr = np.array([a.tone_at for a in xs])
    assert [tuple(r) for r in canonical_forms(arr)] == [canonical_form(a) for a in xs]


@given(assignments, ops)
def test_symmetry_moves_figures_consistently(a, op):
    f = figure_of(a, MAJOR.at(0))
    b = apply_symmetry(a, op)
    assert read_figure(b, apply_symmetry(f, op)) == read_figure(a, f)
    assert apply_symmetry(f, op).chords == f.chords


@given(assignments)
def test_generic_orbit_is_free(a):
    # a random assignment is hexagon-symmetric with probability 1440/12!
    if not has_hexagon_symmetry(a):
        assert orbit_size(a) == 120


@given(assignments, st.integers(0, 11))
def test_transposition_vertex_map(a, k):
    perm, _ = transposition_vertex_map(a, k)
    b = transpose_assignment(a, k)
    assert all(b.tone_at[v] == (a.tone_at[v] + k) % 12 for v in range(12))
    assert all(a.tone_at[perm[v]] == (a.tone_at[v] + k) % 12 for v in range(12))


def test_figure_rules():
    with pytest.raises(AssignmentError):
        Figure((1, 1, 2))
    a = reference("1")
    with pytest.raises(AssignmentError):
        figure_of(a, (0, 4, 4))
    f = figure_of(a, CHROMATIC.at(0))
    assert f.cyclic and f.chords == (ChordKind.EDGE,) * 12
    inv = spatial_inversion(f)
    assert inv.chords == f.chords


def test_neighbouring_condition():
    a = reference("1")
    assert satisfies_neighboring(a, range(12), True)
    assert satisfies_neighboring(a, sorted(WHOLE_TONE_C), True)
    assert not satisfies_neighboring(a, sorted(WHOLE_TONE_CS), True)
    with pytest.raises(AssignmentError):
        satisfies_neighboring(a, (0,), False)


def test_hexagon_partition_on_types(types):
    for lab, a in types.items():
        hexagon, hexagram = hexagon_partition(a)
        assert hexagon == (WHOLE_TONE_C if lab.index in (1, 2) else WHOLE_TONE_CS)
        assert hexagon | hexagram == frozenset(range(12))
    with pytest.raises(NotHexagonSymmetric):
        hexagon_partition(Assignment(tuple(range(12))))


def test_type_labels():
    assert str(TypeLabel.parse("2′")) == "2'"
    assert TypeLabel.parse("3*").family is Family.EXCEPTIONAL
    assert TypeLabel.parse("4p") == TypeLabel(Family.PYTHAGOREAN, 4)
    for bad in ("5", "x", "", "1#"):
        with pytest.raises(ValueError):
            TypeLabel.parse(bad)


def test_classify_type_and_describe(types):
    for lab, a in types.items():
        assert classify_type(a) == lab
        op = GROUP.ops[37]
        assert classify_type(apply_symmetry(a, op)) == lab
    assert classify_type(Assignment(tuple(range(12)))) is None
    assert describe(types[TypeLabel.parse("1")]).startswith("type 1: ")


def test_triangle_of_on_type_one():
    assert triangle_of(reference("1"), (0, 4, 7)).kind.value == "GoldenTriangle"

"""Constraint enumeration, checked against networkx subgraph matching and a group-theoretic count."""

from __future__ import annotations

from collections import Counter

import networkx as nx
import pytest
from networkx.algorithms import isomorphism as iso

from musical_icosahedron.assignment import (
    Family, TypeLabel, canonical_form, has_hexagon_symmetry, transpose_assignment,
)
from musical_icosahedron.polyhedron import build_graph
from musical_icosahedron.search import (
    ConstraintSet, chromatic_whole_tone, cyclicity_report, derive_reference_types,
    enumerate_assignments, enumerate_hexagon_symmetric, family_of, prohibition_search, reference,
)
from musical_icosahedron.tones import CHROMATIC, PYTHAGOREAN_CHAIN

# canonical tone words of the twelve labelled classes
FROZEN_TYPES = {
    "1": (0, 1, 2, 3, 11, 10, 9, 5, 4, 7, 8, 6),
    "2": (0, 1, 2, 11, 10, 9, 5, 4, 3, 7, 8, 6),
    "3": (0, 1, 3, 4, 8, 11, 10, 2, 5, 7, 9, 6),
    "4": (0, 1, 4, 8, 9, 11, 2, 3, 5, 7, 10, 6),
    "1'": (0, 2, 7, 10, 5, 9, 4, 11, 3, 8, 1, 6),
    "2'": (0, 2, 5, 10, 3, 7, 4, 9, 1, 8, 11, 6),
    "3'": (0, 4, 8, 5, 7, 9, 11, 1, 3, 10, 2, 6),
    "4'": (0, 3, 5, 7, 4, 8, 1, 10, 2, 9, 11, 6),
    "1*": (0, 2, 9, 10, 7, 11, 4, 1, 5, 8, 3, 6),
    "2*": (0, 1, 5, 2, 3, 10, 8, 9, 4, 7, 11, 6),
    "3*": (0, 4, 8, 7, 9, 11, 1, 3, 5, 10, 2, 6),
    "4*": (0, 1, 3, 5, 4, 8, 11, 10, 2, 7, 9, 6),
}


def _icosa() -> nx.Graph:
    return nx.Graph(build_graph().edges)


def _tone_graph(c: ConstraintSet) -> nx.Graph:
    t = nx.Graph()
    t.add_nodes_from(range(12))
    t.add_edges_from(tuple(e) for e in c.tone_edges())
    return t


def _monomorphisms(c: ConstraintSet) -> int:
    return sum(1 for _ in iso.GraphMatcher(_icosa(), _tone_graph(c)).subgraph_monomorphisms_iter())


@pytest.mark.parametrize("chain", [CHROMATIC, PYTHAGOREAN_CHAIN], ids=lambda c: c.name)
@pytest.mark.parametrize("root", ["C", "C#"])
def test_raw_counts_match_networkx(chain, root):
    c = chromatic_whole_tone(root, chain)
    res = enumerate_assignments(c)
    assert res.raw_count == _monomorphisms(c) == 960
    # the group acts freely, so every class has 120 members
    assert res.class_count == 8
    assert set(res.per_class.values()) == {120}


@pytest.mark.parametrize("chain", [CHROMATIC, PYTHAGOREAN_CHAIN], ids=lambda c: c.name)
@pytest.mark.parametrize("root", ["C", "C#"])
def test_symmetric_subset_has_two_classes(chain, root):
    c = chromatic_whole_tone(root, chain)
    res = enumerate_assignments(ConstraintSet(c.cycles, symmetry_required=True))
    assert (res.raw_count, res.class_count) == (240, 2)
    assert all(has_hexagon_symmetry(a) for a in res.assignments)


def test_open_chains_admit_more_classes():
    assert cyclicity_report() == {
        "chromatic+whole-tone:C": 8, "chromatic+whole-tone:C#": 8,
        "chromatic:open+whole-tone:C": 12, "chromatic:open+whole-tone:C#": 12,
        "pythagorean-chain+whole-tone:C": 8, "pythagorean-chain+whole-tone:C#": 8,
        "pythagorean-chain:open+whole-tone:C": 12, "pythagorean-chain:open+whole-tone:C#": 12,
    }


def test_prohibition_lemma_matches_networkx():
    res = prohibition_search()
    assert res.raw_count == 0 and res.class_count == 0
    # degree-4 circulant needs 4 neighbours per tone; still no embedding
    assert _monomorphisms(ConstraintSet(tuple(((x, (x + s) % 12), False)
                                              for x in range(12) for s in (1, 2)))) == 0


def test_prohibition_without_one_tone_is_still_empty():
    assert prohibition_search(drop_tone=0).raw_count == 0


def test_hexagon_symmetric_count_from_group_structure():
    # P_2 (tone t -> t+2, read on vertices) must be a symmetry with two 6-cycles.
    # Each such symmetry admits 12 placements of C and then 6 of C# (other cycle): 72 assignments.
    matcher = iso.GraphMatcher(_icosa(), _icosa())
    six_six = 0
    for m in matcher.isomorphisms_iter():
        seen, lengths = set(), []
        for v in range(12):
            if v not in seen:
                n, w = 0, v
                while w not in seen:
                    seen.add(w)
                    w = m[w]
                    n += 1
                lengths.append(n)
        six_six += sorted(lengths) == [6, 6]
    assert six_six == 20
    res = enumerate_hexagon_symmetric()
    assert res.raw_count == six_six * 72 == 1440
    assert res.class_count == 12
    assert set(res.per_class.values()) == {120}


def test_family_split():
    fams = Counter(family_of(rep) for rep in enumerate_hexagon_symmetric().representatives)
    assert fams == {Family.CHROMATIC: 4, Family.PYTHAGOREAN: 4, Family.EXCEPTIONAL: 4}


def test_reference_types_frozen():
    got = {str(lab): a.tone_at for lab, a in derive_reference_types().items()}
    assert got == FROZEN_TYPES
    assert all(canonical_form(reference(k)) == v for k, v in FROZEN_TYPES.items())


def test_semitone_raises():
    t = derive_reference_types()
    for fam in Family:
        one, two, three, four = (t[TypeLabel(fam, i)] for i in range(1, 5))
        assert canonical_form(transpose_assignment(one, 1)) == canonical_form(four)
        assert canonical_form(transpose_assignment(two, 1)) == canonical_form(three)


def test_enumeration_is_sorted_and_deterministic():
    c = chromatic_whole_tone("C")
    a, b = enumerate_assignments(c), enumerate_assignments(c)
    assert a.assignments == b.assignments
    keys = [(canonical_form(x), x) for x in a.assignments]
    assert keys == sorted(keys)
    assert [k for k, _ in a.classes] == sorted(k for k, _ in a.classes)


def test_constraint_validation():
    with pytest.raises(ValueError):
        ConstraintSet((((0, 1, 0), False),))
    over = ConstraintSet(tuple(((0, k), False) for k in range(1, 7)))
    assert not over.feasible()
    assert enumerate_assignments(over).raw_count == 0

from __future__ import annotations

import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from musical_icosahedron.assignment import ALL_LABELS, TypeLabel, apply_symmetry, figure_of, read_figure
from musical_icosahedron.polyhedron import PHI, Shape, build_graph
from musical_icosahedron.theorems import (
    RED_LINES, ROSTER, CheckResult, check_golden_theorem, check_self_duality_and_redlines,
    gregorian_name, literal_self_duality, major_minor_witnesses, normalized_scan, run_all,
)
from musical_icosahedron.tones import (
    MAJOR, MAJOR_TRIAD, MINOR, MINOR_TRIAD, WHOLE_TONE_C, WHOLE_TONE_CS, tone_name,
)

G = build_graph()
labels = st.sampled_from(ALL_LABELS)
pairs = st.tuples(st.integers(0, 11), st.integers(0, 11)).filter(lambda p: p[0] != p[1])


def _euclid_shape(a, tones) -> str:
    """Shape of a triad from raw vertex coordinates, independent of the chord metric."""
    X = G.coords
    e = min(np.linalg.norm(X[0] - X[v]) for v in range(1, 12))
    ratios = sorted(np.linalg.norm(X[a.vertex_of[s]] - X[a.vertex_of[t]]) / e
                    for s, t in itertools.combinations(tones, 2))
    if np.allclose(ratios, [1, PHI, PHI]):
        return "GoldenTriangle"
    if np.allclose(ratios, [1, 1, PHI]):
        return "GoldenGnomon"
    return "other"


@pytest.fixture(scope="module")
def report():
    return run_all()


def test_every_check_passes(report):
    assert [r.name for r in report.results] == [c.__name__.removeprefix("check_") for c in ROSTER]
    assert report.passed, report.failures
    assert report.summary() == {"checks": 13, "passed": 13, "failed": 0}


@pytest.mark.parametrize("label,triad,shape", [
    ("1", MAJOR_TRIAD, "GoldenTriangle"), ("4", MAJOR_TRIAD, "GoldenTriangle"),
    ("2", MINOR_TRIAD, "GoldenTriangle"), ("3", MINOR_TRIAD, "GoldenTriangle"),
    ("1'", MINOR_TRIAD, "GoldenGnomon"), ("4'", MINOR_TRIAD, "GoldenGnomon"),
    ("2'", MAJOR_TRIAD, "GoldenGnomon"), ("3'", MAJOR_TRIAD, "GoldenGnomon"),
])
def test_golden_theorems_against_coordinates(types, label, triad, shape):
    a = types[TypeLabel.parse(label)]
    assert [_euclid_shape(a, triad.at(x).tones) for x in range(12)] == [shape] * 12


def test_golden_theorem_is_selective(types):
    # the other triad quality is never golden in the same way
    a = types[TypeLabel.parse("1")]
    assert all(_euclid_shape(a, MINOR_TRIAD.at(x).tones) != "GoldenTriangle" for x in range(12))


@pytest.mark.parametrize("label,hexagon,hexagram", [
    ("1", [(4, 7)], [(7, 10)]), ("4", [(4, 7)], [(7, 10)]),
    ("2", [(3, 7)], [(7, 9)]), ("3", [(3, 7)], [(7, 9)]),
])
def test_uniqueness_scans(types, label, hexagon, hexagram):
    a = types[TypeLabel.parse(label)]
    hexagon_cls = WHOLE_TONE_C if label in ("1", "2") else WHOLE_TONE_CS
    hexagram_cls = WHOLE_TONE_CS if label in ("1", "2") else WHOLE_TONE_C
    raw, norm = normalized_scan(a, Shape.GOLDEN_TRIANGLE, hexagon_cls)
    assert norm == hexagon and len(raw) == 3
    assert normalized_scan(a, Shape.GOLDEN_TRIANGLE, hexagram_cls)[1] == hexagram


def test_major_minor_witnesses_are_two_fold(types):
    src, dst = types[TypeLabel.parse("1")], types[TypeLabel.parse("3")]
    found = major_minor_witnesses(src, dst, MAJOR, MINOR)
    assert [len(ws) for ws in found["witnesses"]] == [2] * 12
    # no single symmetry serves every root
    assert found["common"] == set()
    assert len(found["placements"]) == 1
    h, per_root = found["placements"][0]
    placed = apply_symmetry(dst, h)
    for x, op in enumerate(per_root):
        assert op.is_rotation and op.order == 2
        fig = apply_symmetry(figure_of(src, MAJOR.at(x)), op)
        assert set(read_figure(placed, fig)) == MINOR.at(x).tone_set()
        # tone sets match but the scale order never survives
        assert read_figure(placed, fig) != MINOR.at(x).tones


def test_gregorian_named_examples(types):
    a = types[TypeLabel.parse("1")]
    names = {f"{tone_name(r)}-{t.name}": "{}-{}".format(tone_name(gregorian_name(a, t, r)[1]),
                                                        gregorian_name(a, t, r)[0].name)
             for t, r in ((MAJOR, 0), (MAJOR, 1), (MINOR, 0), (MINOR, 1))}
    assert names == {"C-major": "C#-mixolydian", "C#-major": "C-lydian",
                     "C-minor": "C#-phrygian", "C#-minor": "C-dorian"}


def test_red_lines(types):
    g = build_graph()
    for name, (seq, residue) in RED_LINES.items():
        vs = types[TypeLabel.parse(name)].vertices(seq)
        assert all(g.adjacent(vs[i], vs[(i + 1) % 12]) for i in range(12))
        assert all((seq[(i + 1) % 12] - seq[i]) % 4 == residue for i in range(12))


def test_self_duality_table_and_literal_statement(types):
    r = check_self_duality_and_redlines(types)
    assert r.passed
    # the plain reading (majors on one whole-tone class as triangles, minors on the
    # other as gnomons) does not hold on any exceptional type
    assert r.details["literal_statement_failures"] == {"1*": 6, "2*": 6, "3*": 6, "4*": 6}
    a = types[TypeLabel.parse("1*")]
    assert literal_self_duality(a, swapped=False) == [MINOR_TRIAD.at(x).name for x in sorted(WHOLE_TONE_CS)]


def test_checks_deterministic():
    a = json.dumps(run_all().to_dict(), sort_keys=True)
    b = json.dumps(run_all().to_dict(), sort_keys=True)
    assert a == b


def test_corrupted_type_is_reported(types):
    broken = dict(types)
    one = TypeLabel.parse("1")
    broken[one] = types[one].swap(0, 6)
    r = check_golden_theorem(broken)
    assert not r.passed
    assert any(c.get("type") == "1" for c in r.counterexamples)


def test_crashing_check_is_a_failure(types):
    broken = dict(types)
    del broken[TypeLabel.parse("3*")]
    report = run_all(broken)
    assert not report.passed
    assert isinstance(report["self_duality_and_redlines"], CheckResult)


@settings(max_examples=24)
@given(labels, pairs)
def test_any_swap_breaks_verification(types, label, pair):
    broken = dict(types)
    broken[label] = types[label].swap(*pair)
    assert not run_all(broken).passed


@pytest.mark.slow
def test_every_single_swap_breaks_verification(types):
    survivors = []
    for label in ALL_LABELS:
        for x, y in itertools.combinations(range(12), 2):
            broken = dict(types)
            broken[label] = types[label].swap(x, y)
            if run_all(broken).passed:
                survivors.append((str(label), x, y))
    assert survivors == []

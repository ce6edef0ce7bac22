from __future__ import annotations

import json
import re

import pytest
from hypothesis import given, strategies as st

from musical_icosahedron.assignment import Assignment
from musical_icosahedron.interface import (
    CANVAS, INNER_R, OUTER_R, AssignmentDocument, DocumentError, Highlight, RenderSpec, UsageError,
    cli_main, document_from_dict, from_json, layout, parse_constraints, render, tone_below_c, to_json,
)
from musical_icosahedron.search import reference
from musical_icosahedron.tones import CHROMATIC, PYTHAGOREAN_CHAIN, parse_tone

assignments = st.permutations(range(12)).map(lambda p: Assignment(tuple(p)))


def _doc(**over) -> dict:
    d = AssignmentDocument.from_assignment(reference("1")).to_dict()
    d.update(over)
    return d


@given(assignments)
def test_json_round_trip(a):
    doc = AssignmentDocument.from_assignment(a)
    text = to_json(doc)
    back = from_json(text)
    assert back == doc
    assert back.to_assignment() == a
    assert to_json(back) == text


def test_type_documents(types):
    docs = [AssignmentDocument.from_assignment(a, lab) for lab, a in types.items()]
    back = from_json(to_json(docs))
    assert [d.type_label for d in back] == [str(lab) for lab in types]
    assert back[0].hexagon == ("C", "D", "E", "F#", "G#", "Bb")
    assert AssignmentDocument.from_assignment(Assignment(tuple(range(12)))).hexagon is None


@pytest.mark.parametrize("doc,field", [
    (_doc(vertices=["C"] * 12), "vertices"),
    (_doc(vertices=_doc()["vertices"][:11]), "vertices"),
    (_doc(vertices=_doc()["vertices"][:11] + ["H"]), "vertices[11]"),
    (_doc(schema_version="2"), "schema_version"),
    (_doc(type_label="9"), "type_label"),
    (_doc(hexagon=["C#", "D#", "F", "G", "A", "B"]), "hexagon"),
    (_doc(extra=1), "extra"),
    ([], "document"),
])
def test_document_rejections(doc, field):
    with pytest.raises(DocumentError) as err:
        document_from_dict(doc)
    assert err.value.field == field


def test_invalid_json():
    with pytest.raises(DocumentError):
        from_json("{not json")


def test_enharmonic_spellings_normalised():
    d = _doc()
    d["vertices"] = [{"C#": "Db", "Eb": "D#"}.get(v, v) for v in d["vertices"]]
    assert document_from_dict(d).vertices == tuple(_doc()["vertices"])


def _highlight_lines(svg: str) -> list[str]:
    return [ln for ln in svg.splitlines() if "data-chord" in ln]


def test_chromatic_highlight_is_edges_on_type_1():
    svg = render(RenderSpec(reference("1"), (Highlight(CHROMATIC.at(0).tones, True),)))
    lines = _highlight_lines(svg)
    assert len(lines) == 12
    assert all('data-chord="Edge"' in ln and "dasharray" not in ln for ln in lines)


def test_chromatic_highlight_is_dashed_middles_on_type_1p():
    svg = render(RenderSpec(reference("1'"), (Highlight(CHROMATIC.at(0).tones, True),)))
    lines = _highlight_lines(svg)
    assert len(lines) == 12
    assert all('data-chord="Middle"' in ln and 'stroke-dasharray="8,5"' in ln for ln in lines)


def test_chain_is_edges_on_type_1p():
    svg = render(RenderSpec(reference("1'"), (Highlight(PYTHAGOREAN_CHAIN.at(0).tones, True),)))
    assert all('data-chord="Edge"' in ln for ln in _highlight_lines(svg))


def test_render_is_deterministic_and_declares_layout():
    spec = RenderSpec(reference("2"), (Highlight((0, 3, 7)),), "type 2")
    a, b = render(spec), render(spec)
    assert a == b
    assert a.startswith('<?xml version="1.0" encoding="UTF-8"?>\n<!-- projection along the 3-fold axis')
    assert len(re.findall(r"<line ", a)) == 30 + 2
    dot = render(RenderSpec(reference("2"), fmt="dot"))
    assert dot.count(" -- ") == 30
    with pytest.raises(ValueError):
        render(RenderSpec(reference("2"), fmt="png"))


def test_layout_rings(types):
    for lab, a in types.items():
        pos = layout(a)
        radii = sorted(round(((x - CANVAS / 2) ** 2 + (y - CANVAS / 2) ** 2) ** 0.5, 6) for x, y in pos.values())
        assert radii == [INNER_R] * 6 + [OUTER_R] * 6
        assert len(set(pos.values())) == 12
        # C is drawn at the top of its ring: outer when it is on the hexagon
        r = OUTER_R if lab.index in (1, 2) else INNER_R
        assert pos[a.vertex_of[0]] == pytest.approx((CANVAS / 2, CANVAS / 2 - r))


@pytest.mark.parametrize("label,tone", [
    ("1", "C#"), ("2", "B"), ("1'", "G"), ("2'", "F"), ("1*", "A"), ("2*", "Eb"),
])
def test_tone_below_c(label, tone):
    assert tone_below_c(reference(label)) == parse_tone(tone)


def test_parse_constraints():
    c = parse_constraints("chromatic, wholetone:C#")
    assert [len(seq) for seq, _ in c.cycles] == [12, 6]
    assert all(cyc for _, cyc in c.cycles) and not c.symmetry_required
    c = parse_constraints("pythagorean:open,wholetone:Db:open,hexsym")
    assert [cyc for _, cyc in c.cycles] == [False, False] and c.symmetry_required
    assert c.cycles[1][0][0] == 1
    for bad in ("", "diatonic", "wholetone", "wholetone:H", "chromatic:C"):
        with pytest.raises(UsageError):
            parse_constraints(bad)


def test_cli_classify(capsys):
    assert cli_main(["classify", "--type", "1", "C", "E", "G"]) == 0
    assert capsys.readouterr().out == "GoldenTriangle\n"
    assert cli_main(["classify", "--type", "1'", "--apex", "C", "Eb", "G"]) == 0
    assert capsys.readouterr().out.startswith("GoldenGnomon apex=")


@pytest.mark.parametrize("argv", [
    ["classify", "--type", "7", "C", "E", "G"],
    ["classify", "--type", "1", "C", "E", "H"],
    ["classify", "--type", "1", "C", "C", "G"],
    ["enumerate", "--constraints", "dorian"],
    ["render", "--type", "1", "--scale", "bebop", "-o", "x.svg"],
    ["generalize", "--base", "c-lydian", "--gen", "first"],
    [],
])
def test_cli_usage_errors(argv, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert cli_main(argv) == 2


def test_cli_enumerate(capsys):
    assert cli_main(["enumerate", "--constraints", "chromatic,wholetone:C,hexsym"]) == 0
    docs = json.loads(capsys.readouterr().out)
    assert sorted(d["type_label"] for d in docs) == ["1", "2"]
    assert cli_main(["enumerate", "--constraints", "chromatic,wholetone:C"]) == 0
    assert len(json.loads(capsys.readouterr().out)) == 8


def test_cli_render_and_io_error(tmp_path):
    out = tmp_path / "t.svg"
    assert cli_main(["render", "--type", "1", "--scale", "major", "--root", "C", "-o", str(out)]) == 0
    assert out.read_text().count("data-chord") == 6
    dot = tmp_path / "t.dot"
    assert cli_main(["render", "--type", "1", "-o", str(dot)]) == 0
    assert dot.read_text().startswith("// projection")
    assert cli_main(["render", "--type", "1", "-o", str(tmp_path / "missing" / "t.svg")]) == 1


def test_cli_generalize(capsys):
    assert cli_main(["generalize", "--base", "c-minor", "--gen", "first"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "C-minor first generalization on type 2"
    assert len(out) == 11


def test_cli_types_and_report(capsys, tmp_path):
    assert cli_main(["types"]) == 0
    assert len(json.loads(capsys.readouterr().out)) == 12
    path = tmp_path / "report.json"
    assert cli_main(["report", "-o", str(path)]) == 0
    data = json.loads(path.read_text())
    assert data["summary"]["passed"] == data["summary"]["checks"]


def test_cli_verify(capsys):
    assert cli_main(["verify"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1] == "13/13 checks passed"

"""Major and minor triads as golden triangles; writes an SVG of type 1."""

import sys

from musical_icosahedron import reference, triangle_of
from musical_icosahedron.interface import Highlight, RenderSpec, render
from musical_icosahedron.tones import CHROMATIC, MAJOR_TRIAD, MINOR_TRIAD, tone_name

SHORT = {"Face": "face", "LargeEquilateral": "large", "GoldenTriangle": "tri",
         "GoldenGnomon": "gnomon", "Scalene": "scalene"}

for label in ("1", "2", "1'", "2'"):
    a = reference(label)
    print(f"type {label}")
    for tmpl in (MAJOR_TRIAD, MINOR_TRIAD):
        kinds = [triangle_of(a, tmpl.at(x).tones).kind.value for x in range(12)]
        print(f"  {tmpl.name:<12}" + " ".join(f"{tone_name(x)}:{SHORT[k]}" for x, k in enumerate(kinds)))

out = sys.argv[1] if len(sys.argv) > 1 else "type1.svg"
spec = RenderSpec(reference("1"), (Highlight(CHROMATIC.at(0).tones, True, label="chromatic"),
                                   Highlight(MAJOR_TRIAD.at(0).tones, True, "#1f77b4", "C-major")),
                  "type 1")
with open(out, "w", encoding="utf-8") as fh:
    fh.write(render(spec))
print("wrote", out)

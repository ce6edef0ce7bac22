"""Spatial inversion turns major/minor scales into church modes; all checks at once."""

from musical_icosahedron import reference, run_all
from musical_icosahedron.assignment import figure_of, read_figure, spatial_inversion
from musical_icosahedron.theorems import gregorian_name
from musical_icosahedron.tones import MAJOR, MINOR, format_tones, tone_name

a = reference("1")
for tmpl in (MAJOR, MINOR):
    for x in range(12):
        fig = figure_of(a, tmpl.at(x))
        read = read_figure(a, spatial_inversion(fig))
        mode, root = gregorian_name(a, tmpl, x)
        print(f"  {tone_name(x):>2}-{tmpl.name:<6} -> {format_tones(sorted(read)):<24} "
              f"{tone_name(root)}-{mode.name}")

report = run_all()
print()
for r in report.results:
    print(f"{'PASS' if r.passed else 'FAIL'} {r.name}")

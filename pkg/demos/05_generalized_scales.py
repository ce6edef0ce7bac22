"""Generalized major/minor scales from the ten symmetries fixing C."""

from musical_icosahedron.generalize import golden_triads, reconcile_all, stabilizer_orbit_scales

for base in ("c-major", "c-minor"):
    for gen in ("first", "second"):
        fam = stabilizer_orbit_scales(base, gen)
        print(f"{fam.base}, {gen} generation (type {fam.source})")
        for e in fam.entries:
            print("  ", e)
        tri = golden_triads("chromatic", base.removeprefix("c-"), gen)
        print(f"   triad patterns: {', '.join(tri.pattern_names())}  ({len(tri.triads)} triads)\n")

for r in reconcile_all():
    print(f"{'PASS' if r.passed else 'FAIL'} {r.name}")

"""Enumerate hexagon-symmetric assignments and name the twelve classes."""

from musical_icosahedron import derive_reference_types, enumerate_hexagon_symmetric
from musical_icosahedron.assignment import describe, hexagon_partition
from musical_icosahedron.search import chromatic_whole_tone, enumerate_assignments
from musical_icosahedron.tones import format_tones

res = enumerate_hexagon_symmetric()
print(f"{res.raw_count} assignments with the whole-tone symmetry, {res.class_count} classes")

for label, a in derive_reference_types().items():
    hexagon, _ = hexagon_partition(a)
    print(f"  {str(label):<3} hexagon {format_tones(sorted(hexagon)):<22} {describe(a).split(': ')[1]}")

# without the symmetry the chromatic + whole-tone condition leaves more classes
c = chromatic_whole_tone("C")
plain = enumerate_assignments(c)
print(f"\nchromatic + whole-tone(C), no symmetry required: {plain.raw_count} assignments, "
      f"{plain.class_count} classes")

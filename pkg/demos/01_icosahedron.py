"""The icosahedron as a graph: chord kinds, triangle shapes and the symmetry group."""

from collections import Counter
from itertools import combinations

from musical_icosahedron import automorphism_group, build_graph, classify_triangle
from musical_icosahedron.polyhedron import golden_rectangles

g = build_graph()
print("vertices 0 (north pole), 1-5 upper ring, 6-10 lower ring, 11 (south pole)")
print("edges:", len(g.edges), " faces:", len(g.faces))

census = Counter(classify_triangle(g, t).kind.value for t in combinations(range(12), 3))
print("\nshapes of the 220 vertex triples")
for kind, n in census.items():
    print(f"  {kind:<18}{n}")
print("golden rectangles:", len(golden_rectangles(g)))

group = automorphism_group()
print(f"\nsymmetries: {len(group)} ({len(group.rotations)} rotations)")
orders = Counter((op.order, op.is_rotation) for op in group)
for (order, rot), n in sorted(orders.items()):
    print(f"  order {order:>2} {'rotation' if rot else 'improper':<9} x{n}")

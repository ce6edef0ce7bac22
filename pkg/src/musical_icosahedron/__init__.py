"""
Musical icosahedra: the twelve pitch classes placed on the vertices of a
regular icosahedron, with exact enumeration and structural checks.
"""

from .assignment import (
    Assignment, Family, Figure, TypeLabel, apply_symmetry, canonical_form, classify_type, figure_of,
    has_hexagon_symmetry, hexagon_partition, read_figure, spatial_inversion, transpose_assignment,
    triangle_of,
)
from .polyhedron import (
    ChordKind, Shape, SymmetryGroup, SymmetryOp, automorphism_group, build_graph, chord_kind,
    classify_triangle, is_golden_rectangle,
)
from .search import (
    ConstraintSet, derive_reference_types, enumerate_assignments, enumerate_hexagon_symmetric,
    prohibition_search, reference,
)
from .theorems import CheckResult, VerificationReport, run_all

__version__ = "0.1.0"

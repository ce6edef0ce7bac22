"""
The regular icosahedron as a combinatorial object.

Vertex numbering is fixed: vertex 0 is the north pole, 1..5 the upper
ring, 6..10 the lower ring and 11 the south pole.  Everything here is
integer arithmetic on that graph; the golden-ratio coordinates are only
used once, at build time, to orient the rotation system.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import cache, cached_property
from typing import Iterable, Sequence

import numpy as np

PHI = (1 + 5 ** 0.5) / 2
N = 12


class DegenerateError(ValueError):
    """Raised when a pair/triple/quad repeats a vertex."""


class ChordKind(str, Enum):
    EDGE = "Edge"
    MIDDLE = "Middle"
    DIAMETER = "Diameter"


_KIND_BY_DIST = {1: ChordKind.EDGE, 2: ChordKind.MIDDLE, 3: ChordKind.DIAMETER}


class Shape(str, Enum):
    FACE = "Face"
    LARGE_EQUILATERAL = "LargeEquilateral"
    GOLDEN_TRIANGLE = "GoldenTriangle"
    GOLDEN_GNOMON = "GoldenGnomon"
    SCALENE = "Scalene"


@dataclass(frozen=True)
class TriangleKind:
    kind: Shape
    apex: int | None = None

    def __str__(self):
        return self.kind.value


@dataclass(frozen=True)
class IcosaGraph:
    adjacency: tuple[frozenset[int], ...]
    opposite: tuple[int, ...]
    distance: np.ndarray = field(compare=False, repr=False)
    faces: tuple[tuple[int, int, int], ...]
    rotation_system: tuple[tuple[int, ...], ...]
    coords: np.ndarray = field(compare=False, repr=False)

    @property
    def vertices(self) -> range:
        return range(N)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(N) for v in sorted(self.adjacency[u]) if u < v)

    def dist(self, u: int, v: int) -> int:
        return int(self.distance[u, v])

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]


def _upper_lower_edges() -> set[frozenset[int]]:
    edges = set()
    for i in range(1, 6):
        edges.add(frozenset((0, i)))
        edges.add(frozenset((i, i % 5 + 1)))
        edges.add(frozenset((i + 5, (i % 5) + 6)))
        edges.add(frozenset((i, i + 5)))
        edges.add(frozenset((i, (i % 5) + 6)))
        edges.add(frozenset((11, i + 5)))
    return edges


def _bfs_distances(adj: Sequence[frozenset[int]]) -> np.ndarray:
    dist = np.full((N, N), -1, dtype=np.int8)
    for s in range(N):
        dist[s, s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if dist[s, w] < 0:
                        dist[s, w] = d
                        nxt.append(w)
            frontier = nxt
    return dist


def _standard_coords() -> np.ndarray:
    base = [(0.0, a, b * PHI) for a in (-1, 1) for b in (-1, 1)]
    pts = [np.roll(np.array(p), r) for r in range(3) for p in base]
    return np.array(pts)


def _isomorphism(adj_a, adj_b) -> list[int]:
    """First graph isomorphism a -> b found by index-ordered backtracking."""
    m = [-1] * N
    used = [False] * N

    def extend(i):
        if i == N:
            return True
        for cand in range(N):
            if used[cand]:
                continue
            if any((m[j] in adj_b[cand]) != (j in adj_a[i]) for j in range(i)):
                continue
            m[i] = cand
            used[cand] = True
            if extend(i + 1):
                return True
            used[cand] = False
        m[i] = -1
        return False

    if not extend(0):
        raise AssertionError("constructed graph is not an icosahedron")
    return m


def _rotation_system(adj, coords) -> tuple[tuple[int, ...], ...]:
    # counterclockwise seen from outside, starting at the smallest neighbour
    rot = []
    for v in range(N):
        n = coords[v] / np.linalg.norm(coords[v])
        ref = coords[min(adj[v])] - coords[v]
        e1 = ref - n * (ref @ n)
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(n, e1)
        ang = {}
        for w in adj[v]:
            d = coords[w] - coords[v]
            ang[w] = np.arctan2(d @ e2, d @ e1) % (2 * np.pi)
        rot.append(tuple(sorted(adj[v], key=ang.__getitem__)))
    return tuple(rot)


@cache
def build_graph() -> IcosaGraph:
    edges = _upper_lower_edges()
    adj = [set() for _ in range(N)]
    for e in edges:
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    adj = tuple(frozenset(s) for s in adj)
    dist = _bfs_distances(adj)
    dist.setflags(write=False)
    opposite = tuple(int(np.flatnonzero(dist[v] == 3)[0]) for v in range(N))
    faces = tuple(
        t for t in itertools.combinations(range(N), 3)
        if t[1] in adj[t[0]] and t[2] in adj[t[0]] and t[2] in adj[t[1]]
    )

    std = _standard_coords()
    std_adj = []
    for i in range(N):
        d2 = ((std - std[i]) ** 2).sum(axis=1)
        std_adj.append(frozenset(int(j) for j in np.flatnonzero(np.isclose(d2, 4.0))))
    iso = _isomorphism(adj, std_adj)
    coords = std[iso]
    coords.setflags(write=False)

    g = IcosaGraph(
        adjacency=adj,
        opposite=opposite,
        distance=dist,
        faces=faces,
        rotation_system=_rotation_system(adj, coords),
        coords=coords,
    )
    _self_check(g)
    return g


def _self_check(g: IcosaGraph) -> None:
    assert all(len(a) == 5 for a in g.adjacency)
    assert len(g.edges) == 30 and len(g.faces) == 20
    for v in range(N):
        counts = np.bincount(g.distance[v], minlength=4)
        assert tuple(counts) == (1, 5, 5, 1), counts
        assert g.opposite[g.opposite[v]] == v


def chord_kind(g: IcosaGraph, u: int, v: int) -> ChordKind:
    if u == v:
        raise DegenerateError(f"degenerate pair ({u}, {v})")
    return _KIND_BY_DIST[g.dist(u, v)]


_SHAPES = {
    (3, 0, 0): Shape.FACE,
    (0, 3, 0): Shape.LARGE_EQUILATERAL,
    (1, 2, 0): Shape.GOLDEN_TRIANGLE,
    (2, 1, 0): Shape.GOLDEN_GNOMON,
    (1, 1, 1): Shape.SCALENE,
}


def classify_triangle(g: IcosaGraph, t: Iterable[int]) -> TriangleKind:
    """Classify a vertex triple by the multiset of its three chord kinds.

    Golden triangles (two Middle sides) and gnomons (two Edge sides) also
    carry their apex, the vertex shared by the two equal sides.
    """
    a, b, c = t
    if len({a, b, c}) < 3:
        raise DegenerateError(f"degenerate triple {tuple(t)}")
    ds = {(a, b): g.dist(a, b), (b, c): g.dist(b, c), (a, c): g.dist(a, c)}
    counts = tuple(sum(1 for d in ds.values() if d == k) for k in (1, 2, 3))
    shape = _SHAPES.get(counts)
    if shape is None:
        raise AssertionError(f"impossible chord multiset {counts}")
    apex = None
    if shape in (Shape.GOLDEN_TRIANGLE, Shape.GOLDEN_GNOMON):
        want = 2 if shape is Shape.GOLDEN_TRIANGLE else 1
        (x, y), (p, q) = [pair for pair, d in ds.items() if d == want]
        apex = ({x, y} & {p, q}).pop()
    return TriangleKind(shape, apex)


def is_golden_rectangle(g: IcosaGraph, q: Iterable[int]) -> bool:
    q = tuple(q)
    if len(set(q)) != 4 or len(q) != 4:
        raise DegenerateError(f"degenerate quadruple {q}")
    diam = [(u, v) for u, v in itertools.combinations(q, 2) if g.dist(u, v) == 3]
    if len(diam) != 2:
        return False
    (u, u2), (w, w2) = diam
    cycle = (u, w, u2, w2)
    kinds = [g.dist(cycle[i], cycle[(i + 1) % 4]) for i in range(4)]
    return kinds in ([1, 2, 1, 2], [2, 1, 2, 1])


def golden_rectangles(g: IcosaGraph) -> list[frozenset[int]]:
    return [frozenset(q) for q in itertools.combinations(range(N), 4) if is_golden_rectangle(g, q)]


# --- symmetry group -------------------------------------------------------


@dataclass(frozen=True, order=True)
class SymmetryOp:
    """A vertex permutation; ``perm[v]`` is the image of ``v``.

    ``a * b`` applies ``b`` first.
    """

    perm: tuple[int, ...]
    is_rotation: bool = field(compare=False)

    def __call__(self, v: int) -> int:
        return self.perm[v]

    def __mul__(self, other: SymmetryOp) -> SymmetryOp:
        return SymmetryOp(
            tuple(self.perm[i] for i in other.perm),
            self.is_rotation == other.is_rotation,
        )

    def inverse(self) -> SymmetryOp:
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return SymmetryOp(tuple(inv), self.is_rotation)

    def __pow__(self, k: int) -> SymmetryOp:
        out = identity_op(len(self.perm))
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            out = base * out
        return out

    @cached_property
    def order(self) -> int:
        p = self
        k = 1
        while any(i != j for i, j in enumerate(p.perm)):
            p = self * p
            k += 1
        return k

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))


def identity_op(n: int = N) -> SymmetryOp:
    return SymmetryOp(tuple(range(n)), True)


def preserves_adjacency(g: IcosaGraph, perm: Sequence[int]) -> bool:
    return all(perm[v] in g.adjacency[perm[u]] for u, v in g.edges)


def orientation(g: IcosaGraph, perm: Sequence[int]) -> bool | None:
    """True if ``perm`` keeps every cyclic neighbour order, False if it
    reverses all of them, None if it is not an automorphism or mixes both."""
    signs = set()
    for v in range(N):
        image = [perm[w] for w in g.rotation_system[v]]
        target = g.rotation_system[perm[v]]
        if sorted(image) != sorted(target):
            return None
        k = target.index(image[0])
        fwd = target[k:] + target[:k]
        rev = (target[k],) + tuple(target[(k - i) % 5] for i in range(1, 5))
        if tuple(image) == fwd:
            signs.add(True)
        elif tuple(image) == rev:
            signs.add(False)
        else:
            return None
    return signs.pop() if len(signs) == 1 else None


def find_automorphisms(g: IcosaGraph) -> list[tuple[int, ...]]:
    """All adjacency-preserving vertex permutations, by backtracking.

    Vertices are mapped in index order; each candidate must be consistent
    with every already-mapped vertex (adjacent iff images adjacent).
    """
    found = []
    m = [-1] * N
    used = [False] * N
    order = list(range(N))

    def extend(i):
        if i == N:
            found.append(tuple(m))
            return
        v = order[i]
        for cand in range(N):
            if used[cand]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if (m[u] in g.adjacency[cand]) != (u in g.adjacency[v]):
                    ok = False
                    break
            if not ok:
                continue
            m[v] = cand
            used[cand] = True
            extend(i + 1)
            used[cand] = False
            m[v] = -1

    extend(0)
    return found


@dataclass(frozen=True)
class SymmetryGroup:
    ops: tuple[SymmetryOp, ...]
    generators: dict[str, SymmetryOp] = field(compare=False)

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def __contains__(self, perm) -> bool:
        if isinstance(perm, SymmetryOp):
            perm = perm.perm
        return tuple(perm) in self._by_perm

    @cached_property
    def _by_perm(self) -> dict[tuple[int, ...], SymmetryOp]:
        return {op.perm: op for op in self.ops}

    def lookup(self, perm: Sequence[int]) -> SymmetryOp:
        return self._by_perm[tuple(perm)]

    @property
    def rotations(self) -> tuple[SymmetryOp, ...]:
        return tuple(op for op in self.ops if op.is_rotation)

    @property
    def inversion(self) -> SymmetryOp:
        return self._by_perm[build_graph().opposite]

    def stabilizer(self, v: int) -> tuple[SymmetryOp, ...]:
        return tuple(op for op in self.ops if op.perm[v] == v)

    @cached_property
    def perm_array(self) -> np.ndarray:
        arr = np.array([op.perm for op in self.ops], dtype=np.int64)
        arr.setflags(write=False)
        return arr


def word_list(c5: SymmetryOp, c3: SymmetryOp, c2: SymmetryOp, m: SymmetryOp) -> list[SymmetryOp]:
    """The 120 products {Y, M*Y} of the classical listing.

    Y = {X, C3 X, C3^2 X, C2 X, C2 C3 X, C2 C3^2 X, C5 C3 X, C5^3 C3 X,
         C5^4 C3 X, C5 C3 C2 X, C5^2 C3 C2 X, C5^4 C3 C2 X},
    X = {E, C5, ..., C5^4}.
    """
    e = identity_op()
    prefixes = [
        e, c3, c3 ** 2, c2, c2 * c3, c2 * c3 ** 2,
        c5 * c3, c5 ** 3 * c3, c5 ** 4 * c3,
        c5 * c3 * c2, c5 ** 2 * c3 * c2, c5 ** 4 * c3 * c2,
    ]
    xs = [c5 ** k for k in range(5)]
    ys = [p * x for p in prefixes for x in xs]
    return ys + [m * y for y in ys]


def _pick_generators(g: IcosaGraph, ops: Sequence[SymmetryOp]) -> dict[str, SymmetryOp]:
    top, first = 0, min(g.adjacency[0])
    c5 = next(
        op for op in ops
        if op.is_rotation and op.perm[top] == top and op.perm[first] == g.rotation_system[top][1]
    )
    mirrors = [op for op in ops if not op.is_rotation and op.order == 2 and op.perm[top] == top]
    c3s = [op for op in ops if op.is_rotation and op.order == 3]
    c2s = [op for op in ops if op.is_rotation and op.order == 2]
    for m in mirrors:
        for c3 in c3s:
            for c2 in c2s:
                words = word_list(c5, c3, c2, m)
                if len({w.perm for w in words}) == 120:
                    return {"C5": c5, "C3": c3, "C2": c2, "M": m}
    raise AssertionError("no generator tuple regenerates the group")


@cache
def automorphism_group(g: IcosaGraph | None = None) -> SymmetryGroup:
    g = g or build_graph()
    ops = []
    for perm in find_automorphisms(g):
        rot = orientation(g, perm)
        assert rot is not None
        ops.append(SymmetryOp(perm, rot))
    ops.sort()
    by_perm = {op.perm for op in ops}
    for a in ops:
        for b in ops:
            assert (a * b).perm in by_perm
    return SymmetryGroup(tuple(ops), _pick_generators(g, ops))

"""Bounded generalized permutahedra as tight submodular support functions.

A bounded generalized permutahedron is stored by the exact rational values
of its support function on all subsets of the ground set together with its
vertex set, which is recovered by the greedy rule (prefix differences along
a linear order).  All arithmetic is exact; faces are keyed by their sorted
vertex lists.

The composition/face dictionary follows the convention that earlier blocks
get larger functional weights, so the face of the all-singleton composition
of an order w is the greedy vertex of w.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import CapExceeded, GroundMismatch
from .ground import (
    Album,
    GroundSet,
    LinearOrder,
    Preposet,
    SetComposition,
    closure_album,
    enumerate_compositions,
    linear_orders,
    preposet_from_album,
)
from .matroids import Matroid

ALBUM_CAP = 7           # ordered Bell(7) = 47293 compositions
CONSTRUCTION_CAP = 8    # vertex enumeration walks all n! orders


class SetFn:
    """An exact rational set function with z(empty) = 0 on a ground set."""

    __slots__ = ("ground", "_values")

    def __init__(self, ground: GroundSet, values: dict):
        self.ground = ground
        vals = {frozenset(): Fraction(0)}
        for s, v in values.items():
            key = frozenset(s)
            if not key <= frozenset(range(ground.n)):
                raise ValueError("set function key outside the ground set")
            vals[key] = Fraction(v)
        for r in range(1, ground.n + 1):
            for c in itertools.combinations(range(ground.n), r):
                if frozenset(c) not in vals:
                    raise ValueError(f"set function missing value on {c}")
        if vals[frozenset()] != 0:
            raise ValueError("set function must vanish on the empty set")
        self._values = vals

    @classmethod
    def from_callable(cls, ground: GroundSet, fn) -> "SetFn":
        values = {}
        for r in range(1, ground.n + 1):
            for c in itertools.combinations(range(ground.n), r):
                values[frozenset(c)] = Fraction(fn(frozenset(c)))
        return cls(ground, values)

    def __call__(self, subset) -> Fraction:
        return self._values[frozenset(subset)]

    def items(self):
        return sorted(self._values.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))

    def __eq__(self, other):
        return (
            isinstance(other, SetFn)
            and self.ground == other.ground
            and self._values == other._values
        )

    def restrict(self, subset) -> "SetFn":
        s = frozenset(subset)
        sub = self.ground.subset(s)
        back = {sub.index(self.ground.label(i)): i for i in s}
        return SetFn.from_callable(
            sub, lambda t: self(frozenset(back[i] for i in t))
        )

    def contract(self, subset) -> "SetFn":
        s = frozenset(subset)
        rest = frozenset(range(self.ground.n)) - s
        sub = self.ground.subset(rest)
        back = {sub.index(self.ground.label(i)): i for i in rest}
        base = self(s)
        return SetFn.from_callable(
            sub, lambda t: self(frozenset(back[i] for i in t) | s) - base
        )


def validate_submodular(z: SetFn):
    """Local exchange check; returns (ok, witness) with a violating triple."""
    n = z.ground.n
    ground = frozenset(range(n))
    for r in range(n):
        for s in itertools.combinations(range(n), r):
            s = frozenset(s)
            outside = sorted(ground - s)
            for a, b in itertools.combinations(outside, 2):
                lhs = z(s | {a}) + z(s | {b})
                rhs = z(s | {a, b}) + z(s)
                if lhs < rhs:
                    return False, (s, a, b)
    return True, None


class GenPermutahedron:
    """A bounded generalized permutahedron with tight support function."""

    __slots__ = ("ground", "support", "vertices", "_faces_cache", "_dim")

    def __init__(self, ground: GroundSet, support: SetFn, vertices: tuple):
        self.ground = ground
        self.support = support
        self.vertices = vertices
        self._faces_cache = None
        self._dim = None

    @classmethod
    def from_support(cls, z: SetFn) -> "GenPermutahedron":
        """Build from a support function, validating submodularity and
        tightness (the greedy vertex hull must reproduce the input)."""
        g = z.ground
        if g.n > CONSTRUCTION_CAP:
            raise CapExceeded("vertex enumeration", g.n, CONSTRUCTION_CAP)
        ok, witness = validate_submodular(z)
        if not ok:
            raise ValueError(f"support function is not submodular; witness {witness}")
        verts = set()
        for w in linear_orders(g):
            verts.add(_greedy(z, w))
        vertices = tuple(sorted(verts))
        for s in range(1, g.n + 1):
            for c in itertools.combinations(range(g.n), s):
                tight = max(sum(v[i] for i in c) for v in vertices) if vertices else Fraction(0)
                if tight != z(frozenset(c)):
                    raise ValueError(
                        f"support function is not tight on {c}: "
                        f"declared {z(frozenset(c))}, hull gives {tight}"
                    )
        return cls(g, z, vertices)

    @classmethod
    def from_vertices_of(cls, parent: "GenPermutahedron", vertices) -> "GenPermutahedron":
        """A face of ``parent`` promoted to a polytope on the same ground."""
        verts = tuple(sorted(tuple(v) for v in vertices))
        g = parent.ground
        if g.n == 0:
            return cls(g, SetFn(g, {}), verts)
        z = SetFn.from_callable(
            g, lambda s: max(sum(v[i] for i in s) for v in verts)
        )
        return cls(g, z, verts)

    @classmethod
    def point(cls) -> "GenPermutahedron":
        """The unit: the unique polytope on the empty ground set."""
        g = GroundSet(())
        return cls(g, SetFn(g, {}), ((),))

    # equality is by ambient ground set and exact vertex list
    def __eq__(self, other):
        return (
            isinstance(other, GenPermutahedron)
            and self.ground == other.ground
            and self.vertices == other.vertices
        )

    def __hash__(self):
        return hash((self.ground.labels, self.vertices))

    def key(self):
        return (self.ground.labels, self.vertices)

    def __repr__(self):
        pts = ",".join("(" + ",".join(str(x) for x in v) + ")" for v in self.vertices)
        return f"GP[{''.join(self.ground.labels)}]{{{pts}}}"

    def dim(self) -> int:
        if self._dim is None:
            self._dim = _affine_rank(self.vertices)
        return self._dim

    def greedy_vertex(self, w: LinearOrder) -> tuple:
        if w.ground != self.ground:
            raise GroundMismatch("greedy vertex: different ground sets")
        return _greedy(self.support, w)

    def face_of_composition(self, a: SetComposition) -> "GPFace":
        if a.ground != self.ground:
            raise GroundMismatch("face of composition: different ground sets")
        if a.k == 0:
            return GPFace(self, self.vertices)
        bi = a.block_index()
        weights = [a.k - bi[i] for i in range(self.ground.n)]
        best = None
        argmax = []
        for v in self.vertices:
            val = sum(wt * x for wt, x in zip(weights, v))
            if best is None or val > best:
                best = val
                argmax = [v]
            elif val == best:
                argmax.append(v)
        return GPFace(self, tuple(sorted(argmax)))

    def faces(self, cap: int = ALBUM_CAP) -> dict:
        """Map from face vertex tuples to the list of attaining compositions."""
        if self._faces_cache is None:
            if self.ground.n > cap:
                raise CapExceeded("face enumeration", self.ground.n, cap)
            index: dict[tuple, list[SetComposition]] = {}
            for a in enumerate_compositions(self.ground, cap):
                f = self.face_of_composition(a)
                index.setdefault(f.vertices, []).append(a)
            if self.ground.n == 0:
                index.setdefault(self.vertices, [])
            self._faces_cache = index
        return self._faces_cache

    def normal_preposet(self, face_vertices) -> Preposet:
        """The preposet whose closure album indexes the braid cones in the
        closed normal cone of the face."""
        key = tuple(sorted(tuple(v) for v in face_vertices))
        strict = self.faces().get(key)
        if not strict:
            raise ValueError("vertex set is not a face (no composition attains it)")
        return preposet_from_album(strict)

    def albums_of_face(self, face_vertices) -> tuple[Album, Album, Album]:
        """(strict, closed, boundary) albums of a face."""
        key = tuple(sorted(tuple(v) for v in face_vertices))
        index = self.faces()
        if key not in index:
            raise ValueError("vertex set is not a face (no composition attains it)")
        face_set = set(key)
        strict = index[key]
        closed = [
            a
            for verts, comps in index.items()
            if face_set <= set(verts)
            for a in comps
        ]
        strict_album = Album(self.ground, frozenset(strict))
        closed_album = Album(self.ground, frozenset(closed))
        boundary = Album(self.ground, closed_album.members - strict_album.members)
        return strict_album, closed_album, boundary

    def restrict(self, subset) -> "GenPermutahedron":
        return _restrict(self, frozenset(subset))

    def contract(self, subset) -> "GenPermutahedron":
        return _contract(self, frozenset(subset))

    def product(self, other: "GenPermutahedron") -> "GenPermutahedron":
        return _product(self, other)


@dataclass(frozen=True)
class GPFace:
    """A face of a generalized permutahedron, keyed by its vertex list."""

    parent: GenPermutahedron
    vertices: tuple

    def normal(self) -> Preposet:
        return self.parent.normal_preposet(self.vertices)

    def albums(self) -> tuple[Album, Album, Album]:
        return self.parent.albums_of_face(self.vertices)

    def as_polytope(self) -> GenPermutahedron:
        return GenPermutahedron.from_vertices_of(self.parent, self.vertices)

    def dim(self) -> int:
        return _affine_rank(self.vertices)

    def __repr__(self):
        pts = ",".join("(" + ",".join(str(x) for x in v) + ")" for v in self.vertices)
        return f"GPFace{{{pts}}}"


def _greedy(z: SetFn, w: LinearOrder) -> tuple:
    coords = [Fraction(0)] * w.n
    prefix: frozenset[int] = frozenset()
    prev = Fraction(0)
    for i in w.word:
        cur = z(prefix | {i})
        coords[i] = cur - prev
        prefix = prefix | {i}
        prev = cur
    return tuple(coords)


def _affine_rank(vertices) -> int:
    verts = [tuple(v) for v in vertices]
    if len(verts) <= 1:
        return 0
    v0 = verts[0]
    rows = [[x - y for x, y in zip(v, v0)] for v in verts[1:]]
    rank = 0
    cols = len(v0)
    pivot_col = 0
    while rows and pivot_col < cols:
        pivot = next((r for r in range(len(rows)) if rows[r][pivot_col] != 0), None)
        if pivot is None:
            pivot_col += 1
            continue
        rows[0], rows[pivot] = rows[pivot], rows[0]
        head = rows[0]
        scale = head[pivot_col]
        for r in rows[1:]:
            if r[pivot_col] != 0:
                factor = r[pivot_col] / scale
                for c in range(pivot_col, cols):
                    r[c] -= factor * head[c]
        rows = rows[1:]
        rank += 1
        pivot_col += 1
    return rank


@lru_cache(maxsize=None)
def _restrict(p: GenPermutahedron, subset: frozenset) -> GenPermutahedron:
    return GenPermutahedron.from_support(p.support.restrict(subset))


@lru_cache(maxsize=None)
def _contract(p: GenPermutahedron, subset: frozenset) -> GenPermutahedron:
    return GenPermutahedron.from_support(p.support.contract(subset))


@lru_cache(maxsize=None)
def _product(p1: GenPermutahedron, p2: GenPermutahedron) -> GenPermutahedron:
    g = p1.ground.union(p2.ground)
    idx1 = {g.index(p1.ground.label(i)): i for i in range(p1.ground.n)}
    idx2 = {g.index(p2.ground.label(i)): i for i in range(p2.ground.n)}

    def z(s):
        s1 = frozenset(idx1[i] for i in s if i in idx1)
        s2 = frozenset(idx2[i] for i in s if i in idx2)
        return p1.support(s1) + p2.support(s2)

    if g.n == 0:
        return GenPermutahedron.point()
    return GenPermutahedron.from_support(SetFn.from_callable(g, z))


# ---------------------------------------------------------------------------
# stock polytopes


def matroid_polytope(m: Matroid) -> GenPermutahedron:
    """Base polytope of the matroid rank function."""
    z = SetFn.from_callable(m.ground, lambda s: Fraction(m.rank(s)))
    return GenPermutahedron.from_support(z)


def regular_permutahedron(n: int, labels=None) -> GenPermutahedron:
    """Convex hull of all permutations of (n, n-1, ..., 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    g = GroundSet(tuple(labels) if labels else _digit_labels(n))
    z = SetFn.from_callable(
        g, lambda s: Fraction(sum(range(n - len(s) + 1, n + 1)))
    )
    return GenPermutahedron.from_support(z)


def standard_simplex(n: int, labels=None) -> GenPermutahedron:
    """Convex hull of the coordinate unit vectors."""
    if n < 1:
        raise ValueError("n must be >= 1")
    g = GroundSet(tuple(labels) if labels else _digit_labels(n))
    z = SetFn.from_callable(g, lambda s: Fraction(1))
    return GenPermutahedron.from_support(z)


def hypersimplex(n: int, k: int, labels=None) -> GenPermutahedron:
    """Convex hull of 0/1 vectors with exactly k ones."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    g = GroundSet(tuple(labels) if labels else _digit_labels(n))
    z = SetFn.from_callable(g, lambda s: Fraction(min(len(s), k)))
    return GenPermutahedron.from_support(z)


def _digit_labels(n: int) -> tuple[str, ...]:
    if n > 9:
        raise ValueError("default digit labels only cover n <= 9")
    return tuple(str(i) for i in range(1, n + 1))

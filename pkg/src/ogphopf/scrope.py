"""Scrope complexes and the separator complex attached to a preposet.

A Scrope complex on vertex set {1..k-1} is either the full simplex or is
generated by faces of the form [k-1] \\ [x, y-1] with 1 <= x < y <= k.  Its
reduced Euler characteristic is always -1, 0 or 1, which is what the
antipode machinery consumes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import GroundMismatch
from .ground import (
    LinearOrder,
    Preposet,
    SetComposition,
    descent_composition,
    naturalize,
)


@dataclass(frozen=True)
class ScropeComplex:
    """Normalized Scrope complex: width ``k`` plus incomparable intervals.

    ``intervals`` lists pairs (x, y) with x < y encoding the generator
    [k-1] \\ [x, y-1]; after normalization the pairs have strictly increasing
    x and strictly increasing y.  ``is_full_simplex`` marks the generator-free
    case (the full simplex on [k-1]).
    """

    k: int
    intervals: tuple[tuple[int, int], ...]
    is_full_simplex: bool

    @property
    def vertex_count(self) -> int:
        return self.k - 1

    def vertices(self) -> range:
        return range(1, self.k)

    def generators(self) -> tuple[frozenset[int], ...]:
        all_v = frozenset(self.vertices())
        if self.is_full_simplex:
            return (all_v,)
        return tuple(
            all_v - frozenset(range(x, y)) for x, y in self.intervals
        )

    def __repr__(self):
        if self.is_full_simplex:
            return f"ScropeComplex(k={self.k}, full simplex)"
        return f"ScropeComplex(k={self.k}, intervals={list(self.intervals)})"


def normalize(k: int, intervals) -> ScropeComplex:
    """Drop redundant generators and sort canonically.

    An interval [x, y-1] containing another listed interval yields a
    generator contained in the other's, so it is removed.  An empty interval
    list yields the full simplex on [k-1].
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    pairs = set()
    for x, y in intervals:
        if not (1 <= x < y <= k):
            raise ValueError(f"interval pair ({x},{y}) out of range for k={k}")
        pairs.add((int(x), int(y)))
    if not pairs:
        return ScropeComplex(k, (), True)
    kept = []
    for (x, y) in pairs:
        if any(
            (x2, y2) != (x, y) and x <= x2 and y2 <= y for (x2, y2) in pairs
        ):
            continue
        kept.append((x, y))
    kept.sort()
    return ScropeComplex(k, tuple(kept), False)


def contains_face(s: ScropeComplex, f) -> bool:
    face = frozenset(f)
    if not face <= frozenset(s.vertices()):
        raise ValueError("face uses vertices outside 1..k-1")
    if s.is_full_simplex:
        return True
    return any(face <= g for g in s.generators())


def faces(s: ScropeComplex) -> set[frozenset[int]]:
    """All faces (the union of generator power sets); fine for small k."""
    out: set[frozenset[int]] = set()
    for g in s.generators():
        gs = sorted(g)
        for r in range(len(gs) + 1):
            for c in itertools.combinations(gs, r):
                out.add(frozenset(c))
    return out


def _euler_inclusion_exclusion(s: ScropeComplex) -> int:
    gens = s.generators()
    r = len(gens)
    total = 0
    for tsize in range(1, r + 1):
        for idx in itertools.combinations(range(r), tsize):
            inter = gens[idx[0]]
            for i in idx[1:]:
                inter = inter & gens[i]
            if not inter:
                total += (-1) ** tsize
    return total


def _euler_direct(s: ScropeComplex) -> int:
    return sum((-1) ** (len(f) - 1) for f in faces(s))


def reduced_euler(s: ScropeComplex) -> int:
    """Reduced Euler characteristic, exactly; always -1, 0 or 1.

    Computed by inclusion-exclusion over generator subsets (intersections of
    simplices) and, for small complexes, cross-checked against direct face
    enumeration.
    """
    value = _euler_inclusion_exclusion(s)
    if s.k <= 16:
        direct = _euler_direct(s)
        assert value == direct, f"euler mismatch: {value} vs {direct} on {s}"
    assert value in (-1, 0, 1), f"scrope euler out of range: {value} on {s}"
    return value


def _renumber(keep: list[int], interval: tuple[int, int]) -> tuple[int, int]:
    """Map an interval [x, y-1] contained in ``keep`` to the packed coordinates."""
    x, y = interval
    members = [v for v in keep if x <= v < y]
    x_new = keep.index(members[0]) + 1
    y_new = keep.index(members[-1]) + 2
    return (x_new, y_new)


def induced_subcomplex(s: ScropeComplex, keep_vertices) -> ScropeComplex:
    """The induced subcomplex on a vertex subset, again a Scrope complex."""
    keep = sorted(frozenset(keep_vertices))
    if not frozenset(keep) <= frozenset(s.vertices()):
        raise ValueError("keep set uses vertices outside 1..k-1")
    k_new = len(keep) + 1
    if s.is_full_simplex:
        return ScropeComplex(k_new, (), True)
    mapped = []
    for (x, y) in s.intervals:
        members = [v for v in keep if x <= v < y]
        if not members:
            # the generator contains every kept vertex
            return ScropeComplex(k_new, (), True)
        mapped.append(_renumber(keep, (x, y)))
    return normalize(k_new, mapped)


def link_of_face(s: ScropeComplex, face) -> ScropeComplex:
    """The link of a face, renumbered onto the remaining vertices."""
    f = frozenset(face)
    if not contains_face(s, f):
        raise ValueError(f"{sorted(f)} is not a face of {s}")
    keep = sorted(frozenset(s.vertices()) - f)
    k_new = len(keep) + 1
    if s.is_full_simplex:
        return ScropeComplex(k_new, (), True)
    mapped = []
    for (x, y) in s.intervals:
        if f & frozenset(range(x, y)):
            continue  # generator misses the face
        mapped.append(_renumber(keep, (x, y)))
    if not mapped:
        # cannot happen when f is a face of a generated complex with
        # incomparable generators unless f hits every interval;
        # then the link is the full simplex on the rest
        return ScropeComplex(k_new, (), True)
    return normalize(k_new, mapped)


@dataclass(frozen=True)
class GammaResult:
    """Separator complex of a preposet relative to a pair of orders.

    ``complex`` lives on the k-1 separators of ``block_composition`` (the
    naturalized block composition N); ``pairs`` are the qualifying block
    index pairs and ``merged_compositions`` the compositions obtained by
    merging the corresponding block runs of N.
    """

    complex: ScropeComplex
    naturalized: Preposet
    block_composition: SetComposition
    pairs: tuple[tuple[int, int], ...]
    merged_compositions: tuple[SetComposition, ...]

    def face_compositions(self) -> list[SetComposition]:
        """All coarsenings of N indexed by the faces of the complex."""
        n_blocks = self.block_composition.blocks
        out = []
        for f in sorted(faces(self.complex), key=lambda x: (len(x), sorted(x))):
            kept = sorted(f)
            bounds = [0] + [j for j in kept] + [len(n_blocks)]
            blocks = []
            for a, b in zip(bounds, bounds[1:]):
                merged = frozenset().union(*n_blocks[a:b])
                blocks.append(merged)
            out.append(SetComposition(self.block_composition.ground, tuple(blocks)))
        return out


def blocks_in_order(q: Preposet, order: LinearOrder) -> tuple[frozenset[int], ...]:
    """Blocks of a naturalized preposet sorted along ``order`` (they never
    interleave, so sorting by first occurrence is well defined)."""
    pos = order.positions()
    return tuple(sorted(q.blocks(), key=lambda b: min(pos[i] for i in b)))


def gamma_complex(q: Preposet, w: LinearOrder, u: LinearOrder) -> GammaResult:
    """Separator complex of ``q`` for the orders ``(w, u)``.

    ``q`` is naturalized with respect to the position order of ``w``; for
    every strictly related pair a < b of the naturalization whose endpoints
    share a block of the descent composition of ``(w, u)``, the interval of
    separators between their blocks is cut out of a generator.
    """
    if not (q.ground == w.ground == u.ground):
        raise GroundMismatch("gamma complex: different ground sets")
    qnat = naturalize(q, w)
    blocks = blocks_in_order(qnat, w)
    k = len(blocks)
    block_of = {i: t for t, b in enumerate(blocks) for i in b}
    d = descent_composition(w, u)
    d_index = d.block_index()
    pairs = set()
    for a, b in qnat.strict_pairs():
        if d_index[a] == d_index[b]:
            x, y = block_of[a] + 1, block_of[b] + 1
            assert x < y, "naturalized strict pair out of order"
            pairs.add((x, y))
    pairs_sorted = tuple(sorted(pairs))
    comp_n = SetComposition(q.ground, blocks)
    merged = []
    for (x, y) in pairs_sorted:
        merged_blocks = (
            blocks[: x - 1]
            + (frozenset().union(*blocks[x - 1: y]),)
            + blocks[y:]
        )
        merged.append(SetComposition(q.ground, merged_blocks))
    return GammaResult(
        complex=normalize(k, pairs_sorted),
        naturalized=qnat,
        block_composition=comp_n,
        pairs=pairs_sorted,
        merged_compositions=tuple(merged),
    )

"""Ground sets, linear orders, set compositions, preposets, and albums.

Everything here is purely combinatorial and exact: compositions are ordered
partitions into nonempty blocks, preposets are reflexive-transitive relations
stored as full boolean matrices, and the braid-fan geometry is represented
only through the composition/cone dictionary (no coordinates anywhere).

Conventions used throughout the package:

* indices 0..n-1 follow sorted label order of the ground set;
* for a composition ``A`` the total preorder ``i <=_A j`` means "the block of
  ``i`` comes no later than the block of ``j``" (earlier block = larger
  functional weight on the geometry side);
* ``a`` refines ``b`` when every block of ``b`` is a union of consecutive
  blocks of ``a``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction  # noqa: F401  (re-exported convenience)

from .errors import CapExceeded, GroundMismatch

DEFAULT_ENUMERATION_CAP = 8


@dataclass(frozen=True)
class GroundSet:
    """A finite set of distinct atom labels; indices follow sorted order."""

    labels: tuple[str, ...]

    def __post_init__(self):
        ordered = tuple(sorted(str(x) for x in self.labels))
        if len(set(ordered)) != len(ordered):
            raise ValueError(f"duplicate labels in ground set: {self.labels!r}")
        object.__setattr__(self, "labels", ordered)

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"label {label!r} not in ground set") from None

    def label(self, i: int) -> str:
        return self.labels[i]

    def indices(self, labels) -> frozenset[int]:
        return frozenset(self.index(x) for x in labels)

    def subset(self, indices) -> "GroundSet":
        return GroundSet(tuple(self.labels[i] for i in indices))

    def union(self, other: "GroundSet") -> "GroundSet":
        if set(self.labels) & set(other.labels):
            raise GroundMismatch(
                f"ground sets overlap: {self.labels} and {other.labels}"
            )
        return GroundSet(self.labels + other.labels)

    def __iter__(self):
        return iter(range(self.n))

    def __repr__(self):
        return f"GroundSet({''.join(self.labels)})"


@dataclass(frozen=True)
class LinearOrder:
    """A total order of a ground set, stored as a word of indices."""

    ground: GroundSet
    word: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        if sorted(self.word) != list(range(self.ground.n)):
            raise ValueError(f"word {self.word} is not a permutation of the ground")

    @classmethod
    def from_labels(cls, labels) -> "LinearOrder":
        g = GroundSet(tuple(labels))
        return cls(g, tuple(g.index(x) for x in labels))

    @property
    def n(self) -> int:
        return self.ground.n

    def label_word(self) -> tuple[str, ...]:
        return tuple(self.ground.label(i) for i in self.word)

    def position(self, i: int) -> int:
        return self.word.index(i)

    def positions(self) -> dict[int, int]:
        return {i: p for p, i in enumerate(self.word)}

    def restrict(self, indices) -> "LinearOrder":
        """The induced order on a subset, reindexed to the sub-ground."""
        keep = frozenset(indices)
        sub = self.ground.subset(keep)
        word = tuple(sub.index(self.ground.label(i)) for i in self.word if i in keep)
        return LinearOrder(sub, word)

    def reverse(self) -> "LinearOrder":
        return LinearOrder(self.ground, tuple(reversed(self.word)))

    def __repr__(self):
        return f"LinearOrder({''.join(self.label_word())})"


def natural_order(g: GroundSet) -> LinearOrder:
    """The order listing labels in sorted order (index order)."""
    return LinearOrder(g, tuple(range(g.n)))


def linear_orders(g: GroundSet):
    """All orders of ``g`` in a fixed deterministic order."""
    for word in itertools.permutations(range(g.n)):
        yield LinearOrder(g, word)


@dataclass(frozen=True)
class SetComposition:
    """An ordered partition of the ground set into nonempty blocks.

    The empty ground set has a unique composition with zero blocks; it only
    ever appears as the trivial tensor factor.
    """

    ground: GroundSet
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in self.blocks))
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block in set composition")
            if seen & b:
                raise ValueError("blocks are not disjoint")
            seen |= b
        if seen != set(range(self.ground.n)):
            raise ValueError("blocks do not cover the ground set")

    @classmethod
    def from_labels(cls, g: GroundSet, label_blocks) -> "SetComposition":
        return cls(g, tuple(g.indices(b) for b in label_blocks))

    @property
    def k(self) -> int:
        return len(self.blocks)

    def key(self) -> tuple[tuple[int, ...], ...]:
        """Canonical sort/serialization key."""
        return tuple(tuple(sorted(b)) for b in self.blocks)

    def block_index(self) -> dict[int, int]:
        return {i: t for t, b in enumerate(self.blocks) for i in b}

    def leq(self, i: int, j: int) -> bool:
        """Total preorder of the composition: earlier-or-equal block."""
        bi = self.block_index()
        return bi[i] <= bi[j]

    def to_preposet(self) -> "Preposet":
        bi = self.block_index()
        n = self.ground.n
        rel = tuple(
            tuple(bi[i] <= bi[j] for j in range(n)) for i in range(n)
        )
        return Preposet(self.ground, rel)

    def label_blocks(self) -> tuple[tuple[str, ...], ...]:
        return tuple(
            tuple(self.ground.label(i) for i in sorted(b)) for b in self.blocks
        )

    def __repr__(self):
        return "SetComposition(%s)" % "|".join("".join(b) for b in self.label_blocks())


@dataclass(frozen=True)
class Preposet:
    """A reflexive, transitive relation on a ground set (boolean matrix)."""

    ground: GroundSet
    relation: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        n = self.ground.n
        rel = tuple(tuple(bool(x) for x in row) for row in self.relation)
        if len(rel) != n or any(len(row) != n for row in rel):
            raise ValueError("relation matrix has wrong shape")
        object.__setattr__(self, "relation", rel)
        for i in range(n):
            if not rel[i][i]:
                raise ValueError("relation is not reflexive")
        for i in range(n):
            for j in range(n):
                if rel[i][j]:
                    for k in range(n):
                        if rel[j][k] and not rel[i][k]:
                            raise ValueError("relation is not transitive")

    @classmethod
    def from_pairs(cls, g: GroundSet, pairs, close: bool = True) -> "Preposet":
        """Build from a list of (i, j) meaning i <= j; reflexivity is added
        and, with ``close=True``, the transitive closure is taken."""
        n = g.n
        rel = [[i == j for j in range(n)] for i in range(n)]
        for i, j in pairs:
            rel[i][j] = True
        if close:
            for m in range(n):
                for i in range(n):
                    if rel[i][m]:
                        row_m = rel[m]
                        row_i = rel[i]
                        for j in range(n):
                            if row_m[j]:
                                row_i[j] = True
        return cls(g, tuple(tuple(row) for row in rel))

    @classmethod
    def antichain(cls, g: GroundSet) -> "Preposet":
        return cls.from_pairs(g, [])

    @classmethod
    def all_equivalent(cls, g: GroundSet) -> "Preposet":
        n = g.n
        return cls(g, tuple(tuple(True for _ in range(n)) for _ in range(n)))

    def leq(self, i: int, j: int) -> bool:
        return self.relation[i][j]

    def equiv(self, i: int, j: int) -> bool:
        return self.relation[i][j] and self.relation[j][i]

    def strictly_less(self, i: int, j: int) -> bool:
        return self.relation[i][j] and not self.relation[j][i]

    def strict_pairs(self) -> list[tuple[int, int]]:
        n = self.ground.n
        return [
            (i, j)
            for i in range(n)
            for j in range(n)
            if self.strictly_less(i, j)
        ]

    def blocks(self) -> tuple[frozenset[int], ...]:
        """Equivalence classes, canonically ordered by smallest member."""
        n = self.ground.n
        seen: set[int] = set()
        out = []
        for i in range(n):
            if i in seen:
                continue
            cls_ = frozenset(j for j in range(n) if self.equiv(i, j))
            seen |= cls_
            out.append(cls_)
        return tuple(sorted(out, key=min))

    def block_leq(self, b1: frozenset[int], b2: frozenset[int]) -> bool:
        return self.leq(min(b1), min(b2))

    def is_natural(self, order: LinearOrder) -> bool:
        """Natural means every strict relation goes upward in ``order``."""
        pos = order.positions()
        return all(pos[i] < pos[j] for i, j in self.strict_pairs())

    def restrict(self, indices) -> "Preposet":
        keep = sorted(frozenset(indices))
        sub = self.ground.subset(keep)
        lookup = {self.ground.label(i): i for i in keep}
        old = [lookup[lbl] for lbl in sub.labels]
        rel = tuple(
            tuple(self.relation[a][b] for b in old) for a in old
        )
        return Preposet(sub, rel)

    def __repr__(self):
        blocks = ["".join(self.ground.label(i) for i in sorted(b)) for b in self.blocks()]
        rels = [
            (min(b1), min(b2))
            for b1 in self.blocks()
            for b2 in self.blocks()
            if b1 != b2 and self.block_leq(b1, b2)
        ]
        return f"Preposet(blocks={'|'.join(blocks)}, covers={len(rels)})"


@dataclass(frozen=True)
class Album:
    """A set of compositions of one ground set, iterated canonically."""

    ground: GroundSet
    members: frozenset[SetComposition] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        for a in self.members:
            if a.ground != self.ground:
                raise GroundMismatch("album members on mixed ground sets")

    def __contains__(self, a: SetComposition) -> bool:
        return a in self.members

    def __iter__(self):
        return iter(sorted(self.members, key=lambda a: a.key()))

    def __len__(self):
        return len(self.members)

    def __le__(self, other: "Album") -> bool:
        return self.members <= other.members


# ---------------------------------------------------------------------------
# enumeration


def ordered_bell(n: int) -> int:
    """Number of set compositions of an n-set (Fubini number)."""
    if n == 0:
        return 1
    total = 0
    for k in range(1, n + 1):
        # surjections onto [k]
        surj = sum(
            (-1) ** j * _binom(k, j) * (k - j) ** n for j in range(k + 1)
        )
        total += surj
    return total


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def enumerate_compositions(g: GroundSet, cap: int = DEFAULT_ENUMERATION_CAP):
    """Yield every set composition of ``g`` exactly once.

    The empty ground set yields nothing (its unique zero-block composition is
    handled separately as the tensor unit).  Ordering is deterministic:
    first blocks are enumerated as sorted index tuples in lexicographic
    order, then recursively on the remainder.
    """
    if g.n > cap:
        raise CapExceeded("set-composition enumeration", g.n, cap)
    if g.n == 0:
        return

    def rec(remaining: tuple[int, ...]):
        if not remaining:
            yield ()
            return
        for size in range(1, len(remaining) + 1):
            for first in itertools.combinations(remaining, size):
                rest = tuple(x for x in remaining if x not in first)
                for tail in rec(rest):
                    yield (frozenset(first),) + tail

    for blocks in rec(tuple(range(g.n))):
        yield SetComposition(g, blocks)


# ---------------------------------------------------------------------------
# basic operations


def refines(a: SetComposition, b: SetComposition) -> bool:
    """True iff every block of ``b`` is a union of consecutive blocks of ``a``."""
    if a.ground != b.ground:
        raise GroundMismatch("refines: different ground sets")
    pos = 0
    for blk in b.blocks:
        acc: set[int] = set()
        while acc != set(blk):
            if pos >= a.k or not a.blocks[pos] <= blk:
                return False
            acc |= a.blocks[pos]
            pos += 1
    return True


def composition_of_order(w: LinearOrder) -> SetComposition:
    """The composition with singleton blocks in word order."""
    return SetComposition(w.ground, tuple(frozenset({i}) for i in w.word))


def cuttings(w: LinearOrder) -> Album:
    """All 2^(n-1) compositions whose blocks are consecutive segments of ``w``.

    Equals the closure album of the all-singleton composition of ``w``.
    """
    n = w.n
    if n < 1:
        raise ValueError("cuttings requires a nonempty ground set")
    members = []
    for cuts in itertools.chain.from_iterable(
        itertools.combinations(range(1, n), r) for r in range(n)
    ):
        bounds = (0,) + cuts + (n,)
        blocks = tuple(
            frozenset(w.word[bounds[t]:bounds[t + 1]]) for t in range(len(bounds) - 1)
        )
        members.append(SetComposition(w.ground, blocks))
    return Album(w.ground, frozenset(members))


def cut_positions(w: LinearOrder, a: SetComposition) -> tuple[int, ...]:
    """Cut positions (prefix lengths) of a composition whose blocks are
    consecutive segments of ``w``; raises if it is not a cutting of ``w``."""
    pos = w.positions()
    bounds = []
    at = 0
    for blk in a.blocks:
        if {pos[i] for i in blk} != set(range(at, at + len(blk))):
            raise ValueError("composition is not a cutting of the order")
        at += len(blk)
        bounds.append(at)
    return tuple(bounds[:-1])


def descent_composition(w: LinearOrder, u: LinearOrder) -> SetComposition:
    """Cut the word of ``w`` wherever consecutive letters appear out of order
    in ``u``; adjacent letters staying in ``u``-order share a block.

    (The merge criterion is the relative-order test "w(i) occurs before
    w(i+1) in u"; the block count is then 1 + des(u^-1 w).)
    """
    if w.ground != u.ground:
        raise GroundMismatch("descent composition: different ground sets")
    if w.n == 0:
        return SetComposition(w.ground, ())
    pos_u = u.positions()
    blocks: list[set[int]] = [{w.word[0]}]
    for a, b in zip(w.word, w.word[1:]):
        if pos_u[a] < pos_u[b]:
            blocks[-1].add(b)
        else:
            blocks.append({b})
    return SetComposition(w.ground, tuple(frozenset(b) for b in blocks))


def closure_album(q: Preposet, cap: int = DEFAULT_ENUMERATION_CAP) -> Album:
    """All compositions whose total preorder extends the preposet."""
    g = q.ground
    pairs = [(i, j) for i in range(g.n) for j in range(g.n) if i != j and q.leq(i, j)]
    members = []
    for a in enumerate_compositions(g, cap):
        bi = a.block_index()
        if all(bi[i] <= bi[j] for i, j in pairs):
            members.append(a)
    return Album(g, frozenset(members))


def linear_extensions(q: Preposet, cap: int = DEFAULT_ENUMERATION_CAP) -> list[SetComposition]:
    """Compositions with exactly the blocks of ``q``, in every block order
    extending the block poset."""
    if q.ground.n > cap:
        raise CapExceeded("linear extensions", q.ground.n, cap)
    blocks = q.blocks()
    out = []
    for perm in itertools.permutations(blocks):
        ok = True
        for s, b1 in enumerate(perm):
            for b2 in perm[s + 1:]:
                if q.block_leq(b2, b1) and not q.block_leq(b1, b2):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(SetComposition(q.ground, perm))
    return sorted(out, key=lambda a: a.key())


def naturalize(q: Preposet, order: LinearOrder) -> Preposet:
    """Coarsest natural quotient of a preposet with respect to ``order``.

    Blocks are merged exhaustively under two rules: (i) merge related blocks
    B < C containing some b in B, c in C with b after c in ``order``;
    (ii) merge any two blocks that interleave in ``order`` (each contains an
    element below an element of the other).  The result is independent of the
    merge order; the relation is the transitive closure of the induced block
    relations.
    """
    if q.ground != order.ground:
        raise GroundMismatch("naturalize: different ground sets")
    pos = order.positions()
    blocks = [set(b) for b in q.blocks()]
    rel: set[tuple[int, int]] = set()
    for s, b1 in enumerate(blocks):
        for t, b2 in enumerate(blocks):
            if s != t and q.block_leq(frozenset(b1), frozenset(b2)):
                rel.add((s, t))

    def transitive_close(r: set[tuple[int, int]], m: int) -> set[tuple[int, int]]:
        changed = True
        while changed:
            changed = False
            for (i, j) in list(r):
                for k in range(m):
                    if (j, k) in r and (i, k) not in r:
                        r.add((i, k))
                        changed = True
        return r

    while True:
        merge = None
        m = len(blocks)
        for s in range(m):
            for t in range(m):
                if s == t:
                    continue
                b, c = blocks[s], blocks[t]
                below = any(pos[x] < pos[y] for x in b for y in c)
                above = any(pos[y] < pos[x] for x in b for y in c)
                if (s, t) in rel and above:
                    merge = (s, t)
                    break
                if below and above:
                    merge = (s, t)
                    break
            if merge:
                break
        if merge is None:
            break
        s, t = merge
        keep = [blocks[i] for i in range(m) if i not in (s, t)]
        new_blocks = keep + [blocks[s] | blocks[t]]
        idx_of = {}
        j = 0
        for i in range(m):
            if i in (s, t):
                idx_of[i] = len(keep)
            else:
                idx_of[i] = j
                j += 1
        new_rel = set()
        for (i, jj) in rel:
            a, b2 = idx_of[i], idx_of[jj]
            if a != b2:
                new_rel.add((a, b2))
        blocks = new_blocks
        rel = transitive_close(new_rel, len(blocks))

    n = q.ground.n
    block_of = {}
    for t, b in enumerate(blocks):
        for i in b:
            block_of[i] = t
    matrix = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            bi, bj = block_of[i], block_of[j]
            matrix[i][j] = bi == bj or (bi, bj) in rel
    return Preposet(q.ground, tuple(tuple(row) for row in matrix))


def preposet_from_album(members) -> Preposet:
    """Intersection of the total preorders of the given compositions."""
    members = list(members)
    if not members:
        raise ValueError("preposet_from_album: empty album")
    g = members[0].ground
    n = g.n
    matrix = [[True] * n for _ in range(n)]
    for a in members:
        if a.ground != g:
            raise GroundMismatch("album members on mixed ground sets")
        bi = a.block_index()
        for i in range(n):
            for j in range(n):
                if bi[i] > bi[j]:
                    matrix[i][j] = False
    return Preposet(g, tuple(tuple(row) for row in matrix))


def shuffles(ws: list[LinearOrder]) -> list[LinearOrder]:
    """All interleavings of orders on pairwise-disjoint ground sets."""
    if not ws:
        return [LinearOrder(GroundSet(()), ())]
    g = ws[0].ground
    for w in ws[1:]:
        g = g.union(w.ground)
    words = [w.label_word() for w in ws]

    def rec(tails: tuple[tuple[str, ...], ...]):
        if all(not t for t in tails):
            yield ()
            return
        for s, t in enumerate(tails):
            if t:
                shorter = tails[:s] + (t[1:],) + tails[s + 1:]
                for rest in rec(shorter):
                    yield (t[0],) + rest

    out = []
    for labels in rec(tuple(words)):
        out.append(LinearOrder(g, tuple(g.index(x) for x in labels)))
    return out


def natural_composition(a: SetComposition) -> bool:
    """True iff the blocks are consecutive increasing intervals of indices."""
    expect = 0
    for b in a.blocks:
        if set(b) != set(range(expect, expect + len(b))):
            return False
        expect += len(b)
    return True

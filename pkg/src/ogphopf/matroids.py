"""Matroids given by their bases, with the minors used elsewhere.

Kept deliberately small: everything is brute force over subsets, which is
the right tool at desk scale (ground sets up to 8).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import GroundMismatch
from .ground import GroundSet


@dataclass(frozen=True)
class Matroid:
    ground: GroundSet
    bases: tuple[frozenset[int], ...]

    def __post_init__(self):
        bases = tuple(sorted({frozenset(b) for b in self.bases}, key=sorted))
        object.__setattr__(self, "bases", bases)
        if not bases:
            raise ValueError("a matroid needs at least one basis")
        r = len(bases[0])
        if any(len(b) != r for b in bases):
            raise ValueError("bases of unequal size")
        if any(not b <= frozenset(range(self.ground.n)) for b in bases):
            raise ValueError("basis outside the ground set")
        ok, witness = check_exchange(bases)
        if not ok:
            raise ValueError(f"basis exchange fails: {witness}")

    @classmethod
    def from_label_bases(cls, labels, label_bases) -> "Matroid":
        g = GroundSet(tuple(labels))
        return cls(g, tuple(g.indices(b) for b in label_bases))

    @property
    def rank_value(self) -> int:
        return len(self.bases[0])

    def rank(self, subset) -> int:
        s = frozenset(subset)
        return max(len(b & s) for b in self.bases)

    def is_independent(self, subset) -> bool:
        s = frozenset(subset)
        return any(s <= b for b in self.bases)

    def independent_sets(self):
        seen = set()
        for b in self.bases:
            for r in range(len(b) + 1):
                for c in itertools.combinations(sorted(b), r):
                    seen.add(frozenset(c))
        return seen

    def circuits(self) -> list[frozenset[int]]:
        """Minimal dependent subsets, by size."""
        out: list[frozenset[int]] = []
        universe = range(self.ground.n)
        for r in range(1, self.ground.n + 1):
            for c in itertools.combinations(universe, r):
                s = frozenset(c)
                if self.is_independent(s):
                    continue
                if any(circ <= s for circ in out):
                    continue
                out.append(s)
        return sorted(out, key=lambda c: (len(c), sorted(c)))

    def restrict(self, subset) -> "Matroid":
        s = frozenset(subset)
        sub = self.ground.subset(s)
        r = self.rank(s)
        bases = [
            frozenset(sub.index(self.ground.label(i)) for i in c)
            for c in itertools.combinations(sorted(s), r)
            if self.is_independent(c)
        ]
        return Matroid(sub, tuple(bases))

    def contract(self, subset) -> "Matroid":
        s = frozenset(subset)
        rest = frozenset(range(self.ground.n)) - s
        sub = self.ground.subset(rest)
        rs = self.rank(s)
        # independent in M/s  <=>  rank(T u s) - rank(s) == |T|
        r_contract = self.rank_value - rs
        bases = []
        for c in itertools.combinations(sorted(rest), r_contract):
            if self.rank(frozenset(c) | s) - rs == len(c):
                bases.append(frozenset(sub.index(self.ground.label(i)) for i in c))
        return Matroid(sub, tuple(bases))

    def direct_sum(self, other: "Matroid") -> "Matroid":
        g = self.ground.union(other.ground)
        bases = []
        for b1 in self.bases:
            l1 = [self.ground.label(i) for i in b1]
            for b2 in other.bases:
                l2 = [other.ground.label(i) for i in b2]
                bases.append(g.indices(l1 + l2))
        return Matroid(g, tuple(bases))

    def __repr__(self):
        blist = [
            "".join(self.ground.label(i) for i in sorted(b)) for b in self.bases
        ]
        return f"Matroid({''.join(self.ground.labels)}; bases={'|'.join(blist) or '()'})"


def check_exchange(bases) -> tuple[bool, tuple | None]:
    """Basis exchange axiom; returns a witnessing triple on failure."""
    bases = list(bases)
    base_set = set(bases)
    for b1 in bases:
        for b2 in bases:
            for x in b1 - b2:
                if not any(
                    (b1 - {x}) | {y} in base_set for y in b2 - b1
                ):
                    return False, (b1, b2, x)
    return True, None


def uniform(n: int, k: int, labels=None) -> Matroid:
    if labels is None:
        labels = default_labels(n)
    g = GroundSet(tuple(labels))
    bases = [frozenset(c) for c in itertools.combinations(range(n), k)]
    return Matroid(g, tuple(bases))


def free(n: int, labels=None) -> Matroid:
    return uniform(n, n, labels)


def graphic(edges, labels=None) -> Matroid:
    """Cycle matroid of a graph given as a list of vertex pairs; one matroid
    element per edge."""
    m = len(edges)
    if labels is None:
        labels = default_labels(m)
    g = GroundSet(tuple(labels))

    def acyclic(subset) -> bool:
        parent: dict = {}

        def find(v):
            while parent.get(v, v) != v:
                parent[v] = parent.get(parent[v], parent[v])
                v = parent[v]
            return v

        for i in subset:
            a, b = edges[i]
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True

    best = 0
    indep = []
    for r in range(m + 1):
        for c in itertools.combinations(range(m), r):
            if acyclic(c):
                indep.append(frozenset(c))
                best = max(best, r)
    bases = [s for s in indep if len(s) == best]
    return Matroid(g, tuple(bases))


def default_labels(n: int) -> tuple[str, ...]:
    alphabet = "abcdefghijklmnopqrstuvwxyz"
    if n > len(alphabet):
        raise ValueError("too many elements for default labels")
    return tuple(alphabet[:n])


def all_matroids(n: int, labels=None):
    """Every labeled matroid on an n-element ground set, all ranks.

    Brute force over candidate basis families with the exchange check;
    adequate for n <= 5.
    """
    if labels is None:
        labels = default_labels(n)
    g = GroundSet(tuple(labels))
    for r in range(n + 1):
        r_subsets = [frozenset(c) for c in itertools.combinations(range(n), r)]
        for size in range(1, len(r_subsets) + 1):
            for family in itertools.combinations(r_subsets, size):
                ok, _ = check_exchange(family)
                if ok:
                    yield Matroid(g, family)

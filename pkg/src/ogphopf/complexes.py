"""Pure ordered simplicial complexes and their Hopf-class machinery.

An ordered complex is a simplicial complex together with a total order of
its vertex set.  Restriction keeps an induced subcomplex; contraction takes
the link of the lexicographically smallest facet of the restriction; the
shuffle-join product and the prefix coproduct make any Hopf class of such
complexes into a monoid (see ``hopf`` for the generic validators).

The void complex (no faces) and the complex {[]} (one empty face) are
distinguished; the latter is the monoidal unit and counts as pure of
dimension -1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapExceeded, GroundMismatch
from .formal import FormalSum
from .ground import GroundSet, LinearOrder, shuffles
from .matroids import Matroid

DECOMPOSABILITY_CAP = 10


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet representation; facets form an antichain under inclusion."""

    ground: GroundSet
    facets: tuple[frozenset[int], ...]

    def __post_init__(self):
        raw = {frozenset(f) for f in self.facets}
        maximal = tuple(
            sorted(
                (f for f in raw if not any(f < g for g in raw)),
                key=lambda f: (len(f), sorted(f)),
            )
        )
        object.__setattr__(self, "facets", maximal)
        universe = frozenset(range(self.ground.n))
        for f in maximal:
            if not f <= universe:
                raise ValueError("facet outside ground set")

    @classmethod
    def generated(cls, ground: GroundSet, faces) -> "SimplicialComplex":
        return cls(ground, tuple(frozenset(f) for f in faces))

    @classmethod
    def void(cls, ground: GroundSet) -> "SimplicialComplex":
        return cls(ground, ())

    @classmethod
    def irrelevant(cls, ground: GroundSet) -> "SimplicialComplex":
        """The complex whose only face is the empty face."""
        return cls(ground, (frozenset(),))

    @classmethod
    def from_label_facets(cls, labels, label_facets) -> "SimplicialComplex":
        g = GroundSet(tuple(labels))
        return cls(g, tuple(g.indices(f) for f in label_facets))

    def is_void(self) -> bool:
        return not self.facets

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def dim(self) -> int:
        if self.is_void():
            return -2  # conventional sentinel below the empty complex
        return max(len(f) for f in self.facets) - 1

    def faces(self) -> set[frozenset[int]]:
        out: set[frozenset[int]] = set()
        for f in self.facets:
            fs = sorted(f)
            for r in range(len(fs) + 1):
                for c in itertools.combinations(fs, r):
                    out.add(frozenset(c))
        return out

    def contains(self, face) -> bool:
        f = frozenset(face)
        return any(f <= g for g in self.facets)

    def reduced_euler(self) -> int:
        return sum((-1) ** (len(f) - 1) for f in self.faces())

    def label_facets(self) -> tuple[tuple[str, ...], ...]:
        return tuple(
            tuple(self.ground.label(i) for i in sorted(f)) for f in self.facets
        )

    def __repr__(self):
        inner = ",".join("".join(f) or "()" for f in self.label_facets())
        return f"Complex[{''.join(self.ground.labels)}]<{inner}>"


@dataclass(frozen=True)
class OrderedComplex:
    order: LinearOrder
    complex: SimplicialComplex

    def __post_init__(self):
        if self.order.ground != self.complex.ground:
            raise GroundMismatch("order and complex on different ground sets")

    @property
    def ground(self) -> GroundSet:
        return self.order.ground

    def key(self):
        return (
            self.order.label_word(),
            tuple(tuple(sorted(f)) for f in self.complex.facets),
        )

    def position_facets(self) -> tuple[tuple[int, ...], ...]:
        """Facets rewritten in order positions; canonical up to order-isomorphism."""
        pos = self.order.positions()
        return tuple(
            sorted(tuple(sorted(pos[i] for i in f)) for f in self.complex.facets)
        )

    def __repr__(self):
        return f"({''.join(self.order.label_word())}, {self.complex!r})"


# ---------------------------------------------------------------------------
# simplicial operations


def restriction(c: OrderedComplex, subset) -> OrderedComplex:
    """Induced subcomplex on a subset, order restricted."""
    s = frozenset(subset)
    sub = c.ground.subset(s)
    faces = {frozenset(sub.index(c.ground.label(i)) for i in (f & s)) for f in c.complex.facets}
    if c.complex.is_void():
        new = SimplicialComplex.void(sub)
    else:
        new = SimplicialComplex(sub, tuple(faces))
    return OrderedComplex(c.order.restrict(s), new)


def link(sc: SimplicialComplex, sigma) -> SimplicialComplex:
    """Link of a face, on the ground set minus the face."""
    f = frozenset(sigma)
    if not sc.contains(f):
        raise ValueError("link of a non-face")
    rest = frozenset(range(sc.ground.n)) - f
    sub = sc.ground.subset(rest)
    new_facets = [
        frozenset(sub.index(sc.ground.label(i)) for i in (g - f))
        for g in sc.facets
        if f <= g
    ]
    return SimplicialComplex(sub, tuple(new_facets))


def join(s1: SimplicialComplex, s2: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join on the disjoint union of the ground sets."""
    g = s1.ground.union(s2.ground)
    if s1.is_void() or s2.is_void():
        return SimplicialComplex.void(g)
    facets = []
    for f1 in s1.facets:
        l1 = [s1.ground.label(i) for i in f1]
        for f2 in s2.facets:
            l2 = [s2.ground.label(i) for i in f2]
            facets.append(g.indices(l1 + l2))
    return SimplicialComplex(g, tuple(facets))


def _lex_smallest_facet(sc: SimplicialComplex, order: LinearOrder) -> frozenset[int]:
    pos = order.positions()
    return min(
        sc.facets,
        key=lambda f: tuple(sorted(pos[i] for i in f)),
    )


def ordered_contraction(c: OrderedComplex, prefix) -> OrderedComplex:
    """Link of the lexicographically smallest facet of the restriction to a
    prefix of the order, kept on the complementary ground set."""
    s = frozenset(prefix)
    positions = {c.order.position(i) for i in s}
    if positions != set(range(len(s))):
        raise ValueError("contraction subset must be a prefix of the order")
    rest = frozenset(range(c.ground.n)) - s
    rest_order = c.order.restrict(rest)
    restricted = restriction(c, s)
    if restricted.complex.is_void():
        return OrderedComplex(rest_order, SimplicialComplex.void(rest_order.ground))
    small = _lex_smallest_facet(restricted.complex, restricted.order)
    small_parent = frozenset(
        c.ground.index(restricted.complex.ground.label(i)) for i in small
    )
    linked = link(c.complex, small_parent)
    # keep only the part on the complement of the whole prefix
    sub = c.ground.subset(rest)
    faces = [
        frozenset(
            sub.index(linked.ground.label(i))
            for i in f
            if c.ground.index(linked.ground.label(i)) in rest
        )
        for f in linked.facets
    ]
    return OrderedComplex(rest_order, SimplicialComplex(sub, tuple(faces)))


def shuffle_join_product(c1: OrderedComplex, c2: OrderedComplex) -> FormalSum:
    """Sum over shuffles of the orders, complex part the join."""
    joined = join(c1.complex, c2.complex)
    out = FormalSum()
    for w in shuffles([c1.order, c2.order]):
        out.add_term(OrderedComplex(w, joined), 1)
    return out


def hq_coproduct(c: OrderedComplex, left_labels) -> FormalSum:
    """Prefix coproduct: restriction tensor contraction, else zero."""
    left = frozenset(left_labels)
    ground_labels = frozenset(c.ground.labels)
    if not left <= ground_labels:
        raise GroundMismatch("coproduct split is not a subset of the ground")
    s = c.ground.indices(left)
    positions = {c.order.position(i) for i in s}
    if positions != set(range(len(s))):
        return FormalSum()
    return FormalSum.of((restriction(c, s), ordered_contraction(c, s)))


# ---------------------------------------------------------------------------
# recognizers and constructors


def is_shifted(c: OrderedComplex) -> bool:
    """Replacing any vertex of a face by an order-smaller one stays a face."""
    pos = c.order.positions()
    faces = c.complex.faces()
    for f in faces:
        for e in f:
            for g_idx in range(c.ground.n):
                if pos[g_idx] < pos[e] and g_idx not in f:
                    if frozenset(f - {e} | {g_idx}) not in faces:
                        return False
    return True


def broken_circuit_complex(m: Matroid, w: LinearOrder) -> OrderedComplex:
    """Sets containing no broken circuit (circuit minus its smallest element)."""
    if w.ground != m.ground:
        raise GroundMismatch("broken circuits: order on wrong ground set")
    pos = w.positions()
    broken = [
        frozenset(circ - {min(circ, key=lambda i: pos[i])})
        for circ in m.circuits()
    ]
    n = m.ground.n
    ok_faces = [
        frozenset(c)
        for r in range(n + 1)
        for c in itertools.combinations(range(n), r)
        if not any(b <= frozenset(c) for b in broken)
    ]
    return OrderedComplex(w, SimplicialComplex(m.ground, tuple(ok_faces)))


def independence_complex(m: Matroid) -> SimplicialComplex:
    return SimplicialComplex(m.ground, m.bases)


# ---------------------------------------------------------------------------
# order-decomposability and Hopf-class closure audit

_DECOMP_MEMO: dict = {}


def _prefix_subsets(c: OrderedComplex):
    for size in range(1, c.ground.n):
        yield frozenset(c.order.word[:size])


def is_order_decomposable(c: OrderedComplex, cap: int = DECOMPOSABILITY_CAP) -> bool:
    """Pure, with all prefix restrictions and contractions recursively so.

    A complex with exactly one facet is decomposable outright.  Memoized on
    the order-isomorphism type (facets in order positions).
    """
    if c.ground.n > cap:
        raise CapExceeded("order-decomposability check", c.ground.n, cap)
    key = (c.ground.n, c.position_facets())
    hit = _DECOMP_MEMO.get(key)
    if hit is not None:
        return hit
    _DECOMP_MEMO[key] = True  # provisional; recursion on strictly smaller grounds
    if len(c.complex.facets) == 1:
        result = True
    elif not c.complex.is_pure():
        result = False
    else:
        result = True
        for s in _prefix_subsets(c):
            res = restriction(c, s)
            con = ordered_contraction(c, s)
            if not (res.complex.is_pure() and con.complex.is_pure()):
                result = False
                break
            if not (is_order_decomposable(res, cap) and is_order_decomposable(con, cap)):
                result = False
                break
    _DECOMP_MEMO[key] = result
    return result


@dataclass
class ClosureReport:
    generators: int
    visited: int
    impure: list
    not_decomposable: list

    @property
    def ok(self) -> bool:
        return not self.impure and not self.not_decomposable


def validate_hopf_class(
    generators,
    max_n: int,
    check_decomposable: bool = True,
    max_items: int = 20000,
) -> ClosureReport:
    """Close a generator set under shuffle-joins, prefix restrictions and
    prefix contractions (up to ground size ``max_n``), recording violations.

    Works on order-isomorphism types, so ground sets are relabeled to
    positions before combining.
    """
    def canon(c: OrderedComplex):
        return (c.ground.n, c.position_facets())

    def realize(n: int, pos_facets) -> OrderedComplex:
        g = GroundSet(tuple(_letters(n)))
        w = LinearOrder(g, tuple(range(n)))
        return OrderedComplex(w, SimplicialComplex(g, tuple(frozenset(f) for f in pos_facets)))

    seen: dict = {}
    queue = []
    for gen in generators:
        key = canon(gen)
        if key not in seen:
            seen[key] = realize(*key)
            queue.append(key)
    impure = []
    not_dec = []

    def visit(c: OrderedComplex, origin):
        key = canon(c)
        if key in seen:
            return
        if len(seen) >= max_items:
            raise CapExceeded("hopf-class closure", len(seen), max_items)
        seen[key] = realize(*key)
        queue.append(key)
        if not c.complex.is_pure():
            impure.append((key, origin))
        elif check_decomposable and not is_order_decomposable(c):
            not_dec.append((key, origin))

    gen_count = len(seen)
    head = 0
    while head < len(queue):
        key = queue[head]
        head += 1
        c = seen[key]
        for s in _prefix_subsets(c):
            visit(restriction(c, s), ("restriction", key, len(s)))
            visit(ordered_contraction(c, s), ("contraction", key, len(s)))
        for other_key in list(seen):
            if c.ground.n + other_key[0] > max_n:
                continue
            other = seen[other_key]
            relabeled = _shift_labels(other, c.ground.n)
            for term, _ in shuffle_join_product(c, relabeled):
                visit(term, ("shuffle-join", key, other_key))
    return ClosureReport(
        generators=gen_count,
        visited=len(seen),
        impure=impure,
        not_decomposable=not_dec,
    )


def _letters(n: int) -> tuple[str, ...]:
    alphabet = "abcdefghijklmnopqrstuvwxyz"
    return tuple(alphabet[:n])


def _shift_labels(c: OrderedComplex, offset: int) -> OrderedComplex:
    """Relabel to letters offset..offset+n-1 so grounds become disjoint."""
    alphabet = "abcdefghijklmnopqrstuvwxyz"
    n = c.ground.n
    g = GroundSet(tuple(alphabet[offset:offset + n]))
    word = tuple(c.order.word)
    facets = tuple(frozenset(f) for f in c.complex.facets)
    # positions carry over: label i in the old ground maps to offset+i
    return OrderedComplex(
        LinearOrder(g, word), SimplicialComplex(g, facets)
    )


def all_shifted_pure_complexes(n: int):
    """Every pure complex on n ordered vertices that is shifted for the
    natural order, one per facet family, including the empty-face complex."""
    g = GroundSet(tuple(_letters(n)))
    w = LinearOrder(g, tuple(range(n)))
    yield OrderedComplex(w, SimplicialComplex.irrelevant(g))
    for d in range(n):
        subsets = [frozenset(c) for c in itertools.combinations(range(n), d + 1)]
        for size in range(1, len(subsets) + 1):
            for family in itertools.combinations(subsets, size):
                oc = OrderedComplex(w, SimplicialComplex(g, family))
                if len(oc.complex.facets) != size:
                    continue  # family was not an antichain
                if is_shifted(oc):
                    yield oc

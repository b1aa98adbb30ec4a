"""Formal integer combinations of hashable basis elements."""

from __future__ import annotations


class FormalSum:
    """A finite map from basis elements to nonzero integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | None = None):
        self._terms = {}
        if terms:
            for b, c in terms.items():
                c = int(c)
                if c:
                    self._terms[b] = c

    @classmethod
    def zero(cls) -> "FormalSum":
        return cls()

    @classmethod
    def of(cls, basis, coeff: int = 1) -> "FormalSum":
        return cls({basis: coeff})

    def coefficient(self, basis) -> int:
        return self._terms.get(basis, 0)

    def add_term(self, basis, coeff: int) -> None:
        c = self._terms.get(basis, 0) + coeff
        if c:
            self._terms[basis] = c
        else:
            self._terms.pop(basis, None)

    def items(self, key=None):
        if key is None:
            key = repr
        return sorted(self._terms.items(), key=lambda bc: key(bc[0]))

    def support(self):
        return set(self._terms)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = FormalSum(dict(self._terms))
        for b, c in other._terms.items():
            out.add_term(b, c)
        return out

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + other.scale(-1)

    def __neg__(self) -> "FormalSum":
        return self.scale(-1)

    def scale(self, c: int) -> "FormalSum":
        if c == 0:
            return FormalSum()
        return FormalSum({b: c * v for b, v in self._terms.items()})

    def map_basis(self, fn) -> "FormalSum":
        out = FormalSum()
        for b, c in self._terms.items():
            out.add_term(fn(b), c)
        return out

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        return isinstance(other, FormalSum) and self._terms == other._terms

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __repr__(self):
        if not self._terms:
            return "0"
        bits = []
        for b, c in self.items():
            sign = "+" if c > 0 else "-"
            mag = abs(c)
            coeff = "" if mag == 1 else f"{mag}*"
            bits.append(f"{sign} {coeff}{b!r}")
        return " ".join(bits)


def diff_sums(a: FormalSum, b: FormalSum) -> list[tuple]:
    """Terms where two sums disagree, as (basis, coeff_a, coeff_b)."""
    out = []
    for basis in a.support() | b.support():
        ca, cb = a.coefficient(basis), b.coefficient(basis)
        if ca != cb:
            out.append((basis, ca, cb))
    return out

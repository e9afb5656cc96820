"""Monomial ideals in N^d as minimal generator sets of exponent vectors."""

from __future__ import annotations

from dataclasses import dataclass


def _divides(g, m) -> bool:
    return all(a <= b for a, b in zip(g, m))


def minimalize(vectors):
    """Drop every vector divisible by another; idempotent and order-independent."""
    vecs = sorted(set(tuple(int(c) for c in v) for v in vectors))
    out = []
    for v in vecs:
        if not any(_divides(g, v) for g in vecs if g != v):
            out.append(v)
    return frozenset(out)


@dataclass(frozen=True)
class MonomialIdeal:
    dim: int
    gens: frozenset

    @classmethod
    def make(cls, dim: int, vectors) -> "MonomialIdeal":
        vectors = list(vectors)
        for v in vectors:
            if len(v) != dim:
                raise ValueError("generator dimension mismatch")
            if any(int(c) < 0 for c in v):
                raise ValueError("exponents must be non-negative")
        return cls(dim, minimalize(vectors))

    @classmethod
    def zero(cls, dim: int) -> "MonomialIdeal":
        return cls(dim, frozenset())

    @classmethod
    def unit(cls, dim: int) -> "MonomialIdeal":
        return cls(dim, frozenset({(0,) * dim}))

    def is_zero(self) -> bool:
        return not self.gens

    def sorted_gens(self):
        return sorted(self.gens)

    def _require_same_dim(self, other: "MonomialIdeal"):
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return mi_product(self, other)

    def __pow__(self, n: int) -> "MonomialIdeal":
        return mi_power(self, n)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return mi_contains(other, self)

    def __lt__(self, other: "MonomialIdeal") -> bool:
        return mi_contains(other, self) and self != other

    def __repr__(self):
        if self.is_zero():
            return "monomial(0)"
        body = ",".join("x^" + "".join(f"({c})" for c in g) for g in self.sorted_gens())
        return f"monomial<{body}>"


def mi_member(m, ideal: MonomialIdeal) -> bool:
    """Whether the monomial with exponent vector m lies in the ideal."""
    m = tuple(int(c) for c in m)
    if len(m) != ideal.dim:
        raise ValueError("dimension mismatch")
    return any(_divides(g, m) for g in ideal.gens)


def mi_product(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    i._require_same_dim(j)
    sums = [tuple(a + b for a, b in zip(g, h)) for g in i.gens for h in j.gens]
    return MonomialIdeal(i.dim, minimalize(sums))


def mi_power(i: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 1:
        raise ValueError("power must be >= 1")
    acc = i
    for _ in range(n - 1):
        acc = mi_product(acc, i)
    return acc


def mi_contains(i: MonomialIdeal, j: MonomialIdeal) -> bool:
    """Whether i contains j: every generator of j is a member of i."""
    i._require_same_dim(j)
    return all(mi_member(g, i) for g in j.gens)


def mi_equal(i: MonomialIdeal, j: MonomialIdeal) -> bool:
    i._require_same_dim(j)
    return mi_contains(i, j) and mi_contains(j, i)


def prufer_witness():
    """The two-variable pair I = (a^4, a^3 b, a b^3, b^4) inside J = (a,b)^4.

    Certified: I is strictly inside J (the square a^2 b^2 is missing), yet
    I^2 = J^2.  This is the reduction pair behind the u, u^-1 test for
    Prufer-ness of integrally closed big-ideal domains.
    """
    i = MonomialIdeal.make(2, [(4, 0), (3, 1), (1, 3), (0, 4)])
    j = mi_power(MonomialIdeal.make(2, [(1, 0), (0, 1)]), 4)
    return i, j


def power_series_witness():
    """The same exponent pair read in variables (a, X): J = (a^4, a^3 X, a X^3, X^4)
    inside I = (a, X)^4, with J strictly smaller but J^2 = I^2."""
    j = MonomialIdeal.make(2, [(4, 0), (3, 1), (1, 3), (0, 4)])
    i = mi_power(MonomialIdeal.make(2, [(1, 0), (0, 1)]), 4)
    return j, i

"""Cofinite exponent sets and numerical semigroups.

An exponent set stands for a monomial-supported module inside k[[X]]: the set
of exponents whose coefficient space is the whole field.  Module exponent sets
are either empty or cofinite, so (members-below-conductor, conductor) is an
exact finite description.  The arithmetic here (sum-sets, colon sets) is kept
deliberately independent of the subspace machinery so the two routes can be
checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class CofiniteSet:
    """members (all < conductor) together with every integer >= conductor."""

    members: frozenset
    conductor: int

    @classmethod
    def make(cls, members, conductor: int) -> "CofiniteSet":
        mem = frozenset(m for m in members if 0 <= m < conductor)
        c = conductor
        while c > 0 and (c - 1) in mem:
            mem = mem - {c - 1}
            c -= 1
        return cls(mem, c)

    @classmethod
    def from_iterable(cls, spots, conductor: int) -> "CofiniteSet":
        return cls.make(frozenset(spots), conductor)

    def __contains__(self, n: int) -> bool:
        return n >= self.conductor or n in self.members

    def listing(self, upto: int):
        return [n for n in range(upto) if n in self]

    def min_element(self) -> int:
        cands = list(self.members) + [self.conductor]
        return min(cands)

    def issubset(self, other: "CofiniteSet") -> bool:
        bound = max(self.conductor, other.conductor)
        return all(n in other for n in range(bound) if n in self)

    def sum_with(self, other: "CofiniteSet") -> "CofiniteSet":
        bound = self.conductor + other.conductor
        a = self.listing(bound + 1)
        b = other.listing(bound + 1)
        out = set()
        for i in a:
            for j in b:
                if i + j <= bound:
                    out.add(i + j)
        return CofiniteSet.make(out, bound)

    def power(self, n: int) -> "CofiniteSet":
        if n < 1:
            raise ValueError("power must be >= 1")
        acc = self
        for _ in range(n - 1):
            acc = acc.sum_with(self)
        return acc

    def colon(self, other: "CofiniteSet") -> "CofiniteSet":
        """{n >= 0 : n + q in self for every q in other}."""
        out = set()
        for n in range(self.conductor):
            if all((n + q) in self for q in other.listing(self.conductor)):
                # q >= conductor(self) gives n + q >= conductor(self), always in
                out.add(n)
        return CofiniteSet.make(out, self.conductor)

    def __str__(self):
        if not self.members and self.conductor == 0:
            return "{n>=0}"
        finite = ",".join(str(m) for m in sorted(self.members))
        tail = f"n>={self.conductor}"
        return "{" + (finite + "," if finite else "") + tail + "}"


def numerical_semigroup(gens) -> CofiniteSet:
    """The additive closure of the generators (with 0); must be cofinite."""
    gens = sorted(set(int(g) for g in gens))
    if not gens or gens[0] <= 0:
        raise ValueError("generators must be positive integers")
    g = 0
    for x in gens:
        g = gcd(g, x)
    if g != 1:
        raise ValueError("generators must be coprime overall (cofinite semigroup)")
    bound = max(gens) * min(gens) + max(gens) + 1
    hit = [False] * (bound + max(gens) + 1)
    hit[0] = True
    for n in range(len(hit)):
        if hit[n]:
            for x in gens:
                if n + x < len(hit):
                    hit[n + x] = True
    conductor = 0
    for n in range(len(hit) - 1, -1, -1):
        if not hit[n]:
            conductor = n + 1
            break
    return CofiniteSet.make({n for n in range(conductor) if hit[n]}, conductor)


def shifted_ideal(semigroup: CofiniteSet, exponent_gens) -> CofiniteSet:
    """Union of g + S over the generators: the monomial ideal they generate."""
    out = None
    for g in exponent_gens:
        shifted = CofiniteSet.make(
            {g + s for s in semigroup.listing(semigroup.conductor)},
            g + semigroup.conductor,
        )
        out = shifted if out is None else union(out, shifted)
    if out is None:
        raise ValueError("at least one generator required")
    return out


def union(a: CofiniteSet, b: CofiniteSet) -> CofiniteSet:
    bound = max(a.conductor, b.conductor)
    return CofiniteSet.make(
        {n for n in range(bound) if n in a or n in b}, bound
    )


def enumerate_semigroup_ideals(semigroup: CofiniteSet, max_conductor: int):
    """All nonzero cofinite exponent sets T with T + S <= T and conductor <= max_conductor."""
    gens = [n for n in semigroup.listing(max_conductor + 1) if n > 0]
    out = []
    for mask in range(1 << max_conductor):
        below = {n for n in range(max_conductor) if mask & (1 << n)}
        ok = True
        for t in below:
            for g in gens:
                if t + g < max_conductor and (t + g) not in below:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(CofiniteSet.make(below, max_conductor))
    out.sort(key=lambda c: (c.conductor, sorted(c.members)))
    # distinct masks can normalize to the same set; keep one of each
    seen = set()
    uniq = []
    for c in out:
        if c not in seen:
            seen.add(c)
            uniq.append(c)
    return uniq

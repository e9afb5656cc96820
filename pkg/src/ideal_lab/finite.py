"""Explicit finite commutative rings, their ideals, and idealizations A x E.

Rings are multiplication/addition tables over indexed carriers; everything is
decided by exhaustive scans.  Power questions quantified over all exponents
are decided exactly through periodicity of the (finitely many) ideal pairs.
A symbolic split-ideal mode covers ideals n Z x F of the idealization of a
finite cyclic group over the integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .fields import is_prime
from .verdicts import Verdict

AXIOM_CHECK_BOUND = 64


class FiniteRing:
    __slots__ = ("size", "add", "mul", "zero", "one", "names", "kind", "parts")

    def __init__(self, add, mul, zero, one, names, kind, parts=()):
        self.size = len(names)
        self.add = add
        self.mul = mul
        self.zero = zero
        self.one = one
        self.names = tuple(names)
        self.kind = kind
        self.parts = parts
        if self.size <= AXIOM_CHECK_BOUND:
            self._verify_axioms()

    def _verify_axioms(self):
        n = range(self.size)
        add, mul = self.add, self.mul
        for a in n:
            if add[self.zero][a] != a or mul[self.one][a] != a:
                raise ValueError("identities fail")
            for b in n:
                if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                    raise ValueError("commutativity fails")
        for a in n:
            for b in n:
                for c in n:
                    if add[add[a][b]][c] != add[a][add[b][c]]:
                        raise ValueError("additive associativity fails")
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                        raise ValueError("multiplicative associativity fails")
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                        raise ValueError("distributivity fails")
        for a in n:
            if not any(add[a][b] == self.zero for b in n):
                raise ValueError("negation fails")

    def neg(self, a: int) -> int:
        for b in range(self.size):
            if self.add[a][b] == self.zero:
                return b
        raise ValueError("no negative")

    def elements(self):
        return range(self.size)

    def name(self, a: int) -> str:
        return self.names[a]

    def unit_ideal(self) -> "FiniteIdeal":
        return FiniteIdeal(self, frozenset(self.elements()))

    def zero_ideal(self) -> "FiniteIdeal":
        return FiniteIdeal(self, frozenset({self.zero}))

    def __eq__(self, other):
        return (
            isinstance(other, FiniteRing)
            and self.add == other.add
            and self.mul == other.mul
            and self.names == other.names
        )

    def __hash__(self):
        return hash((self.names, self.zero, self.one))

    def __repr__(self):
        return f"FiniteRing({self.kind}, size={self.size})"


def zmod(n: int) -> FiniteRing:
    if n < 2:
        raise ValueError("modulus must be >= 2")
    add = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    mul = tuple(tuple((a * b) % n for b in range(n)) for a in range(n))
    return FiniteRing(add, mul, 0, 1 % n, tuple(str(a) for a in range(n)), f"Z/{n}")


def gf(p: int) -> FiniteRing:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    ring = zmod(p)
    return FiniteRing(ring.add, ring.mul, 0, 1, ring.names, f"GF({p})")


def product_ring(r1: FiniteRing, r2: FiniteRing) -> FiniteRing:
    pairs = list(itertools.product(range(r1.size), range(r2.size)))
    index = {pair: k for k, pair in enumerate(pairs)}
    add = tuple(
        tuple(index[(r1.add[a1][b1], r2.add[a2][b2])] for (b1, b2) in pairs)
        for (a1, a2) in pairs
    )
    mul = tuple(
        tuple(index[(r1.mul[a1][b1], r2.mul[a2][b2])] for (b1, b2) in pairs)
        for (a1, a2) in pairs
    )
    names = tuple(f"({r1.names[a]},{r2.names[b]})" for (a, b) in pairs)
    ring = FiniteRing(
        add, mul, index[(r1.zero, r2.zero)], index[(r1.one, r2.one)],
        names, f"{r1.kind}x{r2.kind}", (r1, r2),
    )
    return ring


@dataclass(frozen=True)
class CyclicModule:
    """The A-module Z/m with a . e = rep(a) * e, for rings ZMod-like carriers.

    Well-defined exactly when m divides the modulus the representatives live in;
    verified through the module axioms below.
    """

    ring: FiniteRing
    m: int
    action: tuple  # action[a][e]

    @classmethod
    def over_zmod(cls, ring: FiniteRing, m: int) -> "CyclicModule":
        # for Z/n (or GF(p)) carriers the name of an element is its representative
        reps = [int(s) for s in ring.names]
        action = tuple(tuple((reps[a] * e) % m for e in range(m)) for a in range(ring.size))
        mod = cls(ring, m, action)
        mod._verify()
        return mod

    def _verify(self):
        R, m = self.ring, self.m
        for a in R.elements():
            for e in range(m):
                for f in range(m):
                    if self.action[a][(e + f) % m] != (self.action[a][e] + self.action[a][f]) % m:
                        raise ValueError("action is not additive")
            for b in R.elements():
                for e in range(m):
                    if self.action[R.mul[a][b]][e] != self.action[a][self.action[b][e]]:
                        raise ValueError("action is not multiplicative")
                    if self.action[R.add[a][b]][e] != (self.action[a][e] + self.action[b][e]) % m:
                        raise ValueError("action is not linear")
        for e in range(m):
            if self.action[R.one][e] != e:
                raise ValueError("unit does not act trivially")

    def submodule_generated(self, gens) -> frozenset:
        cur = {0}
        frontier = list(gens)
        while frontier:
            e = frontier.pop()
            if e in cur:
                continue
            cur.add(e)
            for f in list(cur):
                s = (e + f) % self.m
                if s not in cur:
                    frontier.append(s)
            for a in self.ring.elements():
                s = self.action[a][e]
                if s not in cur:
                    frontier.append(s)
        return frozenset(cur)

    def submodules(self):
        subs = {frozenset({0})}
        for e in range(self.m):
            subs.add(self.submodule_generated([e]))
        changed = True
        while changed:
            changed = False
            for s1 in list(subs):
                for s2 in list(subs):
                    u = self.submodule_generated(s1 | s2)
                    if u not in subs:
                        subs.add(u)
                        changed = True
        return sorted(subs, key=lambda s: (len(s), sorted(s)))

    def is_simple(self) -> bool:
        return self.m > 1 and len(self.submodules()) == 2


def idealization(ring: FiniteRing, module: CyclicModule) -> FiniteRing:
    """The trivial extension A x E with (a,e)(b,f) = (ab, af + be)."""
    if module.ring != ring:
        raise ValueError("module is not over the given ring")
    pairs = list(itertools.product(range(ring.size), range(module.m)))
    index = {pair: k for k, pair in enumerate(pairs)}
    m = module.m
    add = tuple(
        tuple(index[(ring.add[a][b], (e + f) % m)] for (b, f) in pairs) for (a, e) in pairs
    )
    mul = tuple(
        tuple(
            index[(ring.mul[a][b], (module.action[a][f] + module.action[b][e]) % m)]
            for (b, f) in pairs
        )
        for (a, e) in pairs
    )
    names = tuple(f"({ring.names[a]},{e})" for (a, e) in pairs)
    return FiniteRing(
        add, mul, index[(ring.zero, 0)], index[(ring.one, 0)],
        names, f"{ring.kind}|x|Z/{m}", (ring, module),
    )


class FiniteIdeal:
    __slots__ = ("ring", "members")

    def __init__(self, ring: FiniteRing, members: frozenset):
        self.ring = ring
        self.members = members
        add, mul = ring.add, ring.mul
        for a in members:
            for b in members:
                if add[a][b] not in members:
                    raise ValueError("not closed under addition")
        for a in members:
            for x in ring.elements():
                if mul[a][x] not in members:
                    raise ValueError("not closed under ring multiplication")
        if ring.zero not in members:
            raise ValueError("must contain zero")

    @classmethod
    def generated(cls, ring: FiniteRing, gens) -> "FiniteIdeal":
        cur = {ring.zero}
        frontier = list(gens)
        while frontier:
            a = frontier.pop()
            if a in cur:
                continue
            cur.add(a)
            for b in list(cur):
                s = ring.add[a][b]
                if s not in cur:
                    frontier.append(s)
            for x in ring.elements():
                s = ring.mul[a][x]
                if s not in cur:
                    frontier.append(s)
        return cls(ring, frozenset(cur))

    def _require_same_ring(self, other: "FiniteIdeal"):
        if self.ring != other.ring:
            raise ValueError("ring mismatch")

    def __eq__(self, other):
        return (
            isinstance(other, FiniteIdeal)
            and self.ring == other.ring
            and self.members == other.members
        )

    def __hash__(self):
        return hash(self.members)

    def __le__(self, other: "FiniteIdeal") -> bool:
        self._require_same_ring(other)
        return self.members <= other.members

    def __lt__(self, other: "FiniteIdeal") -> bool:
        self._require_same_ring(other)
        return self.members < other.members

    def __mul__(self, other: "FiniteIdeal") -> "FiniteIdeal":
        return ideal_product(self, other)

    def __pow__(self, n: int) -> "FiniteIdeal":
        if n < 1:
            raise ValueError("power must be >= 1")
        acc = self
        for _ in range(n - 1):
            acc = ideal_product(acc, self)
        return acc

    def __add__(self, other: "FiniteIdeal") -> "FiniteIdeal":
        self._require_same_ring(other)
        return FiniteIdeal.generated(self.ring, self.members | other.members)

    def __and__(self, other: "FiniteIdeal") -> "FiniteIdeal":
        self._require_same_ring(other)
        return FiniteIdeal(self.ring, self.members & other.members)

    def colon(self, other: "FiniteIdeal") -> "FiniteIdeal":
        """{x : x * other <= self}, an ideal of the ring."""
        self._require_same_ring(other)
        mul = self.ring.mul
        mem = frozenset(
            x for x in self.ring.elements() if all(mul[x][b] in self.members for b in other.members)
        )
        return FiniteIdeal(self.ring, mem)

    def is_zero(self) -> bool:
        return self.members == {self.ring.zero}

    def is_nilpotent(self) -> bool:
        seen = set()
        cur = self
        while cur.members not in seen:
            seen.add(cur.members)
            if cur.is_zero():
                return True
            cur = cur * self
        return cur.is_zero()

    def first_equal_power(self, other: "FiniteIdeal") -> int | None:
        """Least n with self^n == other^n, decided exactly via pair periodicity."""
        self._require_same_ring(other)
        a, b = self, other
        n = 1
        seen = set()
        while (a.members, b.members) not in seen:
            seen.add((a.members, b.members))
            if a.members == b.members:
                return n
            a, b = a * self, b * other
            n += 1
        return None

    def reduction_index(self, larger: "FiniteIdeal") -> int | None:
        """Least n >= 0 with self * larger^n == larger^(n+1), decided exactly."""
        self._require_same_ring(larger)
        if self == larger:
            return 0
        power = larger
        n = 1
        seen = set()
        while power.members not in seen:
            seen.add(power.members)
            nxt = power * larger
            if (self * power) == nxt:
                return n
            power = nxt
            n += 1
        return None

    def sorted_names(self):
        return [self.ring.names[a] for a in sorted(self.members)]

    def __repr__(self):
        return "{" + ",".join(self.sorted_names()) + "}"


def ideal_product(i: FiniteIdeal, j: FiniteIdeal) -> FiniteIdeal:
    """Additive closure of the pairwise products."""
    i._require_same_ring(j)
    mul = i.ring.mul
    prods = {mul[a][b] for a in i.members for b in j.members}
    return FiniteIdeal.generated(i.ring, prods)


def enumerate_ideals(ring: FiniteRing, bound: int = AXIOM_CHECK_BOUND):
    """The complete ideal list: principal ideals closed under pairwise sums."""
    if ring.size > bound:
        raise ValueError(f"ring size {ring.size} exceeds the bound {bound}")
    ideals = {FiniteIdeal.generated(ring, [a]) for a in ring.elements()}
    changed = True
    while changed:
        changed = False
        current = list(ideals)
        for a in current:
            for b in current:
                s = a + b
                if s not in ideals:
                    ideals.add(s)
                    changed = True
    return sorted(ideals, key=lambda i: (len(i.members), sorted(i.members)))


@dataclass(frozen=True)
class Decomposition:
    """Projections of an idealization ideal: I_L x F_L with L <= I_L x F_L."""

    coeff_ideal: FiniteIdeal
    module_part: frozenset
    boxed: FiniteIdeal


def is_idealization(ring: FiniteRing) -> bool:
    return len(ring.parts) == 2 and isinstance(ring.parts[1], CyclicModule)


def decompose(ideal: FiniteIdeal) -> Decomposition:
    ring = ideal.ring
    if not is_idealization(ring):
        raise ValueError("decompose requires an idealization ring")
    base, module = ring.parts
    m = module.m
    pairs = list(itertools.product(range(base.size), range(m)))
    coeffs = frozenset(pairs[k][0] for k in ideal.members)
    mods = frozenset(pairs[k][1] for k in ideal.members)
    index = {pair: k for k, pair in enumerate(pairs)}
    coeff_ideal = FiniteIdeal(base, coeffs)
    boxed = FiniteIdeal(
        ring, frozenset(index[(a, e)] for a in coeffs for e in mods)
    )
    return Decomposition(coeff_ideal, mods, boxed)


def split_pair(ring: FiniteRing, coeff_ideal: FiniteIdeal, module_part) -> FiniteIdeal:
    """The ideal I x F of an idealization, from an ideal of A and a submodule of E."""
    base, module = ring.parts
    pairs = list(itertools.product(range(base.size), range(module.m)))
    index = {pair: k for k, pair in enumerate(pairs)}
    return FiniteIdeal(
        ring,
        frozenset(index[(a, e)] for a in coeff_ideal.members for e in module_part),
    )


def forall_powers_strict(smaller: FiniteIdeal, larger: FiniteIdeal) -> Verdict:
    """Decide 'smaller^n is strictly below larger^n for every n >= 1' exactly.

    The pair sequence lives in a finite set, so it is eventually periodic; the
    scan stops at the first revisited pair state.
    """
    smaller._require_same_ring(larger)
    if not smaller < larger:
        raise ValueError("expected a proper containment")
    n = smaller.first_equal_power(larger)
    if n is None:
        return Verdict.holds_exhaustive(scope="all exponents (pair sequence periodic)")
    return Verdict.fails_definitely(witness=smaller, n=n)


# -- split ideals of Z x (Z/m) ----------------------------------------------------


def _subgroup_closure(m: int, gens) -> frozenset:
    cur = {0}
    frontier = [g % m for g in gens]
    while frontier:
        e = frontier.pop()
        if e in cur:
            continue
        cur.add(e)
        for f in list(cur):
            s = (e + f) % m
            if s not in cur:
                frontier.append(s)
    return frozenset(cur)


@dataclass(frozen=True)
class SplitIdealZ:
    """The ideal nZ x F of Z x (Z/m); requires n . E <= F."""

    modulus: int
    n: int
    f_members: frozenset

    @classmethod
    def make(cls, modulus: int, n: int, f_gens) -> "SplitIdealZ":
        if n < 0:
            raise ValueError("base multiplier must be non-negative")
        f = _subgroup_closure(modulus, f_gens)
        ideal = cls(modulus, n, f)
        if not ideal._ideal_condition():
            raise ValueError("n . E must lie inside F")
        return ideal

    @classmethod
    def unit(cls, modulus: int) -> "SplitIdealZ":
        return cls.make(modulus, 1, range(modulus))

    def _ideal_condition(self) -> bool:
        return all((self.n * e) % self.modulus in self.f_members for e in range(self.modulus))

    def _require_same_module(self, other: "SplitIdealZ"):
        if self.modulus != other.modulus:
            raise ValueError("module mismatch")

    def __le__(self, other: "SplitIdealZ") -> bool:
        self._require_same_module(other)
        if self.n == 0:
            base_ok = True
        elif other.n == 0:
            base_ok = False
        else:
            base_ok = self.n % other.n == 0
        return base_ok and self.f_members <= other.f_members

    def __lt__(self, other: "SplitIdealZ") -> bool:
        return self <= other and self != other

    def __mul__(self, other: "SplitIdealZ") -> "SplitIdealZ":
        return split_product_z(self, other)

    def __pow__(self, k: int) -> "SplitIdealZ":
        if k < 1:
            raise ValueError("power must be >= 1")
        acc = self
        for _ in range(k - 1):
            acc = split_product_z(acc, self)
        return acc

    def __repr__(self):
        f = ",".join(str(e) for e in sorted(self.f_members))
        return f"{self.n}Z|x|{{{f}}}"


def split_product_z(l1: SplitIdealZ, l2: SplitIdealZ) -> SplitIdealZ:
    """(n1 Z x F1)(n2 Z x F2) = n1 n2 Z x (n1 F2 + n2 F1)."""
    l1._require_same_module(l2)
    m = l1.modulus
    gens = [(l1.n * f) % m for f in l2.f_members] + [(l2.n * f) % m for f in l1.f_members]
    return SplitIdealZ(m, l1.n * l2.n, _subgroup_closure(m, gens))

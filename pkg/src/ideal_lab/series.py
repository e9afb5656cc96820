"""Graded modules inside K[[X]] with eventually-constant coefficient subspaces.

A ProfileModule assigns a subspace of K to every exponent: a finite table for
exponents below the conductor and a constant tail beyond.  Because every module
of interest is eventually constant, products, powers and colons are computed
exactly on finite windows; there is no truncation error anywhere.

Houses numerical semigroup rings, D+M pullbacks inside K[[X]], and all their
ideals.
"""

from __future__ import annotations

from .exponents import CofiniteSet, numerical_semigroup
from .fields import BaseField, ExtensionField
from .subspaces import Subspace
from .verdicts import Verdict


class ProfileModule:
    __slots__ = ("ambient", "table", "tail")

    def __init__(self, ambient: ExtensionField, table, tail: Subspace):
        # normalize: conductor minimal, zero module has empty table + zero tail
        tbl = list(table)
        while tbl and tbl[-1] == tail:
            tbl.pop()
        self.ambient = ambient
        self.table = tuple(tbl)
        self.tail = tail

    @classmethod
    def make(cls, ambient: ExtensionField, table, tail: Subspace) -> "ProfileModule":
        return cls(ambient, table, tail)

    @classmethod
    def zero(cls, ambient: ExtensionField) -> "ProfileModule":
        return cls(ambient, (), Subspace.zero(ambient))

    @classmethod
    def from_exponents(cls, ambient: ExtensionField, spots: CofiniteSet) -> "ProfileModule":
        full = Subspace.full(ambient)
        zero = Subspace.zero(ambient)
        table = [full if n in spots else zero for n in range(spots.conductor)]
        return cls(ambient, table, full)

    @property
    def conductor(self) -> int:
        return len(self.table)

    def at(self, n: int) -> Subspace:
        if n < 0:
            return Subspace.zero(self.ambient)
        return self.table[n] if n < len(self.table) else self.tail

    def is_zero(self) -> bool:
        return not self.table and self.tail.is_zero()

    def offset(self) -> int | None:
        """Least exponent with a nonzero subspace; None for the zero module."""
        for n, s in enumerate(self.table):
            if not s.is_zero():
                return n
        if not self.tail.is_zero():
            return len(self.table)
        return None

    def exponent_set(self) -> CofiniteSet | None:
        """The cofinite exponent set, when every entry is zero-or-full (and the tail full)."""
        if not self.tail.is_full():
            return None
        spots = set()
        for n, s in enumerate(self.table):
            if s.is_full():
                spots.add(n)
            elif not s.is_zero():
                return None
        return CofiniteSet.make(spots, self.conductor)

    def _require_same_ambient(self, other: "ProfileModule"):
        if self.ambient != other.ambient:
            raise ValueError("ambient field mismatch")

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ProfileModule)
            and self.ambient == other.ambient
            and self.table == other.table
            and self.tail == other.tail
        )

    def __hash__(self):
        return hash((self.table, self.tail))

    def __le__(self, other: "ProfileModule") -> bool:
        return pm_contains(other, self)

    def __lt__(self, other: "ProfileModule") -> bool:
        return pm_contains(other, self) and self != other

    # -- arithmetic ------------------------------------------------------------

    def __mul__(self, other: "ProfileModule") -> "ProfileModule":
        return pm_product(self, other)

    def __pow__(self, n: int) -> "ProfileModule":
        return pm_power(self, n)

    def __add__(self, other: "ProfileModule") -> "ProfileModule":
        return pm_sum(self, other)

    def __and__(self, other: "ProfileModule") -> "ProfileModule":
        return pm_intersect(self, other)

    def colon(self, other: "ProfileModule") -> "ProfileModule":
        return pm_colon(self, other)

    def __repr__(self):
        spots = self.exponent_set()
        if spots is not None:
            return f"exps{spots}"
        cells = ",".join(f"{n}:{s!r}" for n, s in enumerate(self.table))
        return f"profile[{cells};tail={self.tail!r}]"


def pm_equal(p: ProfileModule, q: ProfileModule) -> bool:
    p._require_same_ambient(q)
    return p == q


def pm_contains(p: ProfileModule, q: ProfileModule) -> bool:
    """Whether q(n) <= p(n) at every exponent."""
    p._require_same_ambient(q)
    bound = max(p.conductor, q.conductor)
    return all(q.at(n) <= p.at(n) for n in range(bound + 1))


def pm_sum(p: ProfileModule, q: ProfileModule) -> ProfileModule:
    p._require_same_ambient(q)
    bound = max(p.conductor, q.conductor)
    table = [p.at(n) + q.at(n) for n in range(bound)]
    return ProfileModule(p.ambient, table, p.tail + q.tail)


def pm_intersect(p: ProfileModule, q: ProfileModule) -> ProfileModule:
    p._require_same_ambient(q)
    bound = max(p.conductor, q.conductor)
    table = [p.at(n) & q.at(n) for n in range(bound)]
    return ProfileModule(p.ambient, table, p.tail & q.tail)


def pm_product(p: ProfileModule, q: ProfileModule) -> ProfileModule:
    """(p*q)(n) = sum over i+j=n of p(i) q(j); exact, conductor <= c_p + c_q."""
    p._require_same_ambient(q)
    if p.is_zero() or q.is_zero():
        return ProfileModule.zero(p.ambient)
    bound = p.conductor + q.conductor
    table = []
    for n in range(bound + 1):
        acc = Subspace.zero(p.ambient)
        for i in range(n + 1):
            pi = p.at(i)
            qj = q.at(n - i)
            if pi.is_zero() or qj.is_zero():
                continue
            acc = acc + (pi * qj)
        table.append(acc)
    return ProfileModule(p.ambient, table[:bound], table[bound])


def pm_power(p: ProfileModule, n: int) -> ProfileModule:
    if n < 1:
        raise ValueError("power must be >= 1")
    acc = p
    for _ in range(n - 1):
        acc = pm_product(acc, p)
    return acc


def _colon_entry(p: ProfileModule, q: ProfileModule, n: int, window: int) -> Subspace:
    acc = Subspace.full(p.ambient)
    for m in range(window):
        qm = q.at(m)
        if qm.is_zero():
            continue
        acc = acc & p.at(n + m).colon(qm)
        if acc.is_zero():
            break
    return acc


def pm_colon(p: ProfileModule, q: ProfileModule) -> ProfileModule:
    """Graded colon {x X^n : x X^n * q <= p}, computed on a verified finite window."""
    p._require_same_ambient(q)
    if q.is_zero():
        raise ValueError("colon by zero module")
    window = p.conductor + q.conductor + 1
    recheck = window + q.conductor + 1
    table = []
    for n in range(p.conductor + 1):
        first = _colon_entry(p, q, n, window)
        wider = _colon_entry(p, q, n, recheck)
        if first != wider:
            raise ArithmeticError("inexact colon")
        table.append(first)
    return ProfileModule(p.ambient, table[: p.conductor], table[p.conductor])


def pm_is_ring_profile(p: ProfileModule) -> bool:
    """1 in p(0) and p(i) p(j) <= p(i+j); finite test by tail constancy."""
    if not p.at(0).contains_one():
        return False
    bound = 2 * p.conductor + 1
    for i in range(bound + 1):
        for j in range(i, bound + 1):
            if not (p.at(i) * p.at(j)) <= p.at(i + j):
                return False
    return True


def pm_is_module_over(p: ProfileModule, ring: "SeriesRing") -> bool:
    r = ring.profile
    p._require_same_ambient(r)
    bound = r.conductor + p.conductor + 1
    for i in range(bound + 1):
        ri = r.at(i)
        if ri.is_zero():
            continue
        for j in range(bound + 1):
            pj = p.at(j)
            if pj.is_zero():
                continue
            if not (ri * pj) <= p.at(i + j):
                return False
    return True


class SeriesRing:
    """A ring profile: 1 in R(0) and R(i)R(j) <= R(i+j), verified at construction."""

    __slots__ = ("profile",)

    def __init__(self, profile: ProfileModule):
        if not pm_is_ring_profile(profile):
            raise ValueError("profile is not multiplicatively closed with 1")
        self.profile = profile

    @property
    def ambient(self) -> ExtensionField:
        return self.profile.ambient

    def unit_ideal(self) -> ProfileModule:
        return self.profile

    def ideal(self, profile: ProfileModule) -> ProfileModule:
        """Validate that the profile is an ideal of this ring (a submodule of R)."""
        if not pm_contains(self.profile, profile):
            raise ValueError("not contained in the ring")
        if not pm_is_module_over(profile, self):
            raise ValueError("not closed under multiplication by the ring")
        return profile

    def __eq__(self, other):
        return isinstance(other, SeriesRing) and self.profile == other.profile

    def __hash__(self):
        return hash(self.profile)

    def __repr__(self):
        return f"SeriesRing({self.profile!r})"


def full_series_ring(ambient: ExtensionField) -> SeriesRing:
    """K[[X]] itself."""
    return SeriesRing(ProfileModule(ambient, (), Subspace.full(ambient)))


def semigroup_ring(ambient: ExtensionField, gens) -> SeriesRing:
    """k[[X^a, X^b, ...]] for coprime exponents, over the given coefficient field."""
    return SeriesRing(ProfileModule.from_exponents(ambient, numerical_semigroup(gens)))


def d_plus_m(ambient: ExtensionField, d_basis=None) -> SeriesRing:
    """D + X K[[X]] with D the span of d_basis (default: the prime subfield)."""
    if d_basis is None:
        d0 = Subspace.line(ambient, ambient.one)
    else:
        d0 = Subspace.span(ambient, d_basis)
    return SeriesRing(ProfileModule(ambient, (d0,), Subspace.full(ambient)))


def principal_module(ring: SeriesRing, x, offset: int) -> ProfileModule:
    """x X^offset R as a profile."""
    line = monomial_module(ring.ambient, x, offset)
    return pm_product(line, ring.profile)


def monomial_module(ambient: ExtensionField, x, offset: int) -> ProfileModule:
    table = [Subspace.zero(ambient)] * offset + [Subspace.line(ambient, x)]
    return ProfileModule(ambient, table, Subspace.zero(ambient))


def shift_module(ambient: ExtensionField, offset: int) -> ProfileModule:
    """X^offset K[[X]]."""
    table = [Subspace.zero(ambient)] * offset
    return ProfileModule(ambient, table, Subspace.full(ambient))


def endomorphism_ring(ideal: ProfileModule, ring: SeriesRing) -> SeriesRing:
    """(I : I), which always contains R."""
    if ideal.is_zero():
        raise ValueError("endomorphism ring of the zero module")
    return SeriesRing(pm_colon(ideal, ideal))


def is_strongly_stable(ideal: ProfileModule, ring: SeriesRing) -> Verdict:
    """Whether the ideal is principal over its endomorphism ring T = (I:I).

    Searches monomial generators x X^o with o the offset and x running over the
    RREF basis of I(o).  T(0) is a field, so if any single generator works then
    some basis vector works: the basis search is complete.
    """
    if ideal.is_zero():
        raise ValueError("zero ideal")
    t_ring = endomorphism_ring(ideal, ring)
    o = ideal.offset()
    tried = []
    for x in ideal.at(o).rows:
        candidate = pm_product(monomial_module(ideal.ambient, x, o), t_ring.profile)
        tried.append((ideal.ambient.element_str(x), o))
        if candidate == ideal:
            return Verdict.holds_exhaustive(
                witness=(x, o),
                scope="monomial generators over the endomorphism ring",
                transcript=tuple(tried),
            )
    return Verdict.fails_definitely(
        witness=None,
        scope="no monomial generator x X^o with I = x X^o (I:I)",
        transcript=tuple(tried),
    )


def submodule_power_escapes(w: Subspace, n_max: int) -> Verdict:
    """Smallest n <= n_max with w^n the whole field, if any.

    Fails(n) reports the escape; a chain that stabilizes strictly below the
    full field can never escape, so that case is exhaustive.
    """
    if not w.contains_one():
        raise ValueError("subspace must contain 1")
    if w.is_full():
        raise ValueError("subspace must be proper")
    cur = w
    for n in range(2, n_max + 1):
        nxt = cur * w
        if nxt.is_full():
            return Verdict.fails_definitely(witness=w, n=n, scope="power reached the full field")
        if nxt == cur:
            return Verdict.holds_exhaustive(
                scope=f"powers stabilized strictly below the full field at n={n}"
            )
        cur = nxt
    return Verdict.holds_bounded(n_max=n_max, scope="no power reached the full field")


# -- candidate enumeration ------------------------------------------------------


def _assert_window(ideal: ProfileModule, window: int):
    if window < ideal.conductor:
        raise ValueError("window must be at least the conductor of the ideal")


def enumerate_submodules(ideal: ProfileModule, ring: SeriesRing, window: int):
    """All nonzero R-submodules J <= I agreeing with I at and beyond the window.

    Exhaustive; requires the per-exponent subspace lattices to be finite (prime
    base field, or ambient of degree <= 1).  Includes I itself; callers that
    need proper submodules filter on equality.
    """
    _assert_window(ideal, window)
    choices = [ideal.at(n).all_subspaces() for n in range(window)]
    r = ring.profile
    out = []

    def extend(partial):
        n = len(partial)
        if n == window:
            cand = ProfileModule(ideal.ambient, list(partial), ideal.tail)
            if not cand.is_zero() and pm_is_module_over(cand, ring):
                out.append(cand)
            return
        for choice in choices[n]:
            ok = True
            for j in range(n + 1):
                pj = partial[j] if j < n else choice
                if pj.is_zero():
                    continue
                ri = r.at(n - j)
                if ri.is_zero():
                    continue
                if not (ri * pj) <= choice:
                    ok = False
                    break
            if ok:
                extend(partial + [choice])

    extend([])
    return out


def enumerate_supermodules(
    ideal: ProfileModule, ring: SeriesRing, window: int, ambient_module: ProfileModule | None = None
):
    """All R-submodules J with I <= J <= ambient agreeing with I beyond the window.

    The default ambient is the whole of K[[X]]; this is the candidate pool for
    upper-big and C-ideal checks.  Includes I itself.
    """
    _assert_window(ideal, window)
    if ambient_module is None:
        ambient_module = ProfileModule(ideal.ambient, (), Subspace.full(ideal.ambient))
    choices = [
        ambient_module.at(n).subspaces_between(ideal.at(n)) for n in range(window)
    ]
    r = ring.profile
    out = []

    def extend(partial):
        n = len(partial)
        if n == window:
            cand = ProfileModule(ideal.ambient, list(partial), ideal.tail)
            if pm_is_module_over(cand, ring):
                out.append(cand)
            return
        for choice in choices[n]:
            ok = True
            for j in range(n + 1):
                pj = partial[j] if j < n else choice
                if pj.is_zero():
                    continue
                ri = r.at(n - j)
                if ri.is_zero():
                    continue
                if not (ri * pj) <= choice:
                    ok = False
                    break
            if ok:
                extend(partial + [choice])

    extend([])
    return out

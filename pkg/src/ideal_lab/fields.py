"""Exact coefficient fields: the rationals, prime fields, and small simple extensions.

Scalars are plain values (``fractions.Fraction`` over Q, reduced ints over F_p);
the field object owns the arithmetic.  Extension elements are coordinate tuples
in a fixed basis.  No floating point anywhere.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class BaseField:
    """The rationals (p is None) or the prime field F_p."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def coerce(self, v):
        if self.p is None:
            return Fraction(v)
        return int(v) % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return Fraction(1) / a
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    def elements(self):
        """Iterate the whole field; only available for prime fields."""
        if self.p is None:
            raise ValueError("the rationals are infinite")
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, BaseField) and self.p == other.p

    def __hash__(self):
        return hash(("BaseField", self.p))

    def __repr__(self):
        return "Q" if self.p is None else f"F{self.p}"


RATIONALS = BaseField()


def prime_field(p: int) -> BaseField:
    return BaseField(p)


def _poly_eval(coeffs, x, F: BaseField):
    acc = F.zero
    for c in reversed(coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def _int_divisors(n: int):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def _rational_root_list(coeffs):
    """All rational roots of a polynomial with rational coefficients."""
    from math import lcm

    den = lcm(*[Fraction(c).denominator for c in coeffs]) if coeffs else 1
    ints = [int(Fraction(c) * den) for c in coeffs]
    while ints and ints[-1] == 0:
        ints.pop()
    if not ints:
        return [Fraction(0)]
    roots = []
    while ints[0] == 0:  # factor out x
        roots.append(Fraction(0))
        ints = ints[1:]
        if len(ints) == 1:
            return sorted(set(roots))
    a0, lead = ints[0], ints[-1]
    for num in _int_divisors(a0):
        for d in _int_divisors(lead):
            for s in (1, -1):
                x = Fraction(s * num, d)
                if _poly_eval(ints, x, RATIONALS) == 0:
                    roots.append(x)
    return sorted(set(roots))


def _rational_roots(coeffs) -> bool:
    """True iff the monic rational polynomial has a rational root."""
    return bool(_rational_root_list(coeffs))


def _is_rational_square(q: Fraction) -> bool:
    if q < 0:
        return False
    from math import isqrt

    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def _quartic_splits_in_quadratics(coeffs) -> bool:
    """Whether x^4+ax^3+bx^2+cx+d (monic, rational) factors into two rational quadratics.

    Depress to y^4+py^2+qy+r; a factorization (y^2+ay+b)(y^2-ay+c) exists iff
    either q=0 and p^2-4r is a rational square, or the resolvent cubic
    z^3+2pz^2+(p^2-4r)z-q^2 has a nonzero rational root that is a square.
    """
    c0, c1, c2, c3 = (Fraction(x) for x in coeffs[:4])
    s = c3 / 4
    # g(y) = f(y - s) = y^4 + p y^2 + q y + r
    p = c2 - 6 * s * s
    q = c1 - 2 * c2 * s + 8 * s**3
    r = c0 - c1 * s + c2 * s * s - 3 * s**4
    if q == 0 and _is_rational_square(p * p - 4 * r):
        return True
    cubic = [-q * q, p * p - 4 * r, 2 * p, Fraction(1)]
    return any(z != 0 and _is_rational_square(z) for z in _rational_root_list(cubic))


def _is_irreducible(coeffs, F: BaseField) -> bool:
    """Irreducibility of a monic polynomial of degree 2..4 over F."""
    deg = len(coeffs) - 1
    if F.p is not None:
        has_root = any(_poly_eval(coeffs, x, F) == 0 for x in F.elements())
        if has_root:
            return False
        if deg < 4:
            return True
        # quartic: also rule out irreducible-quadratic factors
        for b in F.elements():
            for c in F.elements():
                # divide coeffs by x^2 + b x + c and test zero remainder
                rem = list(coeffs)
                for i in range(deg, 1, -1):
                    lead = rem[i]
                    if lead == 0:
                        continue
                    rem[i] = 0
                    rem[i - 1] = F.sub(rem[i - 1], F.mul(lead, b))
                    rem[i - 2] = F.sub(rem[i - 2], F.mul(lead, c))
                if rem[0] == 0 and rem[1] == 0:
                    return False
        return True
    if _rational_roots(coeffs):
        return False
    if deg < 4:
        return True
    return not _quartic_splits_in_quadratics(coeffs)


class ExtensionField:
    """A simple extension K of a base field, as a structure-constant algebra.

    Elements are length-``degree`` coordinate tuples over the base.  The first
    basis vector is the unit.  Built either from a monic irreducible minimal
    polynomial (degree <= 4) or from an explicit multiplication table.
    """

    __slots__ = ("base", "degree", "table", "names", "minpoly", "_span_cache", "_prod_cache")

    def __init__(self, base: BaseField, table, names, minpoly=None):
        self.base = base
        self.degree = len(names)
        self.table = table  # table[i][j] = coordinates of basis_i * basis_j
        self.names = tuple(names)
        self.minpoly = minpoly
        self._span_cache = {}
        self._prod_cache = {}
        self._check_structure()

    # -- construction ------------------------------------------------------

    @classmethod
    def from_minpoly(cls, base: BaseField, coeffs, name: str = "t") -> "ExtensionField":
        coeffs = tuple(base.coerce(c) for c in coeffs)
        deg = len(coeffs) - 1
        if deg < 1:
            raise ValueError("minimal polynomial must have degree >= 1")
        if coeffs[-1] != base.one:
            raise ValueError("minimal polynomial must be monic")
        if deg > 4:
            raise ValueError("extensions of degree > 4 are not supported")
        if deg >= 2 and not _is_irreducible(coeffs, base):
            raise ValueError("minimal polynomial is reducible")
        # powers of the generator t^k for k = 0..2deg-2, reduced mod minpoly
        pows = []
        cur = [base.one] + [base.zero] * (deg - 1)
        for _ in range(2 * deg - 1):
            pows.append(tuple(cur))
            nxt = [base.zero] + cur[: deg - 1]
            lead = cur[deg - 1]
            if lead != 0:
                for i in range(deg):
                    nxt[i] = base.sub(nxt[i], base.mul(lead, coeffs[i]))
            cur = nxt
        table = tuple(tuple(pows[i + j] for j in range(deg)) for i in range(deg))
        if deg == 1:
            names = ("1",)
        else:
            names = ("1", name) + tuple(f"{name}^{k}" for k in range(2, deg))
        return cls(base, table, names, minpoly=coeffs)

    @classmethod
    def from_table(cls, base: BaseField, table, names) -> "ExtensionField":
        deg = len(names)
        tab = tuple(
            tuple(tuple(base.coerce(c) for c in table[i][j]) for j in range(deg))
            for i in range(deg)
        )
        return cls(base, tab, names)

    @classmethod
    def line(cls, base: BaseField) -> "ExtensionField":
        """The base field itself, as a degree-1 extension."""
        return cls.from_minpoly(base, (base.zero, base.one))

    def _check_structure(self):
        d = self.degree
        if d < 1 or len(self.table) != d or any(len(r) != d for r in self.table):
            raise ValueError("malformed multiplication table")
        one = self.one
        for i in range(d):
            if self.mul(one, self.unit(i)) != self.unit(i):
                raise ValueError("first basis vector must act as the unit")
        for i in range(d):
            for j in range(i):
                if self.table[i][j] != self.table[j][i]:
                    raise ValueError("multiplication table is not commutative")
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    lhs = self.mul(self.mul(self.unit(i), self.unit(j)), self.unit(k))
                    rhs = self.mul(self.unit(i), self.mul(self.unit(j), self.unit(k)))
                    if lhs != rhs:
                        raise ValueError("multiplication table is not associative")

    # -- element arithmetic --------------------------------------------------

    @property
    def zero(self):
        return (self.base.zero,) * self.degree

    @property
    def one(self):
        return (self.base.one,) + (self.base.zero,) * (self.degree - 1)

    def unit(self, i: int):
        return tuple(self.base.one if j == i else self.base.zero for j in range(self.degree))

    def coerce_vector(self, seq):
        v = tuple(self.base.coerce(c) for c in seq)
        if len(v) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(v)}")
        return v

    def add(self, u, v):
        B = self.base
        return tuple(B.add(a, b) for a, b in zip(u, v))

    def sub(self, u, v):
        B = self.base
        return tuple(B.sub(a, b) for a, b in zip(u, v))

    def scale(self, c, u):
        B = self.base
        return tuple(B.mul(c, a) for a in u)

    def mul(self, u, v):
        B = self.base
        acc = [B.zero] * self.degree
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            row = self.table[i]
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                c = B.mul(ui, vj)
                basis_prod = row[j]
                for k, bk in enumerate(basis_prod):
                    if bk != 0:
                        acc[k] = B.add(acc[k], B.mul(c, bk))
        return tuple(acc)

    def inv(self, u):
        from . import linalg

        if self.is_zero(u):
            raise ZeroDivisionError("inverse of zero")
        rows = [list(self.mul(self.unit(j), u)) for j in range(self.degree)]
        # solve x . rows = one  (x_j are the coordinates of the inverse)
        sol = linalg.solve([list(col) for col in zip(*rows)], list(self.one), self.base)
        if sol is None:
            raise ZeroDivisionError("element is not invertible")
        return tuple(sol)

    def is_zero(self, u) -> bool:
        return all(c == 0 for c in u)

    def element_str(self, u) -> str:
        parts = []
        for c, name in zip(u, self.names):
            if c == 0:
                continue
            if name == "1":
                parts.append(str(c))
            elif c == self.base.one:
                parts.append(name)
            else:
                parts.append(f"{c}*{name}")
        return " + ".join(parts) if parts else "0"

    def all_elements(self):
        """Iterate every element; only for prime base fields."""
        if self.base.p is None:
            raise ValueError("field is infinite")
        return (tuple(v) for v in itertools.product(self.base.elements(), repeat=self.degree))

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and self.base == other.base
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.base, self.table))

    def __repr__(self):
        gens = ", ".join(self.names[1:]) or "1"
        return f"{self.base!r}({gens})" if self.degree > 1 else repr(self.base)


def sqrt2_sqrt3_field(base: BaseField = RATIONALS) -> ExtensionField:
    """The degree-4 algebra with basis {1, r2, r3, r6}, r2^2=2, r3^2=3, r2*r3=r6."""
    z, o = base.zero, base.one
    two, three, six = base.coerce(2), base.coerce(3), base.coerce(6)
    e = lambda *cs: tuple(base.coerce(c) for c in cs)
    table = (
        (e(1, 0, 0, 0), e(0, 1, 0, 0), e(0, 0, 1, 0), e(0, 0, 0, 1)),
        (e(0, 1, 0, 0), e(2, 0, 0, 0), e(0, 0, 0, 1), e(0, 0, 2, 0)),
        (e(0, 0, 1, 0), e(0, 0, 0, 1), e(3, 0, 0, 0), e(0, 3, 0, 0)),
        (e(0, 0, 0, 1), e(0, 0, 2, 0), e(0, 3, 0, 0), e(6, 0, 0, 0)),
    )
    return ExtensionField(base, table, ("1", "r2", "r3", "r6"))

"""Subspaces of an extension field over its base, in unique RREF form.

Equality of subspaces is representation equality: the RREF basis is a canonical
form, so `==` and hashing are exact and cheap.  Products and colons are the
field-level building blocks of all graded module arithmetic.
"""

from __future__ import annotations

import itertools

from . import linalg
from .fields import ExtensionField


class Subspace:
    __slots__ = ("field", "rows", "pivots")

    def __init__(self, field: ExtensionField, rows, pivots):
        self.field = field
        self.rows = rows
        self.pivots = pivots

    @classmethod
    def span(cls, field: ExtensionField, vectors) -> "Subspace":
        vecs = [field.coerce_vector(v) for v in vectors]
        rows, pivots = linalg.rref(vecs, field.base)
        return cls(field, rows, pivots)

    @classmethod
    def zero(cls, field: ExtensionField) -> "Subspace":
        return cls(field, (), ())

    @classmethod
    def full(cls, field: ExtensionField) -> "Subspace":
        return cls.span(field, [field.unit(i) for i in range(field.degree)])

    @classmethod
    def line(cls, field: ExtensionField, x) -> "Subspace":
        return cls.span(field, [x])

    # -- basic structure -----------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def is_full(self) -> bool:
        return self.dim == self.field.degree

    def contains_vector(self, v) -> bool:
        return linalg.in_span(self.field.coerce_vector(v), self.rows, self.pivots, self.field.base)

    def contains_one(self) -> bool:
        return self.contains_vector(self.field.one)

    def _require_same_ambient(self, other: "Subspace"):
        if self.field != other.field:
            raise ValueError("ambient field mismatch")

    def __le__(self, other: "Subspace") -> bool:
        self._require_same_ambient(other)
        return all(linalg.in_span(r, other.rows, other.pivots, self.field.base) for r in self.rows)

    def __lt__(self, other: "Subspace") -> bool:
        return self <= other and self.rows != other.rows

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace) and self.field == other.field and self.rows == other.rows
        )

    def __hash__(self):
        return hash(self.rows)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "Subspace") -> "Subspace":
        self._require_same_ambient(other)
        return Subspace.span(self.field, list(self.rows) + list(other.rows))

    def __mul__(self, other: "Subspace") -> "Subspace":
        self._require_same_ambient(other)
        cache = self.field._prod_cache
        key = (self.rows, other.rows) if self.rows <= other.rows else (other.rows, self.rows)
        hit = cache.get(key)
        if hit is not None:
            return hit
        K = self.field
        prods = [K.mul(u, w) for u in self.rows for w in other.rows]
        out = Subspace.span(K, prods)
        cache[key] = out
        return out

    def power(self, n: int) -> "Subspace":
        if n < 1:
            raise ValueError("power must be >= 1")
        acc = self
        for _ in range(n - 1):
            acc = acc * self
        return acc

    def annihilator_rows(self):
        """Basis of the functionals vanishing on this subspace."""
        return linalg.kernel(self.rows, self.field.degree, self.field.base)

    def colon(self, other: "Subspace") -> "Subspace":
        """{x in K : x * other <= self}; the full field when other is zero."""
        self._require_same_ambient(other)
        K, B = self.field, self.field.base
        if other.is_zero():
            return Subspace.full(K)
        ann = self.annihilator_rows()
        if not ann:  # self is everything
            return Subspace.full(K)
        constraints = []
        for w in other.rows:
            # row i of M_w is e_i * w; condition: (x^T M_w) . f = 0 for f in ann
            m_w = [K.mul(K.unit(i), w) for i in range(K.degree)]
            for f in ann:
                constraints.append(
                    tuple(
                        _dot(row, f, B)
                        for row in m_w
                    )
                )
        basis = linalg.kernel(constraints, K.degree, B)
        return Subspace.span(K, basis)

    def __and__(self, other: "Subspace") -> "Subspace":
        self._require_same_ambient(other)
        ann = list(self.annihilator_rows()) + list(other.annihilator_rows())
        basis = linalg.kernel(ann, self.field.degree, self.field.base)
        return Subspace.span(self.field, basis)

    def complement_in(self, bigger: "Subspace") -> "Subspace":
        """A direct complement of self inside bigger (self <= bigger required)."""
        self._require_same_ambient(bigger)
        rows = list(self.rows)
        pivots = None
        extra = []
        cur, cur_piv = linalg.rref(rows, self.field.base)
        for r in bigger.rows:
            if not linalg.in_span(r, cur, cur_piv, self.field.base):
                extra.append(r)
                cur, cur_piv = linalg.rref(list(cur) + [r], self.field.base)
        return Subspace.span(self.field, extra)

    # -- enumeration -----------------------------------------------------------

    def all_subspaces(self):
        """Every subspace of this space; requires a finite lattice.

        Finite when the base field is prime, or trivially when dim <= 1.
        """
        key = ("lattice", self.rows)
        cached = self.field._span_cache.get(key)
        if cached is not None:
            return cached
        K, B = self.field, self.field.base
        k = self.dim
        if B.p is None and k > 1:
            raise ValueError("infinite subspace lattice; supply candidates")
        out = [Subspace.zero(K)]
        if k == 0:
            pass
        elif B.p is None:  # k == 1 over Q
            out.append(self)
        else:
            for r in range(1, k + 1):
                for piv in itertools.combinations(range(k), r):
                    free_cols = [
                        (i, c)
                        for i in range(r)
                        for c in range(piv[i] + 1, k)
                        if c not in piv
                    ]
                    for values in itertools.product(B.elements(), repeat=len(free_cols)):
                        local = [[B.zero] * k for _ in range(r)]
                        for i in range(r):
                            local[i][piv[i]] = B.one
                        for (i, c), v in zip(free_cols, values):
                            local[i][c] = v
                        vecs = [
                            _combine(coeffs, self.rows, K) for coeffs in local
                        ]
                        out.append(Subspace.span(K, vecs))
        result = tuple(out)
        self.field._span_cache[key] = result
        return result

    def subspaces_between(self, smaller: "Subspace"):
        """Every subspace U with smaller <= U <= self."""
        comp = smaller.complement_in(self)
        return tuple(smaller + s for s in comp.all_subspaces())

    def __repr__(self):
        if self.is_zero():
            return "span{}"
        body = ", ".join(self.field.element_str(r) for r in self.rows)
        return "span{" + body + "}"


def _dot(u, v, B):
    acc = B.zero
    for a, b in zip(u, v):
        if a != 0 and b != 0:
            acc = B.add(acc, B.mul(a, b))
    return acc


def _combine(coeffs, rows, K: ExtensionField):
    acc = K.zero
    for c, r in zip(coeffs, rows):
        if c != 0:
            acc = K.add(acc, K.scale(c, r))
    return acc


# Named operation surface ------------------------------------------------------


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    """Smallest subspace containing both."""
    return u + w


def subspace_product(u: Subspace, w: Subspace) -> Subspace:
    """Span of all pairwise field products of basis vectors."""
    return u * w


def subspace_colon(u: Subspace, w: Subspace) -> Subspace:
    """{x in K : x * w <= u}."""
    return u.colon(w)


def subspace_intersect(u: Subspace, w: Subspace) -> Subspace:
    return u & w

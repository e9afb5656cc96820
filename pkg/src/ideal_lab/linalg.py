"""Tiny exact linear algebra over a BaseField: RREF, kernels, linear solves."""

from __future__ import annotations


def rref(rows, F):
    """Reduced row-echelon form. Returns (rows, pivot_columns); zero rows dropped."""
    m = [list(r) for r in rows]
    if not m:
        return (), ()
    width = len(m[0])
    pivots = []
    r = 0
    for col in range(width):
        pivot = None
        for i in range(r, len(m)):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = F.inv(m[r][col])
        m[r] = [F.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    out = tuple(tuple(row) for row in m[:r])
    return out, tuple(pivots)


def reduce_vector(vec, rows, pivots, F):
    """Residue of vec after elimination against the RREF rows."""
    v = list(vec)
    for row, col in zip(rows, pivots):
        if v[col] != 0:
            f = v[col]
            v = [F.sub(a, F.mul(f, b)) for a, b in zip(v, row)]
    return tuple(v)


def in_span(vec, rows, pivots, F) -> bool:
    return all(c == 0 for c in reduce_vector(vec, rows, pivots, F))


def kernel(rows, width, F):
    """Basis of {x : M x = 0} for the matrix M with the given rows."""
    red, pivots = rref(rows, F)
    pivot_set = set(pivots)
    free = [c for c in range(width) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [F.zero] * width
        v[fc] = F.one
        for row, pc in zip(red, pivots):
            v[pc] = F.neg(row[fc])
        basis.append(tuple(v))
    return basis


def solve(matrix, rhs, F):
    """One solution x of M x = rhs, or None. M given as list of rows."""
    if not matrix:
        return () if all(c == 0 for c in rhs) else None
    width = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, pivots = rref(aug, F)
    x = [F.zero] * width
    for row, col in zip(red, pivots):
        if col == width:
            return None  # inconsistent
        x[col] = row[width]
    return tuple(x)

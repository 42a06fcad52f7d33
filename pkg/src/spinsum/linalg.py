"""Dense exact linear algebra over the scalar field.

Matrices are lists of lists of ExactScalar. Sizes here are tiny (at most a
few dozen rows), so plain Gaussian elimination with exact division is the
right tool.
"""

from __future__ import annotations

from .scalars import ExactScalar

_ZERO = ExactScalar.zero()
_ONE = ExactScalar.one()


def identity_matrix(d):
    return [[_ONE if i == j else _ZERO for j in range(d)] for i in range(d)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = [[_ZERO] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        row = out[i]
        for t in range(k):
            c = ai[t]
            if not c.is_zero():
                bt = b[t]
                for j in range(m):
                    if not bt[j].is_zero():
                        row[j] = row[j] + c * bt[j]
    return out


def mat_vec(a, v):
    return [sum((c * x for c, x in zip(row, v) if not c.is_zero()), _ZERO) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_inverse(a):
    """Gauss-Jordan; raises ValueError on a singular matrix."""
    d = len(a)
    work = [list(row) + ident_row for row, ident_row in zip(a, identity_matrix(d))]
    for col in range(d):
        piv = None
        for r in range(col, d):
            if not work[r][col].is_zero():
                piv = r
                break
        if piv is None:
            raise ValueError("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        inv_p = work[col][col].inverse()
        work[col] = [c * inv_p for c in work[col]]
        for r in range(d):
            if r != col and not work[r][col].is_zero():
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return [row[d:] for row in work]


def rref(a):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    rows = [list(r) for r in a]
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, m):
            if not rows[i][col].is_zero():
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv_p = rows[r][col].inverse()
        rows[r] = [c * inv_p for c in rows[r]]
        for i in range(m):
            if i != r and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    return rows, pivots


def nullspace(a):
    """Basis of the right nullspace as a list of vectors."""
    if not a:
        return []
    rows, pivots = rref(a)
    n = len(a[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [_ZERO] * n
        v[fc] = _ONE
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


def rank(a):
    if not a:
        return 0
    _, pivots = rref(a)
    return len(pivots)

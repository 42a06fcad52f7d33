# cython: language_level=3
"""Cython twin of _poly_py. Same semantics, typed loop indices.

Coefficients stay Python ints (arbitrary precision), so only the loop
bookkeeping is compiled; that is already most of the win at these sizes.
"""


def mul_reduce(a, b, rows, Py_ssize_t deg):
    cdef Py_ssize_t i, j, k
    if deg == 1:
        return [a[0] * b[0]]
    cdef list prod = [0] * (2 * deg - 1)
    cdef object ai, bj, c, rj
    for i in range(deg):
        ai = a[i]
        if ai:
            for j in range(deg):
                bj = b[j]
                if bj:
                    prod[i + j] = prod[i + j] + ai * bj
    cdef list out = prod[:deg]
    cdef list row
    for k in range(deg, 2 * deg - 1):
        c = prod[k]
        if c:
            row = rows[k]
            for j in range(deg):
                rj = row[j]
                if rj:
                    out[j] = out[j] + c * rj
    return out


def add_scaled(a, b, ca, cb):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = ca * a[i] + cb * b[i]
    return out


def scale(a, c):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = c * a[i]
    return out

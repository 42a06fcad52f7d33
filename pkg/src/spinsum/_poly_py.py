"""Pure Python kernel for coefficient-vector arithmetic.

Coefficient vectors are lists of Python ints of length `deg` representing
elements of Z[x]/(Phi) in the power basis, Phi monic of degree `deg`.
`rows[k]` holds x^k mod Phi for every k needed by the callers
(at least 2*deg-1 rows, and n rows for conjugation at conductor n).

The Cython twin in _poly_cy.pyx implements the same three functions with
identical semantics; _kernel.py picks one at import time.
"""


def mul_reduce(a, b, rows, deg):
    """(a * b) mod Phi. Schoolbook convolution, then tail folding via rows."""
    if deg == 1:
        return [a[0] * b[0]]
    prod = [0] * (2 * deg - 1)
    for i in range(deg):
        ai = a[i]
        if ai:
            for j in range(deg):
                bj = b[j]
                if bj:
                    prod[i + j] += ai * bj
    out = prod[:deg]
    for k in range(deg, 2 * deg - 1):
        c = prod[k]
        if c:
            row = rows[k]
            for j in range(deg):
                rj = row[j]
                if rj:
                    out[j] += c * rj
    return out


def add_scaled(a, b, ca, cb):
    """ca*a + cb*b componentwise."""
    return [ca * x + cb * y for x, y in zip(a, b)]


def scale(a, c):
    return [c * x for x in a]

"""Shared builders for the standard constructions used across the suite."""

from spinsum.scalars import as_scalar
from spinsum.algebra import group_algebra, matrix_algebra
from spinsum.frobenius import frobenius_standard
from spinsum.groups import cyclic_table, product_table, symmetric_table
from spinsum.involution import standard_involution
from spinsum.spin import Bicharacter

ONE = as_scalar(1)
HALF = as_scalar("1/2")
NEG = as_scalar(-1)


def matrix_fhk(n, ring, R=1):
    return frobenius_standard(matrix_algebra(n, ring), "fhk", as_scalar(R))


def group_form(table, R=1):
    return frobenius_standard(group_algebra(table), "group", as_scalar(R))


def standard_forms(max_dim=9, R=1):
    """(label, F) for the standard matrix and group constructions."""
    out = []
    for ring in ("R", "C", "C_R", "H_R"):
        for n in (1, 2, 3):
            alg = matrix_algebra(n, ring)
            if alg.dim > max_dim:
                continue
            out.append(("M%d(%s) fhk" % (n, ring), frobenius_standard(alg, "fhk", as_scalar(R))))
    for m in range(1, 7):
        alg = group_algebra(cyclic_table(m))
        if alg.dim > max_dim:
            continue
        out.append(("C[Z%d]" % m, frobenius_standard(alg, "group", as_scalar(R))))
    t22 = product_table(cyclic_table(2), cyclic_table(2))
    if 4 <= max_dim:
        out.append(("C[Z2xZ2]", group_form(t22, R)))
    if 6 <= max_dim:
        out.append(("C[S3]", group_form(symmetric_table(3), R)))
    return out


def standard_involutions(max_dim=8, R=1):
    """(label, I) for every (ring, kind) combination the classification allows."""
    out = []
    for ring, kinds in (("R", ("transpose",)),
                        ("C", ("transpose",)),
                        ("C_R", ("transpose", "hermitian")),
                        ("H_R", ("quaternionic",))):
        for n in (1, 2):
            alg = matrix_algebra(n, ring)
            if alg.dim > max_dim:
                continue
            F = frobenius_standard(alg, "fhk", as_scalar(R))
            for kind in kinds:
                out.append(("M%d(%s) %s" % (n, ring, kind), standard_involution(F, kind)))
    for m in (2, 3, 4):
        F = group_form(cyclic_table(m), R)
        out.append(("C[Z%d] inverse" % m, standard_involution(F, "inverse")))
    return out


def sign_bicharacter():
    return Bicharacter((2,), [[NEG]])

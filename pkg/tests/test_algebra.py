"""Structure-constant algebras: matrix, group, sums, gradings, centers."""

import pytest

from spinsum.algebra import (Grading, center_basis, complex_split, direct_sum,
                             from_matrix, group_algebra, matrix_algebra, multiply)
from spinsum.groups import (cyclic_table, product_table, quaternion_table,
                            symmetric_table)
from spinsum.scalars import as_scalar, root_of_unity

RING_DIM = {"R": 1, "C": 1, "C_R": 2, "H_R": 4}


def test_matrix_algebra_dimensions():
    for ring, units in RING_DIM.items():
        for n in (1, 2, 3):
            alg = matrix_algebra(n, ring)
            assert alg.dim == units * n * n
            alg.validate_associative()
            alg.validate_unit()


def test_matrix_units_multiply():
    alg = matrix_algebra(3, "R")
    # e_pq e_rs = delta_qr e_ps on the matrix-unit basis
    def unit(p, q):
        coeffs = [as_scalar(0)] * 9
        coeffs[3 * p + q] = as_scalar(1)
        return alg.element(coeffs)
    for p in range(3):
        for q in range(3):
            for r in range(3):
                for s in range(3):
                    prod = unit(p, q) * unit(r, s)
                    expect = unit(p, s) if q == r else alg.zero()
                    assert prod == expect


def test_from_matrix_is_a_homomorphism():
    alg = matrix_algebra(2, "R")
    a = [[as_scalar(1), as_scalar(2)], [as_scalar(0), as_scalar(1)]]
    b = [[as_scalar(3), as_scalar(0)], [as_scalar(5), as_scalar(-1)]]
    ab = [[as_scalar(13), as_scalar(-2)], [as_scalar(5), as_scalar(-1)]]
    assert from_matrix(alg, a) * from_matrix(alg, b) == from_matrix(alg, ab)


def test_group_algebra_basics():
    for table in (cyclic_table(4), symmetric_table(3), quaternion_table()[0]):
        alg = group_algebra(table)
        alg.validate_associative()
        alg.validate_unit()
        assert alg.dim == len(table)


def test_group_algebra_rejects_broken_table():
    table = [[0, 1], [1, 1]]  # second row is not a bijection
    with pytest.raises(ValueError):
        group_algebra(table)


def test_center_of_matrix_algebra_is_scalars():
    for ring in ("R", "C"):
        alg = matrix_algebra(2, ring)
        basis = center_basis(alg)
        assert len(basis) == 1
        assert basis[0] == alg.one()


def test_center_of_group_algebra_counts_classes():
    # class sums span the center: S3 has 3 classes, Q8 has 5
    assert len(center_basis(group_algebra(symmetric_table(3)))) == 3
    assert len(center_basis(group_algebra(quaternion_table()[0]))) == 5
    assert len(center_basis(group_algebra(cyclic_table(5)))) == 5


def test_direct_sum_blocks():
    d = direct_sum(matrix_algebra(1, "R"), matrix_algebra(2, "R"))
    assert d.dim == 5
    assert [(b.ring, b.n, b.start) for b in d.blocks] == [("R", 1, 0), ("R", 2, 1)]
    d.validate_associative()
    d.validate_unit()
    # cross terms vanish
    x = d.element([as_scalar(1)] + [as_scalar(0)] * 4)
    y = d.element([as_scalar(0), as_scalar(1), as_scalar(0), as_scalar(0), as_scalar(0)])
    assert (x * y).is_zero()


def test_element_operations():
    alg = group_algebra(cyclic_table(3))
    g = alg.basis_element(1)
    assert g ** 3 == alg.one()
    assert g ** 0 == alg.one()
    assert (g + g) == alg.element([as_scalar(0), as_scalar(2), as_scalar(0)])
    with pytest.raises(ValueError):
        g ** -1


def test_trace_is_regular_representation():
    alg = group_algebra(cyclic_table(4))
    assert alg.trace_of(alg.one().coeffs).serialize() == "4"
    assert alg.trace_of(alg.basis_element(2).coeffs).is_zero()


def test_grading_validation():
    alg = group_algebra(cyclic_table(2))
    good = Grading((2,), [(0,), (1,)])
    good.validate(alg)
    trivial = Grading((2,), [(0,), (0,)])
    trivial.validate(alg)
    # unit in a nonzero grade: e0*e0 = e0 needs grade 1+1 = 0, not 1
    bad = Grading((2,), [(1,), (0,)])
    with pytest.raises(ValueError):
        bad.validate(alg)


def test_grade_of_products():
    alg = group_algebra(cyclic_table(4))
    alg.grading = Grading((4,), [(0,), (1,), (2,), (3,)])
    alg.grading.validate(alg)
    for a in range(4):
        for b in range(4):
            ga = alg.grade_of(a)
            gb = alg.grade_of(b)
            terms = alg.mult[(a, b)]
            for c, _ in terms:
                assert alg.grade_of(c) == (((ga[0] + gb[0]) % 4),)


def test_multiply_function_matches_method():
    alg = matrix_algebra(2, "C_R")
    x = alg.basis_element(3)
    y = alg.basis_element(5)
    assert multiply(alg, x.coeffs, y.coeffs) == list((x * y).coeffs)


def test_complex_split():
    re, im = complex_split(root_of_unity(4) * as_scalar(2) + as_scalar(3))
    assert re == as_scalar(3)
    assert im == as_scalar(2)
    # parts are conjugation-fixed and recombine for any cyclotomic value
    z = root_of_unity(3)
    re, im = complex_split(z)
    assert re.conjugate() == re
    assert im.conjugate() == im
    assert re + root_of_unity(4) * im == z

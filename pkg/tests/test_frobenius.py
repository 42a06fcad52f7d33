"""Frobenius form construction, closed-form invariants, Nakayama structure."""

import pytest

from spinsum.algebra import matrix_algebra
from spinsum.errors import InputError, VerificationError
from spinsum.frobenius import (apply_matrix, b_pairs, bilinear_tensors,
                               closed_genus_invariant, frobenius_standard,
                               is_spherical, is_symmetric, multiplied_form,
                               nakayama, nakayama_apply, nakayama_inverse_apply,
                               verify_frobenius_identities, verify_separability,
                               z_element)
from spinsum.groups import cyclic_table, symmetric_table
from spinsum.linalg import identity_matrix, mat_mul
from spinsum.scalars import as_scalar
from spinsum.spin import z2_block_model

from common import ONE, HALF, group_form, matrix_fhk, standard_forms

# genus 0..3 values for the closed-form table, R = 1
CLOSED_R1 = {
    ("R", 1): ["1", "1", "1", "1"],
    ("R", 2): ["4", "1", "1/4", "1/16"],
    ("R", 3): ["9", "1", "1/9", "1/81"],
    ("C", 2): ["4", "1", "1/4", "1/16"],
    ("C_R", 2): ["8", "2", "1/2", "1/8"],
    ("C_R", 3): ["18", "2", "2/9", "2/81"],
    ("H_R", 1): ["4", "1", "1/4", "1/16"],
    ("H_R", 2): ["16", "1", "1/16", "1/256"],
}


def test_closed_form_matrix_table():
    for (ring, n), values in CLOSED_R1.items():
        F = matrix_fhk(n, ring)
        got = [closed_genus_invariant(F, g).serialize() for g in range(4)]
        assert got == values, "M%d(%s): %s" % (n, ring, got)


def test_closed_form_real_doubling():
    # over the reals C_R doubles and H_R picks up 2^(2-2g)
    for n in (1, 2, 3):
        c = matrix_fhk(n, "C")
        cr = matrix_fhk(n, "C_R")
        for g in range(4):
            assert closed_genus_invariant(cr, g) == as_scalar(2) * closed_genus_invariant(c, g)
    for n in (1, 2):
        c = matrix_fhk(n, "C")
        h = matrix_fhk(n, "H_R")
        for g in range(4):
            factor = as_scalar(2) ** 2 / as_scalar(4) ** g if g <= 1 else (
                as_scalar(1) / (as_scalar(2) ** (2 * g - 2)))
            assert closed_genus_invariant(h, g) == factor * closed_genus_invariant(c, g)


def test_closed_form_group_table():
    # cyclic: R^(2-2g) * m for every genus
    for m in range(1, 7):
        F = group_form(cyclic_table(m), HALF)
        for g in range(4):
            expect = (HALF ** (2 - 2 * g)) * as_scalar(m)
            assert closed_genus_invariant(F, g) == expect
    # S3: R^(2-2g) * (2 + 2^(2-2g))
    F = group_form(symmetric_table(3), ONE)
    got = [closed_genus_invariant(F, g).serialize() for g in range(4)]
    assert got == ["6", "3", "9/4", "33/16"]


def test_closed_form_r_dependence():
    F1 = matrix_fhk(2, "R", 1)
    F2 = matrix_fhk(2, "R", HALF)
    for g in range(4):
        ratio = HALF ** (2 - 2 * g)
        assert closed_genus_invariant(F2, g) == ratio * closed_genus_invariant(F1, g)


def test_identities_hold_on_standard_forms():
    for label, F in standard_forms(max_dim=9):
        verify_frobenius_identities(F)
        verify_separability(F)


def test_specialness_is_enforced():
    # eps_x on M_2 with x = diag(1, 2): m(B) = Tr(x^-1) = 3/2, so R must be 2/3
    alg = matrix_algebra(2, "R")
    x = alg.element([as_scalar(1), as_scalar(0), as_scalar(0), as_scalar(2)])
    F = frobenius_standard(alg, "from_element", as_scalar("2/3"), x=x)
    assert multiplied_form(F) == alg.element(
        [as_scalar("3/2"), as_scalar(0), as_scalar(0), as_scalar("3/2")])
    with pytest.raises(InputError):
        frobenius_standard(alg, "from_element", ONE, x=x)


def test_degenerate_form_rejected():
    alg = matrix_algebra(2, "R")
    x = alg.element([as_scalar(1), as_scalar(0), as_scalar(0), as_scalar(0)])
    with pytest.raises((InputError, ValueError)):
        frobenius_standard(alg, "from_element", ONE, x=x)


def test_b_tensor_inverse_pairing():
    for label, F in standard_forms(max_dim=6):
        _, B_inv, B = bilinear_tensors(F)
        assert mat_mul(B_inv, B) == identity_matrix(F.algebra.dim)


def test_b_pairs_match_bilinear_form():
    # b_pairs lists the nonzero entries of B, the edge-contraction tensor
    F = matrix_fhk(2, "C")
    _, _, B = bilinear_tensors(F)
    listed = {(a, b): v for a, b, v in b_pairs(F)}
    for a in range(4):
        for b in range(4):
            want = B[a][b]
            if want.is_zero():
                assert (a, b) not in listed
            else:
                assert listed[(a, b)] == want


def test_nakayama_symmetric_forms_are_trivial():
    for label, F in standard_forms(max_dim=9):
        assert is_symmetric(F)
        assert is_spherical(F)
        assert nakayama(F) == identity_matrix(F.algebra.dim)


def test_nakayama_on_block_form():
    # eps_x with x = R(p-q)(1_p (+) -1_q) is spherical but not symmetric
    F = z2_block_model(2, 1, ONE)
    sigma = nakayama(F)
    d = F.algebra.dim
    assert not is_symmetric(F)
    assert is_spherical(F)
    assert sigma != identity_matrix(d)
    assert mat_mul(sigma, sigma) == identity_matrix(d)


def test_nakayama_law():
    # eps(x*y) = eps(sigma(y)*x) for every basis pair
    for F in (z2_block_model(2, 1, ONE), matrix_fhk(2, "C_R")):
        alg = F.algebra
        sigma = nakayama(F)
        for a in range(alg.dim):
            for b in range(alg.dim):
                ea, eb = alg.basis_element(a), alg.basis_element(b)
                lhs = F.eps_of((ea * eb).coeffs)
                rhs = F.eps_of((apply_matrix(F, sigma, eb) * ea).coeffs)
                assert lhs == rhs


def test_nakayama_apply_round_trip():
    F = z2_block_model(2, 1, ONE)
    alg = F.algebra
    for a in range(alg.dim):
        e = alg.basis_element(a)
        assert nakayama_inverse_apply(F, nakayama_apply(F, e)) == e


def test_genus_element_powers():
    # Z(Sigma_g) = R * eps(z^g): the genus-g surface is g handle insertions
    for label, F in standard_forms(max_dim=9):
        z = z_element(F)
        for g in range(4):
            assert closed_genus_invariant(F, g) == F.R * F.eps_of((z ** g).coeffs), label
    F = matrix_fhk(2, "R", HALF)
    z = z_element(F)
    for g in range(4):
        assert closed_genus_invariant(F, g) == F.R * F.eps_of((z ** g).coeffs)


def test_z_element_is_central():
    for label, F in standard_forms(max_dim=6):
        z = z_element(F)
        for a in range(F.algebra.dim):
            e = F.algebra.basis_element(a)
            assert z * e == e * z, label

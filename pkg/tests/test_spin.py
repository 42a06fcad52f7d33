"""Crossings, curl maps, preferred elements eta/chi, and spin invariants."""

import itertools

import pytest

from spinsum.errors import InputError, VerificationError
from spinsum.frobenius import closed_genus_invariant
from spinsum.groups import (cyclic_table, product_table, quaternion_table,
                            symmetric_table)
from spinsum.linalg import identity_matrix, mat_mul
from spinsum.scalars import as_scalar
from spinsum.spin import (Bicharacter, abelian_group_model, bicharacter_crossing,
                          canonical_crossing, center_bicharacter, center_graded_model,
                          complex_structure_model, curl_map, direct_sum_model, eta_chi,
                          eta_variants, in_z_lambda, non_abelian_group_invariant,
                          pauli_model, projector_n, projector_p, quaternion_klein_model,
                          require_axioms, spin_invariant, spin_invariant_from_flags,
                          verify_crossing_axioms, z2_block_model, z_bar_lambda_space,
                          z_lambda_space)

from common import HALF, NEG, ONE, matrix_fhk, sign_bicharacter, standard_forms

REQUIRED = ("B1", "B2", "B3", "B4", "B5",
            "phi_involutive", "phi_automorphism", "phi_B", "phi_lambda")


def example_crossings():
    """The graded constructions, one crossing each."""
    out = []
    out.append(("block(2,1) sign",
                bicharacter_crossing(z2_block_model(2, 1, ONE), sign_bicharacter())))
    out.append(("complex n=2 sign",
                bicharacter_crossing(complex_structure_model(2, ONE), sign_bicharacter())))
    for a, d, b in ((1, 1, 1), (1, 1, -1), (1, -1, -1)):
        bc = Bicharacter((2, 2), [[as_scalar(a), as_scalar(b)],
                                  [as_scalar(b), as_scalar(d)]])
        out.append(("quaternion n=1 (%d,%d,%d)" % (a, d, b),
                    bicharacter_crossing(quaternion_klein_model(1, ONE), bc)))
    out.append(("C[Z2] sign",
                bicharacter_crossing(abelian_group_model((2,), ONE), sign_bicharacter())))
    out.append(("C[Z4] sign",
                bicharacter_crossing(abelian_group_model((4,), ONE),
                                     Bicharacter((4,), [[NEG]]))))
    t22 = product_table(cyclic_table(2), cyclic_table(2))
    out.append(("center Z2xZ2 I=[0]",
                bicharacter_crossing(center_graded_model(t22, 1),
                                     center_bicharacter((2, 2), [0]))))
    t2s3 = product_table(cyclic_table(2), symmetric_table(3))
    out.append(("center Z2xS3 I=[0]",
                bicharacter_crossing(center_graded_model(t2s3, 1),
                                     center_bicharacter((2,), [0]))))
    out.append(("pauli n=2", bicharacter_crossing(
        pauli_model(2, ONE),
        Bicharacter((2, 2), [[ONE, NEG], [NEG, ONE]]))))
    return out


def test_axioms_on_example_crossings():
    for label, X in example_crossings():
        rep = verify_crossing_axioms(X)
        for key in REQUIRED:
            assert rep[key], (label, key)
        require_axioms(X)


def test_eta_squared_equals_chi_squared():
    for label, X in example_crossings():
        eta, chi = eta_chi(X)
        assert eta * eta == chi * chi, label


def test_eta_variants_coincide():
    # the three handle-hookups of the even torus give one element
    for label, X in example_crossings()[:4]:
        eta, eta2, eta3, chi = eta_variants(X)
        assert eta == eta2 == eta3, label


def test_eta_chi_are_central_and_lambda_central():
    for label, X in example_crossings():
        eta, chi = eta_chi(X)
        alg = X.frobenius.algebra
        for e in (eta, chi):
            for a in range(alg.dim):
                basis = alg.basis_element(a)
                assert e * basis == basis * e, label
            assert in_z_lambda(X, e), label


def test_canonical_crossing_is_transparent():
    # trivial lambda: spin invariant reduces to the orientable closed form
    for label, F in standard_forms(max_dim=9):
        X = canonical_crossing(F)
        rep = verify_crossing_axioms(X)
        assert all(rep[k] for k in REQUIRED), label
        for g in (1, 2):
            want = closed_genus_invariant(F, g)
            assert spin_invariant(X, g, "even") == want, label
            assert spin_invariant(X, g, "odd") == want, label


def test_curl_map_squares_to_identity():
    for label, X in example_crossings():
        phi = curl_map(X)
        d = X.frobenius.algebra.dim
        assert mat_mul(phi, phi) == identity_matrix(d), label


def test_projectors_idempotent():
    for label, X in example_crossings():
        R = X.frobenius.R
        for proj in (projector_p(X), projector_n(X)):
            M = [[R * v for v in row] for row in proj]
            assert mat_mul(M, M) == M, label


def test_lambda_center_spaces():
    # C[Z2] sign grading: Z_lambda is the even part, the twisted space the odd
    X = bicharacter_crossing(abelian_group_model((2,), ONE), sign_bicharacter())
    assert len(z_lambda_space(X)) == 1
    assert len(z_bar_lambda_space(X)) == 1
    Xc = canonical_crossing(matrix_fhk(2, "C"))
    assert len(z_lambda_space(Xc)) == 1


# frozen genus tables; entries are (even, odd) strings for g = 1, 2, 3

def genus_table(X):
    return [(spin_invariant(X, g, "even").serialize(),
             spin_invariant(X, g, "odd").serialize()) for g in (1, 2, 3)]


def test_sign_model_partition_function():
    # C[Z2] with the sign bicharacter: Z = P(s) 2 (1/2)^g
    X = bicharacter_crossing(abelian_group_model((2,), ONE), sign_bicharacter())
    eta, chi = eta_chi(X)
    assert [c.serialize() for c in eta.coeffs] == ["1/2", "0"]
    assert [c.serialize() for c in chi.coeffs] == ["-1/2", "0"]
    assert genus_table(X) == [("1", "-1"), ("1/2", "-1/2"), ("1/4", "-1/4")]


def test_block_model_spin_invariant():
    # eps_x on M_3 with x = R(p-q) diag(1_2, -1): Z = R^(1-g) Tr(x)^(1-g), no
    # parity dependence
    X = bicharacter_crossing(z2_block_model(2, 1, ONE), sign_bicharacter())
    assert genus_table(X) == [("1", "1"), ("1", "1"), ("1", "1")]
    eta, chi = eta_chi(X)
    assert eta == chi
    Xh = bicharacter_crossing(z2_block_model(2, 1, HALF), sign_bicharacter())
    assert genus_table(Xh) == [("1", "1"), ("4", "4"), ("16", "16")]


def test_block_model_rejects_balanced_split():
    with pytest.raises(InputError):
        z2_block_model(2, 2, ONE)


def test_complex_structure_spin_invariant():
    # M_n(C_R) graded by real/imaginary: Z = P(s) R^(1-g) (2 R n^2)^(1-g)
    X = bicharacter_crossing(complex_structure_model(2, ONE), sign_bicharacter())
    assert genus_table(X) == [("1", "-1"), ("1/8", "-1/8"), ("1/64", "-1/64")]
    X1 = bicharacter_crossing(complex_structure_model(1, ONE), sign_bicharacter())
    assert genus_table(X1) == [("1", "-1"), ("1/2", "-1/2"), ("1/4", "-1/4")]


def test_quaternion_spin_all_branches():
    # M_n(H_R), Klein-graded; base value R^(1-g) (4 R n^2)^(1-g), and the
    # bicharacter branch contributes f = 2^(2g), P(s) 2^g, or 1
    cases = {
        (1, 1, 1): [("1", "1"), ("1/4", "1/4"), ("1/16", "1/16")],
        (1, -1, 1): [("1", "1"), ("1/4", "1/4"), ("1/16", "1/16")],
        (-1, 1, 1): [("1", "1"), ("1/4", "1/4"), ("1/16", "1/16")],
        (-1, -1, -1): [("1", "1"), ("1/4", "1/4"), ("1/16", "1/16")],
        (1, 1, -1): [("4", "4"), ("4", "4"), ("4", "4")],
        (1, -1, -1): [("2", "-2"), ("1", "-1"), ("1/2", "-1/2")],
        (-1, 1, -1): [("2", "-2"), ("1", "-1"), ("1/2", "-1/2")],
        (-1, -1, 1): [("2", "-2"), ("1", "-1"), ("1/2", "-1/2")],
    }
    for (a, d, b), table in cases.items():
        bc = Bicharacter((2, 2), [[as_scalar(a), as_scalar(b)],
                                  [as_scalar(b), as_scalar(d)]])
        X = bicharacter_crossing(quaternion_klein_model(1, ONE), bc)
        assert genus_table(X) == table, (a, d, b)


def test_pauli_model_spin_invariant():
    # clock-and-shift grading of M_2: Z = f R^(2-2g) n^2
    X = bicharacter_crossing(pauli_model(2, ONE),
                             Bicharacter((2, 2), [[ONE, NEG], [NEG, ONE]]))
    rep = verify_crossing_axioms(X)
    assert all(rep[k] for k in REQUIRED)
    table = genus_table(X)
    assert table[0][0] == table[0][1]  # this branch is parity-blind


def test_center_graded_partition_function():
    # H = Z2 x Z2, I = [0]: Z = P(s) R^(2-2g) 2^g 4^(1-g)
    t22 = product_table(cyclic_table(2), cyclic_table(2))
    F = center_graded_model(t22, 1)
    X = bicharacter_crossing(F, center_bicharacter((2, 2), [0]))
    assert genus_table(X) == [("2", "-2"), ("1", "-1"), ("1/2", "-1/2")]
    # |I| = 2 kills the parity sign and halves N_I again
    X2 = bicharacter_crossing(F, center_bicharacter((2, 2), [0, 1]))
    assert genus_table(X2) == [("1", "1"), ("1/4", "1/4"), ("1/16", "1/16")]


def test_center_graded_matches_formula():
    t22 = product_table(cyclic_table(2), cyclic_table(2))
    F = center_graded_model(t22, 1)
    for I_choice in ([], [0], [1], [0, 1]):
        X = bicharacter_crossing(F, center_bicharacter((2, 2), I_choice))
        for g in (1, 2):
            for parity in ("even", "odd"):
                assert spin_invariant(X, g, parity) == non_abelian_group_invariant(
                    t22, I_choice, g, parity), (I_choice, g, parity)


def test_non_abelian_invariant():
    # H = Z2 x S3: center Z2, inner quotient S3 with irreps 1, 1, 2
    t = product_table(cyclic_table(2), symmetric_table(3))
    values = {}
    for g in (1, 2, 3):
        for parity in ("even", "odd"):
            values[(g, parity)] = non_abelian_group_invariant(t, [0], g, parity).serialize()
    assert values[(1, "even")] == "3"
    assert values[(1, "odd")] == "-3"
    assert values[(2, "even")] == "9/8"
    assert values[(2, "odd")] == "-9/8"
    # no grading factor: the orientable group-algebra value
    assert non_abelian_group_invariant(t, [], 1, "even").serialize() == "6"
    assert non_abelian_group_invariant(t, [], 2, "even").serialize() == "9/2"


def test_non_abelian_contraction_cross_check():
    t = product_table(cyclic_table(2), symmetric_table(3))
    F = center_graded_model(t, 1)
    X = bicharacter_crossing(F, center_bicharacter((2,), [0]))
    for g in (1, 2):
        for parity in ("even", "odd"):
            assert spin_invariant(X, g, parity) == non_abelian_group_invariant(
                t, [0], g, parity), (g, parity)


def test_non_abelian_error_paths():
    with pytest.raises(InputError) as err:
        non_abelian_group_invariant(symmetric_table(3), [0], 1, "even")
    assert "no center factor" in str(err.value)
    # Q8: the center has no complement, so the center grading cannot exist
    qt, _ = quaternion_table()
    with pytest.raises(InputError) as err:
        non_abelian_group_invariant(qt, [], 1, "even")
    assert "no complement" in str(err.value)
    with pytest.raises(InputError):
        center_graded_model(qt, 1)


def test_bicharacter_validation():
    with pytest.raises(VerificationError):
        Bicharacter((2,), [[as_scalar(2)]])  # not a root of unity of order 2
    with pytest.raises(VerificationError):
        Bicharacter((2, 2), [[ONE, NEG], [ONE, ONE]])  # not reciprocal
    with pytest.raises(InputError):
        Bicharacter((2, 2), [[ONE, ONE]])  # shape mismatch
    # crossing construction needs a graded algebra
    with pytest.raises(InputError):
        bicharacter_crossing(matrix_fhk(2, "C"), sign_bicharacter())
    # a valid bicharacter whose diagonal is a primitive 4th root is still
    # not a crossing: curls must square to the identity
    zi = as_scalar("cyclo(4)[0, 1]")
    bc = Bicharacter((4,), [[zi]])
    with pytest.raises(VerificationError):
        bicharacter_crossing(abelian_group_model((4,), ONE), bc)


def test_direct_sum_model():
    F1 = abelian_group_model((2,), ONE)
    X1 = bicharacter_crossing(F1, sign_bicharacter())
    F2 = abelian_group_model((2,), ONE)
    X2 = bicharacter_crossing(F2, Bicharacter((2,), [[ONE]]))
    Fs, Xs = direct_sum_model([(F1, X1), (F2, X2)], ONE)
    require_axioms(Xs)
    for g in (1, 2):
        for parity in ("even", "odd"):
            want = spin_invariant(X1, g, parity) + spin_invariant(X2, g, parity)
            assert spin_invariant(Xs, g, parity) == want


def test_flag_invariant_respects_parity_class():
    # every curl assignment evaluates to the value of its arf class
    for label, X in [("sign", bicharacter_crossing(abelian_group_model((2,), ONE),
                                                   sign_bicharacter())),
                     ("block", bicharacter_crossing(z2_block_model(2, 1, ONE),
                                                    sign_bicharacter()))]:
        for g in (1, 2):
            from spinsum.quadform import immersion_to_parity
            for flags in itertools.product((0, 1), repeat=2 * g):
                want = spin_invariant(X, g, immersion_to_parity(list(flags)))
                assert spin_invariant_from_flags(X, list(flags)) == want, (label, flags)


def test_spin_invariant_input_checks():
    X = bicharacter_crossing(abelian_group_model((2,), ONE), sign_bicharacter())
    with pytest.raises(InputError):
        spin_invariant(X, 0, "even")
    with pytest.raises(InputError):
        spin_invariant(X, 1, "both")

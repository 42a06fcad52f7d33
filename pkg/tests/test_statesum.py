"""Brute-force evaluation against closed forms, and the move verifiers."""

import pytest

from spinsum.algebra import Algebra
from spinsum.errors import CapExceeded, VerificationError
from spinsum.frobenius import FrobeniusData, closed_genus_invariant
from spinsum.involution import nonorientable_invariant, standard_involution
from spinsum.scalars import as_scalar
from spinsum.statesum import (evaluate, naive_state_sum, resolve_cap,
                              verify_pachner, verify_unoriented_moves)
from spinsum.surfaces import genus_surface, nonorientable_surface, pachner_13, pachner_22

from common import ONE, matrix_fhk, standard_forms, standard_involutions


def test_evaluate_matches_closed_form():
    for label, F in standard_forms(max_dim=9):
        for g in range(3):
            rep = evaluate(genus_surface(g), F)
            assert rep.value == closed_genus_invariant(F, g), (label, g)


def test_evaluate_is_triangulation_independent():
    F = matrix_fhk(2, "C_R")
    T = genus_surface(1)
    want = closed_genus_invariant(F, 1)
    T2 = pachner_13(T, 0)
    T3 = pachner_22(T2, (0, 1))
    T4 = pachner_13(T3, 2)
    for TT in (T2, T3, T4):
        assert evaluate(TT, F).value == want


def test_report_fields():
    F = matrix_fhk(2, "R")
    rep = evaluate(genus_surface(2), F)
    assert rep.interior_vertices >= 1
    assert rep.multiplications > 0
    assert not rep.boundary
    assert rep.value == closed_genus_invariant(F, 2)


def test_naive_sum_agrees():
    F = matrix_fhk(2, "R")
    for g in (0, 1):
        assert naive_state_sum(genus_surface(g), F) == closed_genus_invariant(F, g)


def test_nonorientable_evaluation():
    for label, I in standard_involutions(max_dim=8):
        F = I.frobenius
        for k in (1, 2, 3):
            rep = evaluate(nonorientable_surface(k), F, S=I.S_matrix)
            assert rep.value == nonorientable_invariant(I, k), (label, k)


def test_cap_enforced():
    F = matrix_fhk(3, "R")
    with pytest.raises(CapExceeded):
        evaluate(genus_surface(2), F, cap=10)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("SPINSUM_CAP", "12345")
    assert resolve_cap() == 12345
    monkeypatch.delenv("SPINSUM_CAP")
    assert resolve_cap() > 10 ** 6
    assert resolve_cap(77) == 77


def test_pachner_standard_constructions():
    for label, F in standard_forms(max_dim=9):
        verify_pachner(F)


def test_pachner_rejects_rescaled_counit():
    # doubling eps without touching R breaks specialness: the 1-3 branch
    F = matrix_fhk(2, "R")
    bad = FrobeniusData(F.algebra, F.R, [as_scalar(2) * e for e in F.eps])
    with pytest.raises(VerificationError) as err:
        verify_pachner(bad)
    assert "1-3" in str(err.value)


def test_pachner_rejects_nonassociative_tensor():
    # dim 3 with e1*e1 = e2, e1*e2 = e0 but e2*e1 = 0: not associative
    Z, U = as_scalar(0), as_scalar(1)
    mult = {}
    def put(a, b, terms):
        mult[(a, b)] = tuple(terms)
    for a in range(3):
        put(0, a, [(a, U)])
        put(a, 0, [(a, U)])
    put(1, 1, [(2, U)])
    put(1, 2, [(0, U)])
    put(2, 1, [])
    put(2, 2, [(1, U)])
    alg = Algebra(3, mult, [U, Z, Z], [U, Z, Z], name="skew")
    with pytest.raises(ValueError):
        alg.validate_associative()
    bad = FrobeniusData(alg, ONE, [Z, U, Z])
    with pytest.raises(VerificationError) as err:
        verify_pachner(bad)
    assert "2-2" in str(err.value)


def test_unoriented_moves_standard_involutions():
    for label, I in standard_involutions(max_dim=8):
        verify_unoriented_moves(I.frobenius, I.S_matrix)


def test_unoriented_moves_reject_wrong_s():
    F = matrix_fhk(2, "R")
    d = F.algebra.dim
    S = [[as_scalar(2 if i == j else 0) for j in range(d)] for i in range(d)]
    with pytest.raises(VerificationError):
        verify_unoriented_moves(F, S)

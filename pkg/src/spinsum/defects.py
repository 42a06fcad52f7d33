"""Bimodule defect lines and the invariants of surfaces with a generating loop.

A defect line carries a bimodule V over the Frobenius algebra, a dual space
realized through two pairings, and a sign governing how the defect crosses
itself.  Only a single closed loop placed along a generating curve is
supported; the handle it decorates contributes one of three preferred
elements (eta_V, rho_V, chi_V) in place of the usual eta or chi.
"""

from .errors import InputError, VerificationError
from .frobenius import b_pairs, bilinear_tensors, nakayama
from .linalg import mat_inverse, mat_mul, transpose
from .scalars import ExactScalar, as_scalar
from .spin import _curl_pairs, _handle_contraction, curl_map, eta_chi, in_z_lambda, require_axioms

_ZERO = ExactScalar.zero()
_ONE = ExactScalar.one()


class BimoduleData:
    """A-A bimodule with pairings, the data of one defect line.

    left[a][i][j] gives e_a . v_i, right[i][a][j] gives v_i . e_a.  The dual
    space is identified with V through the pairings: p_inv[i][j] is the value
    of P^{-1} on (v_i, w_j) and q_inv[i][j] the value of Q^{-1} on (w_i, v_j),
    arguments in written order.  defect_sign is the self-crossing constant of
    the loop and must square to one.
    """

    def __init__(self, frobenius, dim, left, right, p_inv, q_inv, defect_sign):
        alg = frobenius.algebra
        if len(left) != alg.dim or any(len(rows) != dim for rows in left):
            raise InputError("left action has the wrong shape")
        if len(right) != dim or any(len(rows) != alg.dim for rows in right):
            raise InputError("right action has the wrong shape")
        for mat, label in ((p_inv, "P"), (q_inv, "Q")):
            if len(mat) != dim or any(len(row) != dim for row in mat):
                raise InputError("pairing %s has the wrong shape" % label)
            try:
                mat_inverse(mat)
            except ValueError:
                raise InputError("defect pairing %s is degenerate" % label) from None
        sign = as_scalar(defect_sign)
        if sign * sign != _ONE:
            raise InputError("the defect sign must square to one")
        self.frobenius = frobenius
        self.dim = dim
        self.left = left
        self.right = right
        self.p_inv = p_inv
        self.q_inv = q_inv
        self.defect_sign = sign

    def act_left(self, a_coeffs, vec):
        out = [_ZERO] * self.dim
        for a, ca in enumerate(a_coeffs):
            if ca.is_zero():
                continue
            for i, vi in enumerate(vec):
                if vi.is_zero():
                    continue
                row = self.left[a][i]
                f = ca * vi
                for j in range(self.dim):
                    if not row[j].is_zero():
                        out[j] = out[j] + f * row[j]
        return out

    def act_right(self, vec, a_coeffs):
        out = [_ZERO] * self.dim
        for i, vi in enumerate(vec):
            if vi.is_zero():
                continue
            for a, ca in enumerate(a_coeffs):
                if ca.is_zero():
                    continue
                row = self.right[i][a]
                f = vi * ca
                for j in range(self.dim):
                    if not row[j].is_zero():
                        out[j] = out[j] + f * row[j]
        return out


def regular_bimodule(F, sign):
    """V = A with both actions given by multiplication and both pairings B^{-1}.

    sign is the loop's self-crossing constant.  All bimodule axioms are
    checked; a form whose Nakayama automorphism fails sigma^2 = id is
    rejected since the defect then cannot live on a sphere.
    """
    alg = F.algebra
    d = alg.dim
    _, B_inv, _ = bilinear_tensors(F)
    left = [[[_ZERO] * d for _ in range(d)] for _ in range(d)]
    right = [[[_ZERO] * d for _ in range(d)] for _ in range(d)]
    for (a, b), terms in alg.mult.items():
        for c, k in terms:
            left[a][b][c] = k
            right[a][b][c] = k
    V = BimoduleData(F, d, left, right, B_inv, B_inv, sign)
    require_bimodule(V)
    return V


def verify_bimodule(V):
    """Report dict for the three defect-line axioms; never raises."""
    return {
        "H1": _bimodule_laws(V),
        "H2": _pairing_twist(V),
        "spherical": _spherical_pairings(V),
    }


def require_bimodule(V):
    report = verify_bimodule(V)
    failed = [name for name in ("H1", "H2", "spherical") if not report[name]]
    if failed:
        raise VerificationError("bimodule axioms failed: %s" % ", ".join(failed))
    return report


def _bimodule_laws(V):
    alg = V.frobenius.algebra
    d, dv = alg.dim, V.dim
    basis_v = [[_ONE if i == j else _ZERO for j in range(dv)] for i in range(dv)]
    basis_a = [[_ONE if i == j else _ZERO for j in range(d)] for i in range(d)]
    unit = list(alg.unit)
    for i in range(dv):
        if V.act_left(unit, basis_v[i]) != basis_v[i]:
            return False
        if V.act_right(basis_v[i], unit) != basis_v[i]:
            return False
    for a in range(d):
        for b in range(d):
            ab = alg.multiply_vec(basis_a[a], basis_a[b])
            for i in range(dv):
                v = basis_v[i]
                if V.act_left(basis_a[a], V.act_left(basis_a[b], v)) != V.act_left(ab, v):
                    return False
                if V.act_right(V.act_right(v, basis_a[a]), basis_a[b]) != V.act_right(v, ab):
                    return False
                if V.act_right(V.act_left(basis_a[a], v), basis_a[b]) != V.act_left(
                    basis_a[a], V.act_right(v, basis_a[b])
                ):
                    return False
    return True


def _pairing_twist(V):
    # P^{-1}(sigma(a) v b, w) = P^{-1}(v, b w a) and the Q^{-1} twin.
    alg = V.frobenius.algebra
    d, dv = alg.dim, V.dim
    sigma = nakayama(V.frobenius)
    basis_a = [[_ONE if i == j else _ZERO for j in range(d)] for i in range(d)]
    basis_v = [[_ONE if i == j else _ZERO for j in range(dv)] for i in range(dv)]
    for a in range(d):
        sa = list(sigma[a])
        for b in range(d):
            eb = basis_a[b]
            ea = basis_a[a]
            for i in range(dv):
                moved = V.act_right(V.act_left(sa, basis_v[i]), eb)
                for j in range(dv):
                    back = V.act_right(V.act_left(eb, basis_v[j]), ea)
                    lhs = _ZERO
                    for k, c in enumerate(moved):
                        if not c.is_zero():
                            lhs = lhs + c * V.p_inv[k][j]
                    rhs = _ZERO
                    for k, c in enumerate(back):
                        if not c.is_zero():
                            rhs = rhs + V.p_inv[i][k] * c
                    if lhs != rhs:
                        return False
                    lhs = _ZERO
                    for k, c in enumerate(moved):
                        if not c.is_zero():
                            lhs = lhs + c * V.q_inv[k][j]
                    rhs = _ZERO
                    for k, c in enumerate(back):
                        if not c.is_zero():
                            rhs = rhs + V.q_inv[i][k] * c
                    if lhs != rhs:
                        return False
    return True


def _spherical_pairings(V):
    # Q_{ci} P^{cj} = P_{ic} Q^{jc}, the matrix identity (P^tr)^2 = Q^2.
    p_mat = mat_inverse(V.p_inv)
    q_mat = mat_inverse(V.q_inv)
    lhs = mat_mul(transpose(V.q_inv), p_mat)
    rhs = mat_mul(V.p_inv, transpose(q_mat))
    return lhs == rhs


def sigma_v(V):
    """The pairing twist on V, sigma(v) = sum P^{-1}(w_a, v) Q^{ab} v_b."""
    return mat_mul(transpose(V.p_inv), mat_inverse(V.q_inv))


def sigma_v_inverse(V):
    return mat_mul(V.q_inv, transpose(mat_inverse(V.p_inv)))


def _scaled_pairs(pairs, s):
    return [(a, b, w * s) for a, b, w in pairs]


def _require_regular_shape(V):
    alg = V.frobenius.algebra
    if V.dim != alg.dim:
        raise InputError("defect contractions support bimodules of algebra type only")
    for (a, b), terms in alg.mult.items():
        for c, k in terms:
            if V.left[a][b][c] != k or V.right[a][b][c] != k:
                raise InputError("defect contractions support bimodules of algebra type only")


def defect_preferred_elements(V, X):
    """The three loop elements (eta_V, rho_V, chi_V) of the once-holed torus.

    The defect loop runs along one generating curve, the algebra loop along
    the other.  rho_V curls the defect loop once, chi_V curls both loops.
    For an algebra-type bimodule the results must reproduce eta, sign.eta
    and sign.chi, which is asserted.
    """
    F = V.frobenius
    if X.frobenius is not F:
        raise InputError("the crossing and the bimodule use different forms")
    _require_regular_shape(V)
    require_bimodule(V)
    require_axioms(X)
    sign = V.defect_sign
    pairs = b_pairs(F)
    phi = curl_map(X)
    phi_v = [[sign * v for v in row] for row in phi]
    curled_v = _curl_pairs(pairs, phi_v)
    curled_a = _curl_pairs(pairs, phi)
    eta_v = _handle_contraction(X, pairs, pairs)
    rho_v = _handle_contraction(X, curled_v, pairs)
    chi_v = _handle_contraction(X, curled_v, curled_a)
    eta, chi = eta_chi(X)
    if eta_v != eta or rho_v != sign * eta or chi_v != sign * chi:
        raise VerificationError("defect loop elements disagree with the loop relations")
    alg = F.algebra
    for elem in (eta_v, rho_v, chi_v):
        for a in range(alg.dim):
            ea = alg.basis_element(a)
            if ea * elem != elem * ea:
                raise VerificationError("defect loop element is not central")
        if not in_z_lambda(X, elem):
            raise VerificationError("defect loop element escapes the crossing center")
    return eta_v, rho_v, chi_v


def generating_loop_invariant(V, X, g, parity, loop_curls):
    """Partition function of genus g with one generating loop, R.eps(...).

    parity names the spin structure; loop_curls in {0, 1} counts curls on
    the defect circle.  An odd structure with an uncurled loop puts the odd
    handle elsewhere, so it needs g >= 2.
    """
    if g < 1:
        raise InputError("the generating loop needs a handle, g >= 1")
    if parity not in ("even", "odd"):
        raise InputError("parity must be 'even' or 'odd'")
    if loop_curls not in (0, 1):
        raise InputError("loop_curls must be 0 or 1")
    eta_v, rho_v, chi_v = defect_preferred_elements(V, X)
    eta, chi = eta_chi(X)
    F = V.frobenius
    if parity == "even":
        head = rho_v if loop_curls else eta_v
        rest = eta ** (g - 1)
    elif loop_curls:
        head = chi_v
        rest = eta ** (g - 1)
    else:
        if g < 2:
            raise InputError("an odd structure with an uncurled loop needs g >= 2")
        head = eta_v
        rest = chi * eta ** (g - 2)
    return F.R * F.eps_of(head * rest)

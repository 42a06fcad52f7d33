"""Algebra involutions for unoriented state sums.

An involution is a linear anti-automorphism * with ε(a*) = ε(a). Its
matrix relative to the basis, combined with the inverse bilinear form,
yields the symmetric edge tensor S^{ab} used on orientation-incompatible
gluings. The preferred element w encodes the projective plane; products
of w drive every closed-form non-orientable invariant.

Standard constructions cover transpose (R, C, C_R blocks), hermitian
(C_R blocks), quaternionic conjugation (H_R blocks), the group inverse
(group algebras), and any of these conjugated by an invertible element.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import multiply
from .errors import InputError, VerificationError
from .frobenius import bilinear_tensors, z_element
from .linalg import mat_inverse, mat_mul
from .scalars import ExactScalar, as_scalar

_ZERO = ExactScalar.zero()
_ONE = ExactScalar.one()

BASE_KINDS = ("transpose", "hermitian", "quaternionic", "inverse")

# quaternionic conjugation negates the imaginary units (order 1,i,j,k)
_QUAT_CONJ_SIGN = (1, -1, -1, -1)
_CPLX_HERM_SIGN = (1, -1)


def star_matrix_of(F, S):
    """Recover the star matrix st_a^b = B_{ac} S^{cb} from the edge tensor."""
    _, B_inv, _ = bilinear_tensors(F)
    return mat_mul(B_inv, S)


class InvolutionData:
    """A verified involution: S matrix, star matrix, and classification data.

    mu satisfies s = mu * s^base for the conjugating element (1 when s is
    trivial). gamma is the class label per simple block, computed from the
    block component of w; None when the algebra carries no block structure.
    """

    def __init__(self, frobenius, S_matrix, star_matrix, kind, s=None, mu=None, gamma=None, base=None):
        self.frobenius = frobenius
        self.S_matrix = S_matrix
        self.star_matrix = star_matrix
        self.kind = kind
        self.base = base or (kind if kind in BASE_KINDS else None)
        self.s = s
        self.mu = mu
        self.gamma = gamma

    def star(self, elem):
        alg = self.frobenius.algebra
        st = self.star_matrix
        d = alg.dim
        out = [_ZERO] * d
        for a, c in enumerate(elem.coeffs):
            if not c.is_zero():
                row = st[a]
                for b in range(d):
                    if not row[b].is_zero():
                        out[b] = out[b] + c * row[b]
        return alg.element(out)

    def __repr__(self):
        return "InvolutionData(kind=%r, gamma=%r)" % (self.kind, self.gamma)


def _group_inverse_permutation(alg):
    """Recognize a group algebra from its mult dict; return the inverse map."""
    unit_idx = None
    for a, c in enumerate(alg.unit):
        if not c.is_zero():
            if unit_idx is not None or c != _ONE:
                raise InputError("algebra unit is not a basis element; not a group algebra")
            unit_idx = a
    inv = [None] * alg.dim
    for a in range(alg.dim):
        for b in range(alg.dim):
            entries = alg.mult.get((a, b), ())
            if len(entries) != 1 or entries[0][1] != _ONE:
                raise InputError("multiplication is not a group table")
            if entries[0][0] == unit_idx:
                if inv[a] is not None and inv[a] != b:
                    raise InputError("multiplication is not a group table")
                inv[a] = b
    if any(v is None for v in inv):
        raise InputError("multiplication is not a group table")
    return inv


def _base_star_columns(alg, kind):
    """Column vectors star(e_a) for the named base operation."""
    d = alg.dim
    cols = []
    if kind == "inverse":
        inv = _group_inverse_permutation(alg)
        for a in range(d):
            vec = [_ZERO] * d
            vec[inv[a]] = _ONE
            cols.append(vec)
        return cols
    if alg.blocks is None:
        raise InputError("kind %r needs a matrix-block algebra" % kind)
    pos_of = {}
    for blk in alg.blocks:
        units = {"R": 1, "C": 1, "C_R": 2, "H_R": 4}[blk.ring]
        n = blk.n
        for w in range(units):
            for p in range(n):
                for q in range(n):
                    pos_of[(blk.start, w, p, q)] = blk.start + (w * n + p) * n + q
    for blk in alg.blocks:
        units = {"R": 1, "C": 1, "C_R": 2, "H_R": 4}[blk.ring]
        n = blk.n
        if kind == "transpose":
            if blk.ring == "H_R":
                raise InputError("plain transpose is not an involution on H_R blocks")
            signs = (1,) * units
        elif kind == "hermitian":
            if blk.ring != "C_R":
                raise InputError("hermitian conjugation needs a C_R block, got %s" % blk.ring)
            signs = _CPLX_HERM_SIGN
        elif kind == "quaternionic":
            if blk.ring != "H_R":
                raise InputError("quaternionic conjugation needs an H_R block, got %s" % blk.ring)
            signs = _QUAT_CONJ_SIGN
        else:
            raise InputError("unknown involution kind %r" % kind)
        for w in range(units):
            for p in range(n):
                for q in range(n):
                    vec = [_ZERO] * alg.dim
                    target = pos_of[(blk.start, w, q, p)]
                    vec[target] = as_scalar(signs[w])
                    cols.append(vec)
    # cols were appended block by block in basis order already
    return cols


def _proportionality(alg, x, y):
    """Return mu with x = mu*y, or None if not proportional (y != 0)."""
    mu = None
    for a in range(alg.dim):
        cy = y.coeffs[a]
        cx = x.coeffs[a]
        if cy.is_zero():
            if not cx.is_zero():
                return None
            continue
        ratio = cx / cy
        if mu is None:
            mu = ratio
        elif mu != ratio:
            return None
    return mu


def standard_involution(F, kind, s=None, base=None):
    """Build and fully verify an involution of the named kind.

    kind "conjugated" requires both s and base; passing s with a plain kind
    means the same thing. The constructor raises VerificationError when any
    involution axiom fails and InputError on incompatible ring types.
    """
    alg = F.algebra
    d = alg.dim
    if kind == "conjugated":
        if s is None or base is None:
            raise InputError("conjugated involutions need s and base")
        base_kind = base
    else:
        if base is not None:
            raise InputError("base is only meaningful with kind='conjugated'")
        base_kind = kind
    if base_kind not in BASE_KINDS:
        raise InputError("unknown involution kind %r" % base_kind)

    cols = _base_star_columns(alg, base_kind)

    s_inv_vec = None
    if s is not None:
        if s.alg is not alg:
            raise InputError("s lives in a different algebra")
        s_inv_vec = _invert_element(alg, s)

    st = []
    for a in range(d):
        vec = cols[a]
        if s is not None:
            e = alg.element(vec)
            e = s * e * s_inv_vec
            vec = list(e.coeffs)
        st.append(vec)

    data = _finish(F, st, kind if kind == "conjugated" else base_kind, s, base_kind)
    return data


def _invert_element(alg, s):
    """Invert s via the linear system s*x = 1."""
    d = alg.dim
    # column c of left-multiplication-by-s
    M = [[_ZERO] * d for _ in range(d)]
    for c in range(d):
        for a in range(d):
            ca = s.coeffs[a]
            if ca.is_zero():
                continue
            for e, k in alg.mult.get((a, c), ()):
                M[e][c] = M[e][c] + ca * k
    try:
        Mi = mat_inverse(M)
    except ValueError:
        raise InputError("conjugating element is not invertible") from None
    out = [_ZERO] * d
    for r in range(d):
        for c in range(d):
            if not alg.unit[c].is_zero():
                out[r] = out[r] + Mi[r][c] * alg.unit[c]
    return alg.element(out)


def _finish(F, st, kind, s, base_kind):
    alg = F.algebra
    d = alg.dim

    def star_vec(coeffs):
        out = [_ZERO] * d
        for a, c in enumerate(coeffs):
            if not c.is_zero():
                row = st[a]
                for b in range(d):
                    if not row[b].is_zero():
                        out[b] = out[b] + c * row[b]
        return out

    basis = alg.basis()
    starred = [alg.element(star_vec(e.coeffs)) for e in basis]

    for a in range(d):
        back = alg.element(star_vec(starred[a].coeffs))
        if back != basis[a]:
            raise VerificationError("star is not involutive at basis %d" % a)
        if F.eps_of(starred[a]) != F.eps[a]:
            raise VerificationError("counit does not respect star at basis %d" % a)
    unit = alg.one()
    if alg.element(star_vec(unit.coeffs)) != unit:
        raise VerificationError("star does not fix the unit")
    for a in range(d):
        for b in range(d):
            if alg.element(star_vec((basis[a] * basis[b]).coeffs)) != starred[b] * starred[a]:
                raise VerificationError("star is not an anti-homomorphism at (%d,%d)" % (a, b))

    _, _, B = bilinear_tensors(F)
    S = mat_mul(B, st)
    for a in range(d):
        for b in range(a):
            if S[a][b] != S[b][a]:
                raise VerificationError("derived S matrix is not symmetric at (%d,%d)" % (a, b))

    mu = _ONE
    if s is not None:
        base_cols = _base_star_columns(alg, base_kind)
        sb = alg.element(
            [
                sum((s.coeffs[a] * base_cols[a][b] for a in range(d)), _ZERO)
                for b in range(d)
            ]
        )
        mu = _proportionality(alg, s, sb)
        if mu is None:
            raise VerificationError(
                "conjugating element is not proportional to its base star; no class"
            )

    data = InvolutionData(F, S, st, kind, s=s, mu=mu, gamma=None, base=base_kind)
    data.gamma = _gamma_labels(data)
    return data


def _gamma_labels(I):
    """Class label per simple block, read off the block component of w."""
    F = I.frobenius
    alg = F.algebra
    if alg.blocks is None:
        return None
    w = w_element(I)
    labels = []
    for blk in alg.blocks:
        units = {"R": 1, "C": 1, "C_R": 2, "H_R": 4}[blk.ring]
        n = blk.n
        # expected multiple of the block unit: gamma/(R n) or gamma/(2 R n)
        denom = F.R * as_scalar(n)
        if blk.ring == "H_R":
            denom = denom * as_scalar(2)
        ids = set()
        for p in range(n):
            ids.add(blk.start + p * n + p)
        coeff = None
        for pos in range(blk.start, blk.start + blk.size):
            c = w.coeffs[pos]
            if pos in ids:
                if coeff is None:
                    coeff = c
                elif coeff != c:
                    raise VerificationError("w is not a multiple of the block unit")
            elif not c.is_zero():
                raise VerificationError("w has off-unit support in a block")
        val = coeff * denom
        if val.is_zero():
            labels.append(0)
        elif val == _ONE:
            labels.append(1)
        elif val == -_ONE:
            labels.append(-1)
        else:
            raise VerificationError("block w component %r is not a class label" % val)
    if len(labels) == 1:
        return labels[0]
    return tuple(labels)


def w_element(I):
    """w = R * sum e_a e_b e_c e_d S^{ac} S^{bd}."""
    F = I.frobenius
    alg = F.algebra
    d = alg.dim
    S = I.S_matrix
    pairs = [
        (a, c, S[a][c]) for a in range(d) for c in range(d) if not S[a][c].is_zero()
    ]
    acc = [_ZERO] * d
    for a, c, v1 in pairs:
        for b, dd, v2 in pairs:
            k = v1 * v2
            # e_a e_b e_c e_d
            for e1, k1 in alg.mult.get((a, b), ()):
                for e2, k2 in alg.mult.get((e1, c), ()):
                    for e3, k3 in alg.mult.get((e2, dd), ()):
                        acc[e3] = acc[e3] + k * k1 * k2 * k3
    return alg.element([F.R * c for c in acc])


def w_element_dual(I):
    """Independent route: w = sum_b e^b * (e_b)^*, with e^b = B^{bc} e_c."""
    F = I.frobenius
    alg = F.algebra
    d = alg.dim
    _, _, B = bilinear_tensors(F)
    acc = [_ZERO] * d
    for b in range(d):
        starred = I.star(alg.basis_element(b))
        for c in range(d):
            if B[b][c].is_zero():
                continue
            for e, k in _element_times(alg, c, starred):
                acc[e] = acc[e] + B[b][c] * k
    return alg.element(acc)


def _element_times(alg, a, elem):
    out = {}
    for b, cb in enumerate(elem.coeffs):
        if cb.is_zero():
            continue
        for e, k in alg.mult.get((a, b), ()):
            out[e] = out.get(e, _ZERO) + cb * k
    return out.items()


def nonorientable_invariant(I, k):
    """Z of the connected sum of k projective planes: R * eps(w^k)."""
    if k < 1:
        raise InputError("need k >= 1 crosscaps")
    F = I.frobenius
    w = w_element(I)
    p = w
    for _ in range(k - 1):
        p = p * w
    return F.R * F.eps_of(p)


def verify_w_identities(I):
    """w central, w*z = w^3, dual route agreement, genus reduction, label rules."""
    F = I.frobenius
    alg = F.algebra
    w = w_element(I)
    for e in alg.basis():
        if w * e != e * w:
            raise VerificationError("w is not central")
    if w_element_dual(I) != w:
        raise VerificationError("the two w routes disagree")
    z = z_element(F)
    if w * z != w * w * w:
        raise VerificationError("w*z != w^3")
    for g in range(3):
        lhs = nonorientable_invariant(I, 2 * g + 1)
        zp = alg.one()
        for _ in range(g):
            zp = zp * z
        rhs = F.R * F.eps_of(w * zp)
        if lhs != rhs:
            raise VerificationError("Z(sum of %d planes) != R eps(w z^%d)" % (2 * g + 1, g))
    rule = gamma_by_rule(I)
    if rule is not None and I.gamma is not None and rule != I.gamma:
        raise VerificationError(
            "rule-based label %r disagrees with w-based label %r" % (rule, I.gamma)
        )
    return {"gamma": I.gamma, "mu": I.mu, "w_is_zero": all(c.is_zero() for c in w.coeffs)}


def gamma_by_rule(I):
    """Classification-table label, derivable only for single-block standards."""
    alg = I.frobenius.algebra
    if alg.blocks is None or len(alg.blocks) != 1:
        return None
    base_kind = I.base
    if base_kind == "hermitian":
        return 0
    if I.s is None:
        if base_kind == "transpose":
            return 1
        if base_kind == "quaternionic":
            return -1
        return None
    # conjugated transpose: sign of mu; conjugated quaternionic: s = -gamma s^double-dagger
    if base_kind == "transpose":
        if I.mu == _ONE:
            return 1
        if I.mu == -_ONE:
            return -1
        return None
    if base_kind == "quaternionic":
        if I.mu == _ONE:
            return -1
        if I.mu == -_ONE:
            return 1
        return None
    return None


# -- congruence normal forms ------------------------------------------------


def _as_fraction_matrix(M):
    out = []
    for row in M:
        r = []
        for x in row:
            x = as_scalar(x)
            if not x.is_rational():
                raise InputError("normal forms need rational matrix entries")
            r.append(x.as_fraction())
        out.append(r)
    return out


def congruence_diagonalize(M):
    """Exact symmetric reduction: returns (g, diag) with g M g^T diagonal."""
    A = _as_fraction_matrix(M)
    n = len(A)
    for i in range(n):
        for j in range(n):
            if A[i][j] != A[j][i]:
                raise InputError("matrix is not symmetric")
    g = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def row_op(dst, src, c):
        # row dst += c*row src, applied congruently (also to columns)
        for j in range(n):
            A[dst][j] += c * A[src][j]
        for j in range(n):
            A[j][dst] += c * A[j][src]
        for j in range(n):
            g[dst][j] += c * g[src][j]

    for k in range(n):
        if A[k][k] == 0:
            # find a later row with a nonzero pairing to fix the pivot
            pivot = None
            for j in range(k + 1, n):
                if A[j][j] != 0:
                    pivot = ("swap", j)
                    break
            if pivot is None:
                for j in range(k + 1, n):
                    if A[k][j] != 0:
                        pivot = ("add", j)
                        break
            if pivot is None:
                continue
            mode, j = pivot
            if mode == "swap":
                A[k], A[j] = A[j], A[k]
                for r in range(n):
                    A[r][k], A[r][j] = A[r][j], A[r][k]
                g[k], g[j] = g[j], g[k]
            else:
                row_op(k, j, Fraction(1))
        if A[k][k] == 0:
            continue
        for j in range(k + 1, n):
            if A[j][k] != 0:
                row_op(j, k, -A[j][k] / A[k][k])
    return g, [A[i][i] for i in range(n)]


def symmetric_signature(M):
    """Sylvester signature (p, q, zero-count) of a symmetric rational matrix."""
    _, diag = congruence_diagonalize(M)
    p = sum(1 for d in diag if d > 0)
    q = sum(1 for d in diag if d < 0)
    return p, q, len(diag) - p - q


def symplectic_normal_form(M):
    """g with g M g^T = hyperbolic-pair form diag([[0,1],[-1,0]], ...)."""
    A = _as_fraction_matrix(M)
    n = len(A)
    for i in range(n):
        for j in range(n):
            if A[i][j] != -A[j][i]:
                raise InputError("matrix is not antisymmetric")
    if n % 2:
        raise InputError("odd-dimensional antisymmetric matrices are degenerate")
    basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def pair(u, v):
        return sum(u[i] * A[i][j] * v[j] for i in range(n) for j in range(n))

    out = []
    pool = list(basis)
    while pool:
        u = pool.pop(0)
        v = None
        for idx, cand in enumerate(pool):
            c = pair(u, cand)
            if c != 0:
                v = [x / c for x in pool.pop(idx)]
                break
        if v is None:
            raise InputError("form is degenerate; no symplectic normal form")
        out.append(u)
        out.append(v)
        reduced = []
        for wv in pool:
            a = pair(u, wv)
            b = pair(v, wv)
            # subtract projections so wv pairs to zero with u and v
            nw = [wv[i] - a * v[i] + b * u[i] for i in range(n)]
            reduced.append(nw)
        pool = reduced
    return out

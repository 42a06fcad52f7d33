"""Symmetric and non-symmetric Frobenius structures with preferred normalization.

A FrobeniusData couples an algebra with a counit eps and the scale R. The
preferred normalization is specialness: R * m(B) = 1 for the inverse-form
element B of the pairing (a,b) -> eps(ab). The three standard families:

  fhk           eps(a) = R * sum_i |D_i| n_i tr(a_i) on matrix-block algebras
  group         eps(a) = R * |H| * (coefficient of the unit) on group algebras
  from_element  eps(a) = tr(x a) for a chosen invertible x

where tr is the algebra's trace functional (real part of the matrix trace
on the real forms, regular trace on group algebras). All derived tensors,
the Nakayama automorphism, and the genus closed form live here.
"""

from __future__ import annotations

from .algebra import Element
from .errors import InputError, VerificationError
from .linalg import mat_inverse
from .scalars import ExactScalar, as_scalar

_ZERO = ExactScalar.zero()
_ONE = ExactScalar.one()

_DIVISION_SIZE = {"R": 1, "C": 1, "C_R": 2, "H_R": 4}


class FrobeniusData:
    """eps as a vector over the basis, plus R. Tensors are cached lazily.

    Construct via frobenius_standard for validated data; direct construction
    performs no checks (negative tests rely on that).
    """

    def __init__(self, algebra, R, eps, family="raw", x=None):
        self.algebra = algebra
        self.R = as_scalar(R)
        self.eps = tuple(as_scalar(c) for c in eps)
        self.family = family
        self.x = x
        self._tensors = None
        self._nakayama = None

    def __repr__(self):
        return "Frobenius(%s, family=%s, R=%s)" % (self.algebra.name, self.family, self.R)

    def eps_of(self, elem):
        coeffs = elem.coeffs if isinstance(elem, Element) else elem
        acc = _ZERO
        for e, c in zip(self.eps, coeffs):
            if not e.is_zero() and not c.is_zero():
                acc = acc + e * c
        return acc


def frobenius_standard(algebra, family, R, x=None):
    """Build one of the standard families and validate specialness exactly."""
    R = as_scalar(R)
    if R.is_zero():
        raise InputError("R must be nonzero")
    if family == "fhk":
        if not algebra.blocks:
            raise InputError("fhk normalization needs matrix-block metadata")
        coeffs = [_ZERO] * algebra.dim
        for blk in algebra.blocks:
            scale = R * (_DIVISION_SIZE[blk.ring] * blk.n)
            for p in range(blk.n):
                coeffs[blk.start + p * blk.n + p] = scale
        x_elem = algebra.element(coeffs)
    elif family == "group":
        if algebra.mult.get((0, 0)) is None:
            raise InputError("group normalization needs an algebra")
        x_elem = R * algebra.one()
    elif family == "from_element":
        if x is None:
            raise InputError("from_element needs the element x")
        x_elem = x if isinstance(x, Element) else algebra.element(x)
        if x_elem.alg is not algebra:
            raise InputError("x lives in a different algebra")
    else:
        raise InputError("unknown family %r" % (family,))

    eps = [algebra.trace_of((x_elem * e).coeffs) for e in algebra.basis()]
    F = FrobeniusData(algebra, R, eps, family=family, x=x_elem)
    # nondegeneracy is checked by the inversion inside bilinear_tensors
    mB = multiplied_form(F)
    if F.R * mB != algebra.one():
        raise InputError(
            "form is not special: R*m(B) = %r, expected the unit" % (F.R * mB,)
        )
    return F


def bilinear_tensors(F):
    """(C, B_inv, B): C sparse dict (a,b,c) -> eps(e_a e_b e_c); B = B_inv^{-1}."""
    if F._tensors is None:
        alg = F.algebra
        d = alg.dim
        B_inv = [[_ZERO] * d for _ in range(d)]
        for (a, b), terms in alg.mult.items():
            acc = _ZERO
            for c, k in terms:
                e = F.eps[c]
                if not e.is_zero() and not k.is_zero():
                    acc = acc + k * e
            if not acc.is_zero():
                B_inv[a][b] = acc
        try:
            B = mat_inverse(B_inv)
        except ValueError:
            raise InputError("bilinear form is degenerate") from None
        C = {}
        for (a, b), terms in alg.mult.items():
            for c_idx, k in terms:
                # e_a e_b = sum k e_{c_idx}; then eps(e_{c_idx} e_c)
                for c in range(d):
                    v = B_inv[c_idx][c]
                    if not v.is_zero():
                        cur = C.get((a, b, c), _ZERO)
                        C[(a, b, c)] = cur + k * v
        C = {key: v for key, v in C.items() if not v.is_zero()}
        F._tensors = (C, B_inv, B)
    return F._tensors


def b_pairs(F):
    """Nonzero entries of B as (a, b, coeff): B = sum coeff e_a (x) e_b."""
    _, _, B = bilinear_tensors(F)
    d = F.algebra.dim
    return [
        (a, b, B[a][b])
        for a in range(d)
        for b in range(d)
        if not B[a][b].is_zero()
    ]


def multiplied_form(F):
    """m(B) = sum_ab B^{ab} e_a e_b as an Element."""
    alg = F.algebra
    acc = [_ZERO] * alg.dim
    for a, b, coeff in b_pairs(F):
        for c, k in alg.mult.get((a, b), ()):
            acc[c] = acc[c] + coeff * k
    return alg.element(acc)


def nakayama(F):
    """Automorphism sigma with eps(xy) = eps(sigma(y) x), as a matrix sigma_b^d."""
    if F._nakayama is None:
        _, B_inv, B = bilinear_tensors(F)
        d = F.algebra.dim
        sigma = [[_ZERO] * d for _ in range(d)]
        for b in range(d):
            for dd in range(d):
                acc = _ZERO
                for a in range(d):
                    u = B_inv[a][b]
                    if not u.is_zero():
                        v = B[a][dd]
                        if not v.is_zero():
                            acc = acc + u * v
                sigma[b][dd] = acc
        F._nakayama = sigma
    return F._nakayama


def apply_matrix(F, matrix, elem):
    """Apply a basis-indexed matrix map_b^d to an element."""
    alg = F.algebra
    out = [_ZERO] * alg.dim
    for b, c in enumerate(elem.coeffs):
        if not c.is_zero():
            row = matrix[b]
            for dd in range(alg.dim):
                if not row[dd].is_zero():
                    out[dd] = out[dd] + c * row[dd]
    return alg.element(out)


def nakayama_apply(F, elem):
    return apply_matrix(F, nakayama(F), elem)


def nakayama_inverse_apply(F, elem):
    sigma = nakayama(F)
    try:
        inv = mat_inverse(sigma)
    except ValueError:
        raise VerificationError("Nakayama matrix is singular") from None
    return apply_matrix(F, inv, elem)


def is_spherical(F):
    """sigma^2 = id; equivalently the pairing splits symmetric/antisymmetric."""
    sigma = nakayama(F)
    d = F.algebra.dim
    for b in range(d):
        for dd in range(d):
            acc = _ZERO
            for m in range(d):
                u = sigma[b][m]
                if not u.is_zero() and not sigma[m][dd].is_zero():
                    acc = acc + u * sigma[m][dd]
            if acc != (_ONE if b == dd else _ZERO):
                return False
    return True


def is_symmetric(F):
    _, B_inv, _ = bilinear_tensors(F)
    d = F.algebra.dim
    return all(B_inv[a][b] == B_inv[b][a] for a in range(d) for b in range(a))


def z_element(F):
    """z = sum e_a e_b e_c e_d B^{ac} B^{bd}; the genus one handle element."""
    alg = F.algebra
    pairs = b_pairs(F)
    acc = [_ZERO] * alg.dim
    for a, c, k1 in pairs:
        for b, dd, k2 in pairs:
            # e_a e_b first, then e_c e_d, then combine
            left = alg.mult.get((a, b))
            right = alg.mult.get((c, dd))
            if not left or not right:
                continue
            f = k1 * k2
            for m1, c1 in left:
                for m2, c2 in right:
                    for out, c3 in alg.mult.get((m1, m2), ()):
                        acc[out] = acc[out] + f * c1 * c2 * c3
    return alg.element(acc)


def closed_genus_invariant(F, g):
    """Z(Sigma_g) = R * eps(z^g); genus 0 is R * eps(1)."""
    g = int(g)
    if g < 0:
        raise InputError("genus must be nonnegative")
    if g == 0:
        return F.R * F.eps_of(F.algebra.one())
    z = z_element(F)
    return F.R * F.eps_of(z**g)


def verify_separability(F):
    """x |> t = t <| x for t = R * sum B^{ab} e_a (x) e_b, and m(t) = 1."""
    alg = F.algebra
    d = alg.dim
    pairs = b_pairs(F)
    for g in range(d):
        lhs = {}
        rhs = {}
        for a, b, k in pairs:
            for c, f in alg.mult.get((g, a), ()):
                key = (c, b)
                lhs[key] = lhs.get(key, _ZERO) + k * f
            for c, f in alg.mult.get((b, g), ()):
                key = (a, c)
                rhs[key] = rhs.get(key, _ZERO) + k * f
        keys = set(lhs) | set(rhs)
        for key in keys:
            if lhs.get(key, _ZERO) != rhs.get(key, _ZERO):
                raise VerificationError(
                    "separability element is not central: mismatch at basis %d, slot %s" % (g, (key,))
                )
    if F.R * multiplied_form(F) != alg.one():
        raise VerificationError("m(t) is not the unit")


def verify_frobenius_identities(F):
    """The pairing is associative-compatible and sigma respects eps."""
    alg = F.algebra
    C, B_inv, B = bilinear_tensors(F)
    d = alg.dim
    # C_{abc} B^{cd} = B^{de} C_{eab}: both sides express e_a e_b against the dual basis
    for a in range(d):
        for b in range(d):
            for dd in range(d):
                lhs = _ZERO
                for c in range(d):
                    v = C.get((a, b, c))
                    if v is not None and not B[c][dd].is_zero():
                        lhs = lhs + v * B[c][dd]
                rhs = _ZERO
                for e in range(d):
                    v = C.get((e, a, b))
                    if v is not None and not B[dd][e].is_zero():
                        rhs = rhs + B[dd][e] * v
                if lhs != rhs:
                    raise VerificationError("pairing/product compatibility fails at (%d,%d,%d)" % (a, b, dd))
    sigma = nakayama(F)
    # eps o sigma = eps
    for b in range(d):
        acc = _ZERO
        for dd in range(d):
            if not sigma[b][dd].is_zero():
                acc = acc + sigma[b][dd] * F.eps[dd]
        if acc != F.eps[b]:
            raise VerificationError("eps o sigma != eps at basis %d" % b)

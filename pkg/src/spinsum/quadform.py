"""Quadratic forms on the Z2 homology of a closed oriented surface.

A spin structure on a genus g surface is recorded by the 2g values the
associated quadratic form takes on a standard symplectic basis
a_1, b_1, ..., a_g, b_g. The form extends to all 2^(2g) classes by
q(x+y) = q(x) + q(y) + x.y, and its Arf invariant (the parity) is the
normalized character sum over all classes.
"""

from __future__ import annotations

from .errors import InputError
from .scalars import ExactScalar, as_scalar

_ONE = ExactScalar.one()


class QuadraticForm:
    """Values on the symplectic basis, in the order a1, b1, a2, b2, ..."""

    def __init__(self, genus, values):
        values = tuple(int(v) % 2 for v in values)
        if len(values) != 2 * genus:
            raise InputError("need %d values for genus %d" % (2 * genus, genus))
        self.genus = genus
        self.values = values

    def value_on(self, x):
        """q(x) for a homology class given as 2g coordinate bits."""
        if len(x) != 2 * self.genus:
            raise InputError("class vector has wrong length")
        total = 0
        for i, (c, v) in enumerate(zip(x, self.values)):
            total += (c % 2) * v
        # pairwise intersection corrections within each handle
        for i in range(self.genus):
            total += (x[2 * i] % 2) * (x[2 * i + 1] % 2)
        return total % 2

    def __repr__(self):
        return "QuadraticForm(g=%d, values=%r)" % (self.genus, self.values)


def arf(q):
    """Normalized character sum: 2^{-g} * sum over classes of (-1)^q."""
    g = q.genus
    total = 0
    for mask in range(1 << (2 * g)):
        x = [(mask >> i) & 1 for i in range(2 * g)]
        total += -1 if q.value_on(x) else 1
    num, den = total, 1 << g
    if num == den:
        return _ONE
    if num == -den:
        return -_ONE
    raise InputError("character sum %d/%d is not a sign; not a quadratic form" % (num, den))


def _diagonal_parity(values):
    """Sum of q(a_i) q(b_i) mod 2; agrees with arf's sign exponent."""
    t = 0
    for i in range(0, len(values), 2):
        t += values[i] * values[i + 1]
    return t % 2


def parity_census(g):
    """(even_count, odd_count) over all 2^(2g) value vectors."""
    if g > 8:
        raise InputError("census enumeration is bounded at genus 8")
    even = odd = 0
    for mask in range(1 << (2 * g)):
        values = [(mask >> i) & 1 for i in range(2 * g)]
        if _diagonal_parity(values):
            odd += 1
        else:
            even += 1
    return even, odd


def immersion_to_parity(curl_flags):
    """Parity of the spin structure whose generator curls are the given bits."""
    flags = [int(v) % 2 for v in curl_flags]
    if len(flags) % 2:
        raise InputError("curl flags come in handle pairs")
    return "odd" if _diagonal_parity(flags) else "even"

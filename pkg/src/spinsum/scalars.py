"""Exact scalars: rationals extended by roots of unity.

A value lives in Q(zeta_n) for some conductor n, stored as an integer
coefficient vector of length phi(n) in the power basis of zeta_n over a
single positive denominator, reduced mod the n-th cyclotomic polynomial
and gcd-normalized. Conductors mix automatically through lcm lifting, and
a result whose coefficients beyond the constant vanish collapses back to
the rational lane (n=1). Conductors are kept odd or divisible by 4, the
unique-subfield convention, so equality of canonical forms is literal.

No floats anywhere in arithmetic; the only float path is complex_value(),
which exists for display.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
import cmath

from ._kernel import mul_reduce


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _poly_divexact(num, den):
    """Exact division of integer polynomials, ascending coefficients, den monic."""
    num = list(num)
    dd = len(den) - 1
    qd = len(num) - 1 - dd
    quot = [0] * (qd + 1)
    for i in range(qd, -1, -1):
        c = num[i + dd]
        if c:
            quot[i] = c
            for j in range(dd + 1):
                num[i + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Integer coefficients of Phi_n, ascending. Phi_n = (x^n - 1) / prod Phi_d."""
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n):
        if d < n:
            poly = _poly_divexact(poly, cyclotomic_poly(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _ring(n):
    """(degree, reduction rows) for Q(zeta_n); rows[k] = x^k mod Phi_n, k <= max(n, 2*deg-2)."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    count = max(n + 1, 2 * deg - 1)
    rows = []
    cur = [1] + [0] * (deg - 1)
    rows.append(list(cur))
    for _ in range(count - 1):
        carry = cur[deg - 1]
        cur = [0] + cur[: deg - 1]
        if carry:
            # x^deg = -(phi_0 + phi_1 x + ... ) since Phi is monic
            for j in range(deg):
                cur[j] -= carry * phi[j]
        rows.append(list(cur))
    return deg, rows


def _rebase_half(n, num):
    """Rewrite a vector at conductor n = 2 mod 4 over zeta_{n/2}: zeta_n = -zeta_m^{(m+1)/2}."""
    m = n // 2
    degm, rowsm = _ring(m)
    half = (m + 1) // 2
    out = [0] * degm
    for k, c in enumerate(num):
        if c:
            row = rowsm[(k * half) % m]
            s = c if k % 2 == 0 else -c
            for j in range(degm):
                out[j] += s * row[j]
    return m, out


class ExactScalar:
    """Immutable element of Q(zeta_n). Build via from_int/from_fraction/root_of_unity/parse."""

    __slots__ = ("n", "num", "den")
    __hash__ = None  # equality crosses conductors; hashing would need minimal forms

    def __init__(self, n, num, den):
        self.n = n
        self.num = num
        self.den = den

    # -- construction ------------------------------------------------------

    @staticmethod
    def _make(n, num, den):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        deg, _ = _ring(n)
        num = list(num[:deg]) + [0] * (deg - len(num))
        if n % 4 == 2:
            n, num = _rebase_half(n, num)
        if n > 1 and not any(num[1:]):
            n, num = 1, [num[0]]
        if den < 0:
            den = -den
            num = [-c for c in num]
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            den //= g
            num = [c // g for c in num]
        if not any(num):
            return ExactScalar(1, (0,), 1)
        return ExactScalar(n, tuple(num), den)

    @staticmethod
    def from_int(v):
        return ExactScalar._make(1, [int(v)], 1)

    @staticmethod
    def from_fraction(v, den=None):
        if den is not None:
            return ExactScalar._make(1, [int(v)], int(den))
        f = Fraction(v)
        return ExactScalar._make(1, [f.numerator], f.denominator)

    @staticmethod
    def zero():
        return _ZERO

    @staticmethod
    def one():
        return _ONE

    # -- representation ----------------------------------------------------

    def is_zero(self):
        return self.n == 1 and self.num[0] == 0

    def is_rational(self):
        return self.n == 1

    def as_fraction(self):
        if self.n != 1:
            raise ValueError("not a rational value: %s" % self.serialize())
        return Fraction(self.num[0], self.den)

    def coefficients(self):
        """Power-basis coefficients as Fractions, length phi(n)."""
        return [Fraction(c, self.den) for c in self.num]

    def complex_value(self):
        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(c * z**k for k, c in enumerate(self.num)) / self.den

    def serialize(self):
        if self.n == 1:
            if self.den == 1:
                return str(self.num[0])
            return "%d/%d" % (self.num[0], self.den)
        parts = []
        for c in self.num:
            f = Fraction(c, self.den)
            parts.append(str(f.numerator) if f.denominator == 1 else "%d/%d" % (f.numerator, f.denominator))
        return "cyclo(%d)[%s]" % (self.n, ", ".join(parts))

    def __repr__(self):
        return self.serialize()

    # -- arithmetic --------------------------------------------------------

    def _lift_num(self, L):
        """Coefficient vector of self at conductor L (n divides L), ignoring den."""
        if L == self.n:
            return list(self.num)
        step = L // self.n
        degL, rowsL = _ring(L)
        out = [0] * degL
        for k, c in enumerate(self.num):
            if c:
                row = rowsL[k * step]
                for j in range(degL):
                    out[j] += c * row[j]
        return out

    @staticmethod
    def _coerce(v):
        if isinstance(v, ExactScalar):
            return v
        if isinstance(v, int):
            return ExactScalar._make(1, [v], 1)
        if isinstance(v, Fraction):
            return ExactScalar._make(1, [v.numerator], v.denominator)
        return NotImplemented

    def __add__(self, other):
        other = ExactScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == other.n:
            num = [a * other.den + b * self.den for a, b in zip(self.num, other.num)]
            return ExactScalar._make(self.n, num, self.den * other.den)
        L = lcm(self.n, other.n)
        a = self._lift_num(L)
        b = other._lift_num(L)
        num = [x * other.den + y * self.den for x, y in zip(a, b)]
        return ExactScalar._make(L, num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero():
            return self
        return ExactScalar(self.n, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = ExactScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = ExactScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = ExactScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == 1:
            c = self.num[0]
            if c == 0:
                return _ZERO
            return ExactScalar._make(other.n, [c * x for x in other.num], self.den * other.den)
        if other.n == 1:
            return other.__mul__(self)
        if self.n == other.n:
            deg, rows = _ring(self.n)
            num = mul_reduce(self.num, other.num, rows, deg)
            return ExactScalar._make(self.n, num, self.den * other.den)
        L = lcm(self.n, other.n)
        deg, rows = _ring(L)
        num = mul_reduce(self._lift_num(L), other._lift_num(L), rows, deg)
        return ExactScalar._make(L, num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.n == 1:
            return ExactScalar._make(1, [self.den if self.num[0] > 0 else -self.den], abs(self.num[0]))
        # extended Euclid in Q[x] against Phi_n: s*self + t*Phi = 1
        a = [Fraction(c, self.den) for c in self.num]
        b = [Fraction(c) for c in cyclotomic_poly(self.n)]
        s0, s1 = [Fraction(1)], [Fraction(0)]

        def deg_of(p):
            d = len(p) - 1
            while d >= 0 and p[d] == 0:
                d -= 1
            return d

        while True:
            db = deg_of(b)
            if db <= 0:
                break
            da = deg_of(a)
            if da < db:
                a, b, s0, s1 = b, a, s1, s0
                continue
            # kill a's leading term
            c = a[da] / b[db]
            shift = da - db
            for j in range(db + 1):
                a[shift + j] -= c * b[j]
            ns0 = list(s0) + [Fraction(0)] * max(0, shift + len(s1) - len(s0))
            for j in range(len(s1)):
                ns0[shift + j] -= c * s1[j]
            s0 = ns0
        if deg_of(b) < 0 or b[0] == 0:
            raise ZeroDivisionError("not invertible")  # zero divisor cannot occur in a field
        inv = [c / b[0] for c in s1]
        den = 1
        for c in inv:
            den = lcm(den, c.denominator)
        num = [int(c * den) for c in inv]
        return ExactScalar._make(self.n, num, den)

    def __truediv__(self, other):
        other = ExactScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.n == 1:
            if other.num[0] == 0:
                raise ZeroDivisionError("division by zero")
            return ExactScalar._make(self.n, [other.den * c for c in self.num], self.den * other.num[0])
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = ExactScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e):
        e = int(e)
        if e < 0:
            return self.inverse() ** (-e)
        result = _ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def conjugate(self):
        """Galois conjugation zeta -> zeta^{-1}; complex conjugation on values."""
        if self.n == 1:
            return self
        deg, rows = _ring(self.n)
        out = [0] * deg
        for k, c in enumerate(self.num):
            if c:
                row = rows[(self.n - k) % self.n]
                for j in range(deg):
                    out[j] += c * row[j]
        return ExactScalar._make(self.n, out, self.den)

    def __eq__(self, other):
        other = ExactScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == other.n:
            return self.num == other.num and self.den == other.den
        L = lcm(self.n, other.n)
        a = self._lift_num(L)
        b = other._lift_num(L)
        return all(x * other.den == y * self.den for x, y in zip(a, b))

    def __ne__(self, other):
        r = self.__eq__(other)
        if r is NotImplemented:
            return r
        return not r

    def __bool__(self):
        return not self.is_zero()


_ZERO = ExactScalar(1, (0,), 1)
_ONE = ExactScalar(1, (1,), 1)


def as_scalar(v):
    """Coerce int / Fraction / str / ExactScalar to ExactScalar."""
    if isinstance(v, ExactScalar):
        return v
    if isinstance(v, str):
        return parse_scalar(v)
    r = ExactScalar._coerce(v)
    if r is NotImplemented:
        raise TypeError("cannot interpret %r as an exact scalar" % (v,))
    return r


def root_of_unity(n, k=1):
    """zeta_n^k as an exact scalar."""
    n = int(n)
    if n < 1:
        raise ValueError("order must be positive")
    k = int(k) % n
    if k == 0:
        return _ONE
    g = gcd(k, n)
    m, kk = n // g, k // g  # primitive m-th root, gcd(kk, m) = 1
    if m == 1:
        return _ONE
    if m == 2:
        return ExactScalar._make(1, [-1], 1)
    _, rows = _ring(m)
    # power basis vector for x^kk; _make canonicalizes (incl. m = 2 mod 4 rebase)
    return ExactScalar._make(m, list(rows[kk]), 1)


def scalar_inverse(x):
    return as_scalar(x).inverse()


def scalar_conjugate(x):
    return as_scalar(x).conjugate()


_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_CYC_RE = re.compile(r"^cyclo\((\d+)\)\[(.*)\]$")


def parse_scalar(text):
    """Inverse of ExactScalar.serialize: 'p/q' or 'cyclo(N)[c0, c1, ...]'."""
    s = text.strip()
    m = _CYC_RE.match(s)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ValueError("bad conductor in %r" % text)
        body = m.group(2).strip()
        coeffs = []
        if body:
            for part in body.split(","):
                part = part.strip()
                if not _RAT_RE.match(part):
                    raise ValueError("bad coefficient %r in %r" % (part, text))
                coeffs.append(Fraction(part))
        deg, _ = _ring(n)
        if len(coeffs) > deg:
            raise ValueError("too many coefficients for conductor %d" % n)
        den = 1
        for c in coeffs:
            den = lcm(den, c.denominator)
        num = [int(c * den) for c in coeffs]
        return ExactScalar._make(n, num, den)
    if _RAT_RE.match(s):
        f = Fraction(s)
        return ExactScalar._make(1, [f.numerator], f.denominator)
    raise ValueError("cannot parse scalar %r" % text)


def decimal_string(x, sig=12):
    """12-significant-digit decimal rendering, display only; exact values stay exact."""
    z = as_scalar(x).complex_value()
    re_part, im_part = z.real, z.imag
    # a pure display decision: drop the imaginary term when it is exactly zero
    # in the embedding up to double rounding noise relative to the magnitude
    scale = max(abs(re_part), abs(im_part), 1.0)
    fmt = "%%.%dg" % sig
    if abs(im_part) <= 1e-13 * scale:
        return fmt % re_part
    re_s = fmt % re_part
    im_s = fmt % abs(im_part)
    return "%s%s%si" % (re_s, "+" if im_part >= 0 else "-", im_s)

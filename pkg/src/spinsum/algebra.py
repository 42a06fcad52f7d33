"""Finite dimensional algebras over the exact scalar field.

An Algebra stores sparse structure constants, the unit, a trace functional,
and optional metadata: simple-block layout for the standard matrix
constructions and a grading by a finite abelian group. The four base rings
are 'C' (complex matrix entries), and the real forms 'R', 'C_R', 'H_R'
whose basis splits each matrix unit into 1/i or 1/i/j/k components; the
trace functional on the real forms is the real part of the matrix trace.
"""

from __future__ import annotations

from .groups import validate_table
from .linalg import nullspace
from .scalars import ExactScalar, as_scalar, root_of_unity

_ZERO = ExactScalar.zero()
_ONE = ExactScalar.one()

RINGS = ("R", "C_R", "H_R", "C")

_RING_UNITS = {"R": 1, "C": 1, "C_R": 2, "H_R": 4}

# unit part products for the real forms: (w1, w2) -> (w, sign)
_CPLX_MULT = {(0, 0): (0, 1), (0, 1): (1, 1), (1, 0): (1, 1), (1, 1): (0, -1)}
_QUAT_MULT = {
    (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
    (1, 0): (1, 1), (2, 0): (2, 1), (3, 0): (3, 1),
    (1, 1): (0, -1), (2, 2): (0, -1), (3, 3): (0, -1),
    (1, 2): (3, 1), (2, 1): (3, -1),
    (2, 3): (1, 1), (3, 2): (1, -1),
    (3, 1): (2, 1), (1, 3): (2, -1),
}
_UNIT_MULT = {"R": {(0, 0): (0, 1)}, "C": {(0, 0): (0, 1)}, "C_R": _CPLX_MULT, "H_R": _QUAT_MULT}
_UNIT_NAMES = {0: "", 1: "i.", 2: "j.", 3: "k."}


class Block:
    """One simple summand of a standard construction."""

    __slots__ = ("ring", "n", "start", "size")

    def __init__(self, ring, n, start):
        self.ring = ring
        self.n = n
        self.start = start
        self.size = _RING_UNITS[ring] * n * n

    def __repr__(self):
        return "Block(%s, n=%d, start=%d)" % (self.ring, self.n, self.start)


class Grading:
    """Grades in Z_{n1} x ... x Z_{np}, one tuple per basis index."""

    __slots__ = ("orders", "grades")

    def __init__(self, orders, grades):
        self.orders = tuple(int(v) for v in orders)
        self.grades = tuple(tuple(int(c) % o for c, o in zip(g, self.orders)) for g in grades)

    def add(self, g, h):
        return tuple((a + b) % o for a, b, o in zip(g, h, self.orders))

    def neg(self, g):
        return tuple((-a) % o for a, o in zip(g, self.orders))

    def all_grades(self):
        return sorted(set(self.grades))

    def validate(self, algebra):
        """Product of grade-g and grade-h vectors must land in grade g+h."""
        for a in range(algebra.dim):
            for b in range(algebra.dim):
                want = self.add(self.grades[a], self.grades[b])
                for c, coeff in algebra.mult.get((a, b), ()):
                    if not coeff.is_zero() and self.grades[c] != want:
                        raise ValueError(
                            "grading violated: e%d * e%d hits grade %s, expected %s"
                            % (a, b, self.grades[c], want)
                        )


class Algebra:
    def __init__(self, dim, mult, unit, trace, labels=None, blocks=None, grading=None, name=""):
        self.dim = dim
        self.mult = mult
        self.unit = tuple(unit)
        self.trace = tuple(trace)
        self.labels = list(labels) if labels else ["e%d" % a for a in range(dim)]
        self.blocks = blocks
        self.grading = grading
        self.name = name or "algebra(dim=%d)" % dim

    def __repr__(self):
        return self.name

    # -- elements ------------------------------------------------------

    def element(self, coeffs):
        coeffs = [as_scalar(c) for c in coeffs]
        if len(coeffs) != self.dim:
            raise ValueError("expected %d coefficients" % self.dim)
        return Element(self, tuple(coeffs))

    def basis_element(self, a):
        coeffs = [_ZERO] * self.dim
        coeffs[a] = _ONE
        return Element(self, tuple(coeffs))

    def basis(self):
        return [self.basis_element(a) for a in range(self.dim)]

    def one(self):
        return Element(self, self.unit)

    def zero(self):
        return Element(self, (_ZERO,) * self.dim)

    def scalar_element(self, c):
        c = as_scalar(c)
        return Element(self, tuple(c * u for u in self.unit))

    # -- operations ------------------------------------------------------

    def multiply_vec(self, x, y):
        acc = [_ZERO] * self.dim
        for a, ca in enumerate(x):
            if not ca.is_zero():
                for b, cb in enumerate(y):
                    if not cb.is_zero():
                        terms = self.mult.get((a, b))
                        if terms:
                            f = ca * cb
                            for c, k in terms:
                                acc[c] = acc[c] + f * k
        return acc

    def trace_of(self, coeffs):
        acc = _ZERO
        for t, c in zip(self.trace, coeffs):
            if not t.is_zero() and not c.is_zero():
                acc = acc + t * c
        return acc

    def structure_constant(self, a, b, c):
        for cc, k in self.mult.get((a, b), ()):
            if cc == c:
                return k
        return _ZERO

    def validate_associative(self):
        """(e_a e_b) e_c == e_a (e_b e_c) for all basis triples; raises on failure."""
        basis = self.basis()
        for a, ea in enumerate(basis):
            for b, eb in enumerate(basis):
                ab = ea * eb
                for c, ec in enumerate(basis):
                    if (ab * ec) != (ea * (eb * ec)):
                        raise ValueError("not associative at basis triple (%d,%d,%d)" % (a, b, c))

    def validate_unit(self):
        one = self.one()
        for a, ea in enumerate(self.basis()):
            if one * ea != ea or ea * one != ea:
                raise ValueError("unit fails on basis index %d" % a)

    def grade_of(self, a):
        if self.grading is None:
            raise ValueError("algebra carries no grading")
        return self.grading.grades[a]


class Element:
    __slots__ = ("alg", "coeffs")
    __hash__ = None

    def __init__(self, alg, coeffs):
        self.alg = alg
        self.coeffs = coeffs

    def __add__(self, other):
        self._check(other)
        return Element(self.alg, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return Element(self.alg, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return Element(self.alg, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return Element(self.alg, tuple(self.alg.multiply_vec(self.coeffs, other.coeffs)))
        c = as_scalar(other)
        return Element(self.alg, tuple(c * a for a in self.coeffs))

    def __rmul__(self, other):
        c = as_scalar(other)
        return Element(self.alg, tuple(c * a for a in self.coeffs))

    def __truediv__(self, other):
        c = as_scalar(other)
        return Element(self.alg, tuple(a / c for a in self.coeffs))

    def __pow__(self, e):
        e = int(e)
        if e < 0:
            raise ValueError("negative powers of algebra elements are not defined here")
        acc = self.alg.one()
        base = self
        while e:
            if e & 1:
                acc = acc * base
            e >>= 1
            if e:
                base = base * base
        return acc

    def __eq__(self, other):
        if not isinstance(other, Element) or other.alg is not self.alg:
            return NotImplemented
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def trace(self):
        return self.alg.trace_of(self.coeffs)

    def support(self):
        return [a for a, c in enumerate(self.coeffs) if not c.is_zero()]

    def _check(self, other):
        if not isinstance(other, Element) or other.alg is not self.alg:
            raise TypeError("elements of different algebras")

    def __repr__(self):
        parts = []
        for a, c in enumerate(self.coeffs):
            if not c.is_zero():
                parts.append("(%s)*%s" % (c.serialize(), self.alg.labels[a]))
        return " + ".join(parts) if parts else "0"


def multiply(algebra, x, y):
    """Spec-level product of two coefficient vectors or elements."""
    if isinstance(x, Element):
        x = x.coeffs
    if isinstance(y, Element):
        y = y.coeffs
    return algebra.multiply_vec([as_scalar(c) for c in x], [as_scalar(c) for c in y])


def matrix_algebra(n, ring):
    """Full matrix algebra M_n over R, C_R, H_R (real forms) or C."""
    n = int(n)
    if n < 1:
        raise ValueError("matrix size must be positive")
    if ring not in RINGS:
        raise ValueError("ring must be one of %s" % (RINGS,))
    units = _RING_UNITS[ring]
    umult = _UNIT_MULT[ring]
    dim = units * n * n

    def idx(w, p, q):
        return w * n * n + p * n + q

    mult = {}
    for w1 in range(units):
        for w2 in range(units):
            w, sign = umult[(w1, w2)]
            k = _ONE if sign == 1 else -_ONE
            for p in range(n):
                for q in range(n):
                    for s in range(n):
                        mult[(idx(w1, p, q), idx(w2, q, s))] = ((idx(w, p, s), k),)

    unit = [_ZERO] * dim
    for p in range(n):
        unit[idx(0, p, p)] = _ONE
    # real forms use the real part of the matrix trace
    trace = [_ZERO] * dim
    for p in range(n):
        trace[idx(0, p, p)] = _ONE
    if ring == "C":
        labels = ["e%d%d" % (p + 1, q + 1) for p in range(n) for q in range(n)]
    else:
        labels = [
            "%se%d%d" % (_UNIT_NAMES[w], p + 1, q + 1)
            for w in range(units)
            for p in range(n)
            for q in range(n)
        ]
    return Algebra(
        dim,
        mult,
        unit,
        trace,
        labels=labels,
        blocks=[Block(ring, n, 0)],
        name="M%d(%s)" % (n, ring),
    )


def group_algebra(table, unit_index=None, labels=None, grading=None, name=""):
    """Group algebra over the scalar field; trace is the regular representation trace."""
    unit = validate_table(table)
    if unit_index is not None and int(unit_index) != unit:
        raise ValueError("declared unit index %s is not the table's unit %d" % (unit_index, unit))
    dim = len(table)
    mult = {}
    for a in range(dim):
        for b in range(dim):
            mult[(a, b)] = ((table[a][b], _ONE),)
    unit_vec = [_ZERO] * dim
    unit_vec[unit] = _ONE
    trace = [_ZERO] * dim
    trace[unit] = ExactScalar.from_int(dim)
    return Algebra(
        dim,
        mult,
        unit_vec,
        trace,
        labels=labels or ["g%d" % a for a in range(dim)],
        grading=grading,
        name=name or "C[G%d]" % dim,
    )


def direct_sum(*parts, grading=None, name=""):
    if not parts:
        raise ValueError("direct sum of nothing")
    dim = sum(p.dim for p in parts)
    offs = []
    o = 0
    for p in parts:
        offs.append(o)
        o += p.dim
    mult = {}
    unit = []
    trace = []
    labels = []
    blocks = []
    have_blocks = all(p.blocks is not None for p in parts)
    for i, (off, p) in enumerate(zip(offs, parts)):
        for (a, b), terms in p.mult.items():
            mult[(a + off, b + off)] = tuple((c + off, k) for c, k in terms)
        unit.extend(p.unit)
        trace.extend(p.trace)
        labels.extend("%d:%s" % (i, lbl) for lbl in p.labels)
        if have_blocks:
            for blk in p.blocks:
                blocks.append(Block(blk.ring, blk.n, blk.start + off))
    if not have_blocks:
        blocks = None
    if grading is None:
        gps = [p.grading for p in parts]
        if all(g is not None for g in gps) and len({g.orders for g in gps}) == 1:
            grading = Grading(gps[0].orders, [g for gp in gps for g in gp.grades])
    return Algebra(
        dim,
        mult,
        unit,
        trace,
        labels=labels,
        blocks=blocks,
        grading=grading,
        name=name or " + ".join(p.name for p in parts),
    )


def center_basis(algebra):
    """Basis of the center as a list of Elements, via one exact nullspace."""
    d = algebra.dim
    rows = []
    for a in range(d):
        # commutator with e_a, one block of d equations
        for c in range(d):
            row = []
            for b in range(d):
                row.append(algebra.structure_constant(b, a, c) - algebra.structure_constant(a, b, c))
            rows.append(row)
    return [algebra.element(v) for v in nullspace(rows)]


def complex_split(value):
    """Exact real/imaginary parts: value = re + i*im with re, im fixed by conjugation."""
    value = as_scalar(value)
    conj = value.conjugate()
    re = (value + conj) / 2
    im = (value - conj) / (2 * _I)
    return re, im


def from_matrix(algebra, rows):
    """Element of a single-block matrix algebra from an n x n entry matrix.

    For ring C entries are used as-is; for R they must be rational-real; for
    C_R each entry splits into 1 and i components. H_R entries must be given
    as 4-tuples (1, i, j, k parts).
    """
    if not algebra.blocks or len(algebra.blocks) != 1 or algebra.blocks[0].start != 0:
        raise ValueError("from_matrix needs a single-block matrix algebra")
    blk = algebra.blocks[0]
    n = blk.n
    coeffs = [_ZERO] * algebra.dim

    def idx(w, p, q):
        return w * n * n + p * n + q

    for p in range(n):
        for q in range(n):
            v = rows[p][q]
            if blk.ring == "H_R":
                parts = [as_scalar(c) for c in v] if isinstance(v, (tuple, list)) else [as_scalar(v), _ZERO, _ZERO, _ZERO]
                for w in range(4):
                    coeffs[idx(w, p, q)] = parts[w]
            elif blk.ring == "C_R":
                re, im = complex_split(v)
                coeffs[idx(0, p, q)] = re
                coeffs[idx(1, p, q)] = im
            else:
                coeffs[idx(0, p, q)] = as_scalar(v)
    return algebra.element(coeffs)


_I = root_of_unity(4)

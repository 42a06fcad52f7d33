"""State sum evaluation by sparse tensor contraction.

Every triangle contributes the cyclic trace tensor C (read reversed on
flag -1 triangles); every interior edge contributes B or S according to
the derived compatibility of its gluing. The engine absorbs the edge
matrix into one side, then greedily merges tensors along shared edges,
keeping a multiplication budget. A closed surface yields a scalar times
R^(vertex classes); a surface with boundary yields an indexed tensor
over the free half-edges.

The naive full state sum (explicit sum over edge colorings) is kept as an
independent oracle for small instances.
"""

from __future__ import annotations

import os

from .errors import CapExceeded, InputError, VerificationError
from .frobenius import bilinear_tensors
from .scalars import ExactScalar

_ZERO = ExactScalar.zero()
_ONE = ExactScalar.one()

DEFAULT_CAP = 10**8
CAP_ENV = "SPINSUM_CAP"


def resolve_cap(cap=None):
    if cap is not None:
        return int(cap)
    env = os.environ.get(CAP_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError("bad %s value %r" % (CAP_ENV, env)) from None
    return DEFAULT_CAP


class EvaluationReport:
    def __init__(self, value, interior_vertices, multiplications, order, boundary=None):
        self.value = value
        self.interior_vertices = interior_vertices
        self.multiplications = multiplications
        self.order = order
        self.boundary = boundary

    def __repr__(self):
        if self.boundary is None:
            return "EvaluationReport(value=%r, mults=%d)" % (self.value, self.multiplications)
        return "EvaluationReport(boundary over %d half-edges, mults=%d)" % (
            len(self.boundary[0]),
            self.multiplications,
        )


class _Budget:
    __slots__ = ("cap", "used")

    def __init__(self, cap):
        self.cap = cap
        self.used = 0

    def spend(self, k):
        self.used += k
        if self.used > self.cap:
            raise CapExceeded(
                "multiplication budget exhausted (%d > %d)" % (self.used, self.cap)
            )


def _triangle_tensor(C, flag, dim):
    """Sparse dict over (side0, side1, side2); flag -1 reads C reversed."""
    out = {}
    for (a, b, c), v in C.items():
        key = (a, b, c) if flag == 1 else (a, c, b)
        cur = out.get(key)
        out[key] = v if cur is None else cur + v
    return out


def _absorb(data, pos, W, budget):
    """Contract slot pos with matrix W: t'[..b..] = sum_a t[..a..] W[a][b]."""
    out = {}
    d = len(W)
    for key, v in data.items():
        a = key[pos]
        row = W[a]
        for b in range(d):
            w = row[b]
            if not w.is_zero():
                budget.spend(1)
                nk = key[:pos] + (b,) + key[pos + 1 :]
                cur = out.get(nk)
                nv = v * w
                out[nk] = nv if cur is None else cur + nv
    return {k: v for k, v in out.items() if not v.is_zero()}


def _self_trace(names, data, budget):
    """Contract repeated index names inside one tensor."""
    while True:
        dup = None
        for i, nm in enumerate(names):
            j = names.index(nm)
            if j != i:
                dup = (j, i)
                break
        if dup is None:
            return names, data
        i, j = dup
        out = {}
        for key, v in data.items():
            if key[i] == key[j]:
                nk = tuple(x for p, x in enumerate(key) if p not in (i, j))
                cur = out.get(nk)
                out[nk] = v if cur is None else cur + v
        names = [nm for p, nm in enumerate(names) if p not in (i, j)]
        data = {k: v for k, v in out.items() if not v.is_zero()}


def _merge(t1, t2, budget):
    names1, data1 = t1
    names2, data2 = t2
    shared = [nm for nm in names1 if nm in names2]
    pos1 = [names1.index(nm) for nm in shared]
    pos2 = [names2.index(nm) for nm in shared]
    keep1 = [p for p in range(len(names1)) if p not in pos1]
    keep2 = [p for p in range(len(names2)) if p not in pos2]
    out_names = [names1[p] for p in keep1] + [names2[p] for p in keep2]
    # bucket tensor2 by its shared projection
    buckets = {}
    for key, v in data2.items():
        proj = tuple(key[p] for p in pos2)
        buckets.setdefault(proj, []).append((tuple(key[p] for p in keep2), v))
    out = {}
    for key, v in data1.items():
        proj = tuple(key[p] for p in pos1)
        hits = buckets.get(proj)
        if not hits:
            continue
        base = tuple(key[p] for p in keep1)
        for rest, w in hits:
            budget.spend(1)
            nk = base + rest
            nv = v * w
            cur = out.get(nk)
            out[nk] = nv if cur is None else cur + nv
    return out_names, {k: v for k, v in out.items() if not v.is_zero()}


def evaluate(T, F, S=None, cap=None):
    """Contract the state sum of triangulation T with Frobenius data F.

    S is the symmetric involution matrix S^{ab}, required as soon as any
    gluing is orientation incompatible. Returns an EvaluationReport.
    """
    budget = _Budget(resolve_cap(cap))
    alg = F.algebra
    dim = alg.dim
    C, _, B = bilinear_tensors(F)
    T.validate()

    edge_list = T.edges()
    name_of = {}
    for idx, fs in enumerate(edge_list):
        for h in fs:
            name_of[h] = idx
    for h in T.boundary_half_edges():
        name_of[h] = ("b",) + h

    tensors = []
    for t in range(T.num_triangles):
        data = _triangle_tensor(C, T.flags[t], dim)
        names = [name_of[(t, s)] for s in (0, 1, 2)]
        tensors.append((names, data))

    order = []
    # absorb one matrix per interior edge, on the lower half-edge
    for idx, fs in enumerate(edge_list):
        h1, h2 = sorted(fs)
        if T.amplitude_is_b(h1):
            W = B
        else:
            if S is None:
                raise InputError(
                    "edge %r is orientation incompatible; involution data required" % (h1,)
                )
            W = S
        # the slot of half-edge (t, s) inside its triangle tensor is s
        t, s = h1
        names, data = tensors[t]
        tensors[t] = (names, _absorb(data, s, W, budget))

    tensors = [_self_trace(list(names), data, budget) for names, data in tensors]

    # greedy pairwise merges along shared names
    while True:
        best = None
        for i in range(len(tensors)):
            for j in range(i + 1, len(tensors)):
                shared = set(tensors[i][0]) & set(tensors[j][0])
                if shared:
                    open_count = len(tensors[i][0]) + len(tensors[j][0]) - 2 * len(shared)
                    if best is None or open_count < best[0]:
                        best = (open_count, i, j)
        if best is None:
            break
        _, i, j = best
        order.append((tensors[i][0], tensors[j][0]))
        merged = _merge(tensors[i], tensors[j], budget)
        merged = _self_trace(list(merged[0]), merged[1], budget)
        tensors = [t for k, t in enumerate(tensors) if k not in (i, j)] + [merged]

    r_power = F.R ** T.interior_vertex_count()
    scalar = r_power
    open_tensors = []
    for names, data in tensors:
        if names:
            open_tensors.append((names, data))
        else:
            scalar = scalar * data.get((), _ZERO)

    if not open_tensors:
        return EvaluationReport(scalar, T.interior_vertex_count(), budget.used, order)

    # boundary: tensor product of the remaining open tensors, scaled
    names = []
    data = {(): scalar}
    for nm2, d2 in open_tensors:
        new = {}
        for k1, v1 in data.items():
            for k2, v2 in d2.items():
                budget.spend(1)
                new[k1 + k2] = v1 * v2
        names.extend(nm2)
        data = new
    return EvaluationReport(None, T.interior_vertex_count(), budget.used, order, boundary=(names, data))


def naive_state_sum(T, F, S=None, limit=10**6):
    """Explicit sum over edge colorings; independent oracle for small cases."""
    alg = F.algebra
    dim = alg.dim
    C, _, B = bilinear_tensors(F)
    if not T.is_closed():
        raise InputError("the naive oracle handles closed surfaces only")
    edge_list = T.edges()
    E = len(edge_list)
    if dim**E > limit:
        raise InputError("naive enumeration too large: %d^%d" % (dim, E))
    name_of = {}
    for idx, fs in enumerate(edge_list):
        for h in fs:
            name_of[h] = idx
    budget = _Budget(resolve_cap(None))
    tris = []
    for t in range(T.num_triangles):
        data = _triangle_tensor(C, T.flags[t], dim)
        tris.append(data)
    for idx, fs in enumerate(edge_list):
        h1, h2 = sorted(fs)
        W = B if T.amplitude_is_b(h1) else S
        if W is None:
            raise InputError("involution data required")
        t, s = h1
        tris[t] = _absorb(tris[t], s, W, budget)

    total = _ZERO
    state = [0] * E
    tri_edges = [[name_of[(t, s)] for s in (0, 1, 2)] for t in range(T.num_triangles)]
    while True:
        term = _ONE
        ok = True
        for t in range(T.num_triangles):
            key = (state[tri_edges[t][0]], state[tri_edges[t][1]], state[tri_edges[t][2]])
            v = tris[t].get(key)
            if v is None:
                ok = False
                break
            term = term * v
        if ok:
            total = total + term
        # odometer
        pos = 0
        while pos < E:
            state[pos] += 1
            if state[pos] < dim:
                break
            state[pos] = 0
            pos += 1
        if pos == E:
            break
    return F.R ** T.count_vertices() * total


def verify_pachner(F):
    """The algebraic content of the 2-2 and 1-3 moves for Frobenius data F."""
    alg = F.algebra
    d = alg.dim
    C, _, B = bilinear_tensors(F)
    R = F.R

    def N(a, b, c):
        return alg.structure_constant(a, b, c)

    # 2-2: sum_e N(a,b,e) C(e,c,d) == sum_e N(b,c,e) C(a,e,d)
    for a in range(d):
        for b in range(d):
            for c in range(d):
                for dd in range(d):
                    lhs = _ZERO
                    for e, k in alg.mult.get((a, b), ()):
                        v = C.get((e, c, dd))
                        if v is not None:
                            lhs = lhs + k * v
                    rhs = _ZERO
                    for e, k in alg.mult.get((b, c), ()):
                        v = C.get((a, e, dd))
                        if v is not None:
                            rhs = rhs + k * v
                    if lhs != rhs:
                        raise VerificationError(
                            "2-2 move identity fails at basis (%d,%d,%d,%d)" % (a, b, c, dd)
                        )

    # 1-3: R * C C C B B B contracted into a triangle equals C
    # U_a(e,f) = sum_{e'} C(a,e',f) B[e'][e], same tensor serves all three corners
    U = {}
    for (x, ep, y), v in C.items():
        row = B[ep]
        for e in range(d):
            if not row[e].is_zero():
                key = (x, e, y)
                cur = U.get(key)
                add = v * row[e]
                U[key] = add if cur is None else cur + add
    # LHS_abc = R * sum_{e,f,g} U(a,e,f) U(b,g,e) U(c,f,g)
    by_first = {}
    for (x, e, y), v in U.items():
        by_first.setdefault(x, []).append((e, y, v))
    for a in range(d):
        for b in range(d):
            for c in range(d):
                acc = _ZERO
                for e, f, v1 in by_first.get(a, ()):
                    for g, e2, v2 in by_first.get(b, ()):
                        if e2 != e:
                            continue
                        for f2, g2, v3 in by_first.get(c, ()):
                            if f2 == f and g2 == g:
                                acc = acc + v1 * v2 * v3
                want = C.get((a, b, c), _ZERO)
                if R * acc != want:
                    raise VerificationError(
                        "1-3 move identity fails at basis (%d,%d,%d)" % (a, b, c)
                    )


def verify_unoriented_moves(F, S):
    """Symmetric S, involutive anti-homomorphism, counit compatibility."""
    from .involution import star_matrix_of  # local import to avoid a cycle

    alg = F.algebra
    d = alg.dim
    if hasattr(S, "S_matrix"):
        S = S.S_matrix
    for a in range(d):
        for b in range(a):
            if S[a][b] != S[b][a]:
                raise VerificationError("S is not symmetric at (%d,%d)" % (a, b))
    st = star_matrix_of(F, S)

    def star_vec(vec):
        out = [_ZERO] * d
        for a, c in enumerate(vec):
            if not c.is_zero():
                for b in range(d):
                    if not st[a][b].is_zero():
                        out[b] = out[b] + c * st[a][b]
        return out

    basis = alg.basis()
    starred = [alg.element(star_vec(e.coeffs)) for e in basis]
    for a in range(d):
        # involution
        back = alg.element(star_vec(starred[a].coeffs))
        if back != basis[a]:
            raise VerificationError("star is not involutive at basis %d" % a)
        # counit compatibility
        if F.eps_of(starred[a]) != F.eps[a]:
            raise VerificationError("eps does not respect star at basis %d" % a)
    for a in range(d):
        for b in range(d):
            lhs = alg.element(star_vec((basis[a] * basis[b]).coeffs))
            rhs = starred[b] * starred[a]
            if lhs != rhs:
                raise VerificationError("star is not an anti-homomorphism at (%d,%d)" % (a, b))

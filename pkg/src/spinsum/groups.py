"""Finite group tables and the bits of structure theory the models need.

A group is a Cayley table: table[a][b] = index of a*b. Everything here
works at the table level with ints and Fractions; group algebras over the
scalar field live in the algebra module.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations


def validate_table(table):
    """Check the table is a group; returns the unit index. Raises ValueError."""
    n = len(table)
    if any(len(row) != n for row in table):
        raise ValueError("multiplication table is not square")
    elems = set(range(n))
    for row in table:
        if set(row) != elems:
            raise ValueError("table rows must be permutations (no inverses)")
    for j in range(n):
        if {table[i][j] for i in range(n)} != elems:
            raise ValueError("table columns must be permutations (no inverses)")
    unit = None
    for e in range(n):
        if all(table[e][a] == a and table[a][e] == a for a in range(n)):
            unit = e
            break
    if unit is None:
        raise ValueError("table has no two-sided unit")
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise ValueError("table is not associative at (%d,%d,%d)" % (a, b, c))
    return unit


def inverse_table(table, unit):
    n = len(table)
    inv = [None] * n
    for a in range(n):
        for b in range(n):
            if table[a][b] == unit:
                inv[a] = b
                break
    return inv


def element_order(table, unit, g):
    k, x = 1, g
    while x != unit:
        x = table[x][g]
        k += 1
    return k


def cyclic_table(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def product_table(t1, t2):
    """Direct product; element (a,b) has index a*len(t2)+b."""
    n2 = len(t2)
    n = len(t1) * n2
    out = [[0] * n for _ in range(n)]
    for a1 in range(len(t1)):
        for b1 in range(n2):
            for a2 in range(len(t1)):
                for b2 in range(n2):
                    out[a1 * n2 + b1][a2 * n2 + b2] = t1[a1][a2] * n2 + t2[b1][b2]
    return out


def symmetric_table(n):
    """Full symmetric group on n letters; composition (p*q)(x) = p(q(x))."""
    perms = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]


def quaternion_table():
    """Q8 as {1,-1,i,-i,j,-j,k,-k} with indices 0..7 in that order."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    # sign s in {0,1}, unit u in {1,i,j,k}
    def split(idx):
        return idx % 2, idx // 2

    def join(s, u):
        return 2 * u + s

    unit_mult = {  # (u1,u2) -> (sign, u)
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (2, 0): (0, 2), (3, 0): (0, 3),
        (1, 1): (1, 0), (2, 2): (1, 0), (3, 3): (1, 0),
        (1, 2): (0, 3), (2, 1): (1, 3),
        (2, 3): (0, 1), (3, 2): (1, 1),
        (3, 1): (0, 2), (1, 3): (1, 2),
    }
    n = 8
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            s1, u1 = split(a)
            s2, u2 = split(b)
            s3, u3 = unit_mult[(u1, u2)]
            table[a][b] = join((s1 + s2 + s3) % 2, u3)
    return table, names


def center_elements(table):
    n = len(table)
    return [z for z in range(n) if all(table[z][a] == table[a][z] for a in range(n))]


def subgroup_closure(table, unit, gens):
    seen = {unit}
    frontier = [unit]
    gens = set(gens) | {unit}
    for g in gens:
        if g not in seen:
            seen.add(g)
            frontier.append(g)
    while frontier:
        x = frontier.pop()
        for g in gens | seen:
            for y in (table[x][g], table[g][x]):
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
    return frozenset(seen)


def all_subgroups(table, unit, max_gens=3):
    """Subgroups generated by up to max_gens elements (complete for |H| <= 16ish)."""
    n = len(table)
    found = {frozenset([unit])}
    for k in range(1, max_gens + 1):
        for gens in combinations(range(n), k):
            found.add(subgroup_closure(table, unit, gens))
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def abelian_decomposition(table, unit):
    """Cyclic factor orders and per-element coordinates for an abelian table.

    Returns (orders, coords) with coords[h] a tuple, h = prod g_i^{coords[h][i]}.
    Raises ValueError when the table is not abelian or no splitting is found.
    """
    n = len(table)
    if any(table[a][b] != table[b][a] for a in range(n) for b in range(a)):
        raise ValueError("table is not abelian")
    if n == 1:
        return (), {unit: ()}
    g = max(range(n), key=lambda x: element_order(table, unit, x))
    m = element_order(table, unit, g)
    cyc = [unit]
    x = g
    while x != unit:
        cyc.append(x)
        x = table[x][g]
    cyc_pos = {h: a for a, h in enumerate(cyc)}
    if m == n:
        return (m,), {h: (cyc_pos[h],) for h in range(n)}
    cyc_set = frozenset(cyc)
    for sub in all_subgroups(table, unit):
        if len(sub) * m == n and sub & cyc_set == {unit}:
            sub_table = _restrict_table(table, sorted(sub))
            orders, sub_coords = abelian_decomposition(sub_table, sorted(sub).index(unit))
            sub_list = sorted(sub)
            inv = inverse_table(table, unit)
            coords = {}
            for h in range(n):
                for a in range(m):
                    rest = table[inv[cyc[a]]][h]
                    if rest in sub:
                        coords[h] = (a,) + sub_coords[sub_list.index(rest)]
                        break
            return (m,) + orders, coords
    raise ValueError("no complement found; not a direct product of the cyclic factor")


def _restrict_table(table, elems):
    pos = {h: i for i, h in enumerate(elems)}
    return [[pos[table[a][b]] for b in elems] for a in elems]


def quotient_table(table, unit, normal):
    """Cosets of a normal subgroup as a new table; returns (table, coset_of)."""
    n = len(table)
    normal = frozenset(normal)
    inv = inverse_table(table, unit)
    for g in range(n):
        for h in normal:
            if table[table[g][h]][inv[g]] not in normal:
                raise ValueError("subgroup is not normal")
    coset_of = [None] * n
    reps = []
    for g in range(n):
        if coset_of[g] is None:
            idx = len(reps)
            reps.append(g)
            for h in normal:
                coset_of[table[g][h]] = idx
    q = [[coset_of[table[reps[a]][reps[b]]] for b in range(len(reps))] for a in range(len(reps))]
    return q, coset_of


def conjugacy_class_count(table, unit):
    n = len(table)
    inv = inverse_table(table, unit)
    seen = [False] * n
    count = 0
    for g in range(n):
        if not seen[g]:
            count += 1
            for a in range(n):
                seen[table[table[a][g]][inv[a]]] = True
    return count


def irrep_dimensions(table, unit):
    """Multiset of complex irreducible dimensions, computed from commutator sums.

    Let z = |H|^{-2} sum_{h,l} h l h^{-1} l^{-1} in the rational group algebra.
    With eps(a) = |H| * (coefficient of the unit), eps(z^g) = sum_i d_i^{2-2g},
    so the numbers s_m = eps(z^{m+1}) are power sums of the values 1/d_i^2.
    Newton's identities then pin the d_i exactly (they are integers).
    """
    n = len(table)
    inv = inverse_table(table, unit)
    z = [Fraction(0)] * n
    for h in range(n):
        for l in range(n):
            c = table[table[table[h][l]][inv[h]]][inv[l]]
            z[c] += Fraction(1, n * n)

    def convolve(a, b):
        out = [Fraction(0)] * n
        for i, ai in enumerate(a):
            if ai:
                row = table[i]
                for j, bj in enumerate(b):
                    if bj:
                        out[row[j]] += ai * bj
        return out

    count = conjugacy_class_count(table, unit)  # = number of irreps
    power = z
    s = [Fraction(count)]  # s_0; and s_m = eps(z^{m+1})
    for _ in range(count):
        power = convolve(power, z)
        s.append(Fraction(n) * power[unit])
    # Newton: e_k = (1/k) sum_{i=1..k} (-1)^{i-1} e_{k-i} s_i
    e = [Fraction(1)]
    for k in range(1, count + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * s[i]
        e.append(acc / k)
    # roots of sum (-1)^k e_k t^{N-k} are the values 1/d^2; descending coefficients
    coeffs = [(-1) ** k * e[k] for k in range(count + 1)]

    def deflate(poly_desc, root):
        # synthetic division of descending-coefficient poly by (t - root)
        out = [poly_desc[0]]
        for c in poly_desc[1:]:
            out.append(c + out[-1] * root)
        if out[-1] != 0:
            raise ArithmeticError("deflation left a remainder")
        return out[:-1]

    poly = list(coeffs)
    dims = []
    d = 1
    while len(dims) < count:
        if d * d > n:
            raise ArithmeticError("irreducible dimensions did not resolve")
        root = Fraction(1, d * d)
        while len(poly) > 1 and eval_poly_desc(poly, root) == 0:
            poly = deflate(poly, root)
            dims.append(d)
        d += 1
    if sum(x * x for x in dims) != n:
        raise ArithmeticError("dimension check failed")
    return sorted(dims)


def eval_poly_desc(poly_desc, t):
    acc = Fraction(0)
    for c in poly_desc:
        acc = acc * t + c
    return acc

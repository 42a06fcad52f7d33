"""Triangulated surfaces as anonymous triangles plus side gluings.

A triangle has three sides; side s runs from corner s to corner (s+1)%3.
Each triangle carries an orientation flag in {+1,-1}; a flag of -1 means
the triangle's cyclic order is read reversed. A gluing identifies two
sides and records the corner identification geometry:

  aligned=False ("opp"):  start<->end, the head-to-tail identification
  aligned=True  ("same"): start<->start

Whether the glued edge carries the bilinear form B (orientation
compatible) or the involution form S is derived, never stored:

  B  <=>  (not aligned) == (flags equal)

so flipping a triangle's flag toggles the derived type on all its edges.
Vertex classes come from the corner identifications alone.
"""

from __future__ import annotations

from .errors import InputError

OPP = "opp"
SAME = "same"


class Triangulation:
    def __init__(self):
        self.flags = []
        self.gluing = {}  # (t,s) -> ((t2,s2), aligned)

    # -- construction ----------------------------------------------------

    def add_triangle(self, flag=1):
        if flag not in (1, -1):
            raise InputError("orientation flag must be +1 or -1")
        self.flags.append(flag)
        return len(self.flags) - 1

    def glue(self, h1, h2, aligned=False):
        for h in (h1, h2):
            t, s = h
            if not (0 <= t < len(self.flags)) or s not in (0, 1, 2):
                raise InputError("no such side %r" % (h,))
            if h in self.gluing:
                raise InputError("side %r is already glued" % (h,))
        if h1 == h2:
            raise InputError("cannot glue a side to itself")
        self.gluing[h1] = (h2, aligned)
        self.gluing[h2] = (h1, aligned)

    def copy(self):
        out = Triangulation()
        out.flags = list(self.flags)
        out.gluing = dict(self.gluing)
        return out

    # -- basic queries -----------------------------------------------------

    @property
    def num_triangles(self):
        return len(self.flags)

    def half_edges(self):
        return [(t, s) for t in range(len(self.flags)) for s in (0, 1, 2)]

    def boundary_half_edges(self):
        return [h for h in self.half_edges() if h not in self.gluing]

    def edges(self):
        """Interior edges as frozensets of the two half-edges."""
        seen = set()
        for h1, (h2, _) in self.gluing.items():
            seen.add(frozenset((h1, h2)))
        return sorted(seen, key=lambda fs: sorted(fs))

    def num_edges(self):
        return len(self.edges()) + len(self.boundary_half_edges())

    def is_closed(self):
        return not self.boundary_half_edges()

    def amplitude_is_b(self, h):
        """True when the edge at half-edge h carries B, False for S."""
        if h not in self.gluing:
            raise InputError("half-edge %r is not glued" % (h,))
        (t2, _), aligned = self.gluing[h]
        t1 = h[0]
        return (not aligned) == (self.flags[t1] == self.flags[t2])

    def flip_triangle_orientation(self, t):
        """Toggle one flag in place; derived edge types on t all toggle."""
        if not (0 <= t < len(self.flags)):
            raise InputError("no triangle %d" % t)
        self.flags[t] = -self.flags[t]

    # -- vertices ----------------------------------------------------------

    def vertex_classes(self):
        """Corner classes under the gluing identifications (union-find)."""
        corners = [(t, c) for t in range(len(self.flags)) for c in (0, 1, 2)]
        parent = {c: c for c in corners}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        done = set()
        for h1, (h2, aligned) in self.gluing.items():
            key = frozenset((h1, h2))
            if key in done:
                continue
            done.add(key)
            (t1, s1), (t2, s2) = h1, h2
            if aligned:
                union((t1, s1), (t2, s2))
                union((t1, (s1 + 1) % 3), (t2, (s2 + 1) % 3))
            else:
                union((t1, s1), (t2, (s2 + 1) % 3))
                union((t1, (s1 + 1) % 3), (t2, s2))
        classes = {}
        for c in corners:
            classes.setdefault(find(c), []).append(c)
        return list(classes.values())

    def count_vertices(self):
        return len(self.vertex_classes())

    def interior_vertex_count(self):
        """Classes with no corner on an unglued side."""
        boundary_corners = set()
        for (t, s) in self.boundary_half_edges():
            boundary_corners.add((t, s))
            boundary_corners.add((t, (s + 1) % 3))
        return sum(1 for cls in self.vertex_classes() if not (set(cls) & boundary_corners))

    def euler_characteristic(self):
        return self.count_vertices() - self.num_edges() + self.num_triangles

    def validate(self):
        for h1, (h2, aligned) in self.gluing.items():
            back = self.gluing.get(h2)
            if back != (h1, aligned):
                raise InputError("gluing table is not symmetric at %r" % (h1,))


# -- builders ---------------------------------------------------------------


def genus_surface(g):
    """Closed oriented genus-g surface.

    g=0: two triangles glued as a pillow (3 vertices). g>=1: the 4g-gon with
    word a1 b1 a1' b1' ... fan-triangulated from one polygon corner; every
    identification is head-to-tail so all edges carry B.
    """
    g = int(g)
    if g < 0:
        raise InputError("genus must be nonnegative")
    T = Triangulation()
    if g == 0:
        T.add_triangle(1)
        T.add_triangle(-1)
        for s in (0, 1, 2):
            T.glue((0, s), (1, s), aligned=True)
        return T
    n = 4 * g
    for _ in range(n - 2):
        T.add_triangle(1)
    # polygon edge m lives on: E_0 -> (T_0, 0); E_m -> (T_{m-1}, 1); E_{n-1} -> (T_{n-3}, 2)
    def poly_edge(m):
        if m == 0:
            return (0, 0)
        if m == n - 1:
            return (n - 3, 2)
        return (m - 1, 1)

    for k in range(2, n - 1):
        T.glue((k - 1, 0), (k - 2, 2), aligned=False)  # diagonal D_k
    for i in range(g):
        T.glue(poly_edge(4 * i), poly_edge(4 * i + 2), aligned=False)
        T.glue(poly_edge(4 * i + 1), poly_edge(4 * i + 3), aligned=False)
    return T


def nonorientable_surface(k):
    """Closed nonorientable surface, connected sum of k projective planes.

    4k-gon with word (a1 b1 a1 b1)(a2 b2 a2 b2)...; each repeated letter is
    identified start-to-start (aligned), which puts S on those 2k edges.
    Euler characteristic 2-k, so k+1 vertex classes.
    """
    k = int(k)
    if k < 1:
        raise InputError("nonorientable genus must be at least 1")
    n = 4 * k
    T = Triangulation()
    for _ in range(n - 2):
        T.add_triangle(1)

    def poly_edge(m):
        if m == 0:
            return (0, 0)
        if m == n - 1:
            return (n - 3, 2)
        return (m - 1, 1)

    for kk in range(2, n - 1):
        T.glue((kk - 1, 0), (kk - 2, 2), aligned=False)
    for i in range(k):
        T.glue(poly_edge(4 * i), poly_edge(4 * i + 2), aligned=True)
        T.glue(poly_edge(4 * i + 1), poly_edge(4 * i + 3), aligned=True)
    return T


# -- Pachner moves -----------------------------------------------------------


def pachner_13(T, t):
    """Subdivide triangle t into three around a new interior vertex."""
    if not (0 <= t < T.num_triangles):
        raise InputError("no triangle %d" % t)
    out = T.copy()
    flag = out.flags[t]
    # three new triangles; reuse slot t for the first to keep indices compact
    t0 = t
    t1 = out.add_triangle(flag)
    t2 = out.add_triangle(flag)
    new_of_side = {0: t0, 1: t1, 2: t2}
    # detach t's gluings, re-point old side i to (t_i, 0) with direction kept
    saved = {}
    for s in (0, 1, 2):
        entry = out.gluing.pop((t, s), None)
        if entry is not None:
            saved[s] = entry
            out.gluing.pop(entry[0], None)
    for s, (partner, aligned) in saved.items():
        if partner[0] == t:
            # both ends of this edge belonged to t; re-point both
            continue
        out.glue((new_of_side[s], 0), partner, aligned)
    # edges of t glued to itself
    for s, (partner, aligned) in saved.items():
        if partner[0] == t and (new_of_side[s], 0) not in out.gluing:
            out.glue((new_of_side[s], 0), (new_of_side[partner[1]], 0), aligned)
    # interior diagonals: side1 of t_{i} ~ side2 of t_{i+1}, head-to-tail
    tri = [t0, t1, t2]
    for i in range(3):
        out.glue((tri[i], 1), (tri[(i + 1) % 3], 2), aligned=False)
    return out


def pachner_31(T, corner):
    """Merge the three triangles around a degree-3 interior vertex; corner names it."""
    t0, c0 = corner
    cls = None
    for vc in T.vertex_classes():
        if (t0, c0) in vc:
            cls = vc
            break
    if cls is None:
        raise InputError("no such corner %r" % (corner,))
    if len(cls) != 3:
        raise InputError("vertex class has size %d, need exactly 3" % len(cls))
    tris = [t for t, _ in cls]
    if len(set(tris)) != 3:
        raise InputError("the three corners must lie on three distinct triangles")
    boundary = set(T.boundary_half_edges())
    for t, c in cls:
        if (t, c) in boundary or (t, (c - 1) % 3) in boundary:
            raise InputError("vertex is on the boundary")
    if len({T.flags[t] for t in tris}) != 1:
        raise InputError("triangles around the vertex carry mixed orientation flags")
    # walk around the vertex: entering side of (t,c) is (c-1)%3
    order = []
    cur = cls[0]
    for _ in range(3):
        order.append(cur)
        t, c = cur
        h = (t, (c - 1) % 3)
        if h not in T.gluing:
            raise InputError("vertex star is not closed")
        (t2, s2), aligned = T.gluing[h]
        if not T.amplitude_is_b(h):
            raise InputError("a diagonal around the vertex is not orientation compatible")
        cur = (t2, (s2 + 1) % 3) if aligned else (t2, s2)
    if cur != order[0]:
        raise InputError("walk around the vertex did not close after three steps")
    # outer side of (t,c) is (c+1)%3 and keeps its direction on the merged triangle
    out = Triangulation()
    keep = [t for t in range(T.num_triangles) if t not in set(tris)]
    remap = {}
    for t in keep:
        remap[t] = out.add_triangle(T.flags[t])
    new_t = out.add_triangle(T.flags[tris[0]])
    side_map = {}
    for i, (t, c) in enumerate(order):
        side_map[(t, (c + 1) % 3)] = (new_t, i)
    done = set()
    for h1, (h2, aligned) in T.gluing.items():
        key = frozenset((h1, h2))
        if key in done:
            continue
        done.add(key)
        def translate(h):
            t, s = h
            if t in remap:
                return (remap[t], s)
            return side_map.get(h)
        n1, n2 = translate(h1), translate(h2)
        if n1 is None or n2 is None:
            continue  # an interior diagonal of the merged star
        out.glue(n1, n2, aligned)
    return out


def pachner_22(T, h):
    """Flip the interior edge at half-edge h to the other quad diagonal."""
    if h not in T.gluing:
        raise InputError("half-edge %r is not glued" % (h,))
    (t1, s1) = h
    (t2, s2), aligned = T.gluing[h]
    if t1 == t2:
        raise InputError("the two sides of the edge lie on one triangle")
    work = T.copy()
    if not work.amplitude_is_b(h):
        # normalize across an S edge by flipping t2 first (harmless for the
        # unoriented models this occurs in; the flip is part of the move)
        work.flip_triangle_orientation(t2)
    aligned = work.gluing[h][1]
    f1, f2 = work.flags[t1], work.flags[t2]
    # two B-compatible geometries: (opp, equal flags) or (same, opposite flags)
    out = Triangulation()
    keep = [t for t in range(work.num_triangles) if t not in (t1, t2)]
    remap = {}
    for t in keep:
        remap[t] = out.add_triangle(work.flags[t])
    u1 = out.add_triangle(f1)
    u2 = out.add_triangle(f1)
    if not aligned:
        # quad P0 P1 P2 / X; old diagonal P0-P1; directions all preserved
        side_map = {
            (t1, (s1 + 2) % 3): ((u1, 0), True),
            (t2, (s2 + 1) % 3): ((u1, 1), True),
            (t2, (s2 + 2) % 3): ((u2, 0), True),
            (t1, (s1 + 1) % 3): ((u2, 1), True),
        }
    else:
        # t2 sits on the same side of the edge with opposite flag; its two
        # outer sides reverse direction on the new triangles
        side_map = {
            (t1, (s1 + 2) % 3): ((u1, 0), True),
            (t2, (s2 + 2) % 3): ((u1, 1), False),
            (t2, (s2 + 1) % 3): ((u2, 0), False),
            (t1, (s1 + 1) % 3): ((u2, 1), True),
        }
    done = set()
    for h1, (h2, al) in work.gluing.items():
        key = frozenset((h1, h2))
        if key in done:
            continue
        done.add(key)
        if key == frozenset(((t1, s1), (t2, s2))):
            continue

        def translate(hh):
            t, s = hh
            if t in remap:
                return (remap[t], s), True
            return side_map[hh]

        n1, p1 = translate(h1)
        n2, p2 = translate(h2)
        out.glue(n1, n2, al if (p1 == p2) else not al)
    out.glue((u1, 2), (u2, 2), aligned=False)
    return out

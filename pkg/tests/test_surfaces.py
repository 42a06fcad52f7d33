"""Triangulated surfaces and Pachner moves."""

import pytest

from spinsum.errors import InputError
from spinsum.surfaces import (Triangulation, genus_surface, nonorientable_surface,
                              pachner_13, pachner_22, pachner_31)


def test_genus_surface_counts():
    for g in range(4):
        T = genus_surface(g)
        assert T.is_closed()
        assert T.euler_characteristic() == 2 - 2 * g
        T.validate()


def test_sphere_is_two_triangles():
    T = genus_surface(0)
    assert T.num_triangles == 2
    assert T.count_vertices() == 3


def test_torus_identifies_one_vertex():
    T = genus_surface(1)
    assert T.num_triangles == 2
    assert T.count_vertices() == 1


def test_nonorientable_counts():
    for k in range(1, 5):
        T = nonorientable_surface(k)
        assert T.is_closed()
        assert T.euler_characteristic() == 2 - k
        T.validate()


def test_nonorientable_needs_crosscaps():
    with pytest.raises(InputError):
        nonorientable_surface(0)


def test_nonorientable_has_s_edges():
    # a non-orientable gluing must leave at least one edge carrying S
    T = nonorientable_surface(1)
    kinds = [T.amplitude_is_b(h) for h in T.gluing]
    assert not all(kinds)


def test_orientable_all_b_edges():
    for g in range(3):
        T = genus_surface(g)
        assert all(T.amplitude_is_b(h) for h in T.gluing)


def test_pachner_13_adds_two_triangles():
    for g in (0, 1, 2):
        T = genus_surface(g)
        before = T.interior_vertex_count()
        T2 = pachner_13(T, 0)
        assert T2.num_triangles == T.num_triangles + 2
        assert T2.euler_characteristic() == T.euler_characteristic()
        assert T2.interior_vertex_count() == before + 1
        T2.validate()


def test_pachner_31_undoes_13():
    T = genus_surface(1)
    T2 = pachner_13(T, 0)
    three = [cls for cls in T2.vertex_classes() if len(cls) == 3]
    assert three
    T3 = pachner_31(T2, three[0][0])
    assert T3.num_triangles == T.num_triangles
    assert T3.euler_characteristic() == T.euler_characteristic()
    T3.validate()


def test_pachner_31_needs_three_corners():
    T = genus_surface(1)
    # every vertex class on the standard torus has six corners
    h = (0, 0)
    with pytest.raises(InputError):
        pachner_31(T, h)


def test_pachner_22_preserves_counts():
    for g in (0, 1, 2):
        T = genus_surface(g)
        for h in T.half_edges():
            T2 = pachner_22(T, h)
            assert T2.num_triangles == T.num_triangles
            assert T2.euler_characteristic() == T.euler_characteristic()
            assert T2.count_vertices() == T.count_vertices()
            T2.validate()


def test_open_triangulation():
    T = Triangulation()
    t = T.add_triangle()
    assert not T.is_closed()
    assert len(T.boundary_half_edges()) == 3
    # gluing two edges of one triangle leaves one boundary edge
    T.glue((t, 0), (t, 1))
    assert len(T.boundary_half_edges()) == 1


def test_glue_rejects_reuse():
    T = Triangulation()
    a = T.add_triangle()
    b = T.add_triangle()
    T.glue((a, 0), (b, 0))
    with pytest.raises(InputError):
        T.glue((a, 0), (b, 1))

"""Lattice geometry: point counts, areas, Pick's theorem, Minkowski sums."""

import random

import pytest

from ideal2d.errors import DomainError
from ideal2d.lattice import (
    LatticePoint,
    LatticePolygon,
    as_lattice_point,
    minkowski_sum,
    mixed_area,
    segment_lattice_count,
)
from helpers import (
    brute_boundary_count,
    brute_interior_count,
    brute_minkowski,
    brute_segment_count,
    random_convex_polygon,
    random_simple_polygon,
)


def test_point_arithmetic():
    p = LatticePoint(2, 3)
    q = LatticePoint(-1, 5)
    assert p + q == LatticePoint(1, 8)
    assert p - q == LatticePoint(3, -2)
    assert -p == LatticePoint(-2, -3)
    assert p * 4 == LatticePoint(8, 12)
    assert 4 * p == LatticePoint(8, 12)
    assert p.cross(q) == 2 * 5 - 3 * (-1)
    assert LatticePoint(1, 2).divides(LatticePoint(3, 2))
    assert not LatticePoint(1, 3).divides(LatticePoint(3, 2))


def test_as_lattice_point_rejects_non_integers():
    with pytest.raises(DomainError):
        as_lattice_point((1.5, 2))
    with pytest.raises(DomainError):
        as_lattice_point(("1", 2))
    assert as_lattice_point((1, 2)) == LatticePoint(1, 2)


def test_segment_count_examples():
    assert segment_lattice_count((0, 3), (1, 1)) == 2
    assert segment_lattice_count((0, 6), (4, 0)) == 3
    assert segment_lattice_count((2, 2), (2, 2)) == 1
    assert segment_lattice_count((0, 0), (5, 0)) == 6


def test_segment_count_matches_enumeration():
    rng = random.Random(11)
    for _ in range(200):
        a = (rng.randint(-8, 8), rng.randint(-8, 8))
        b = (rng.randint(-8, 8), rng.randint(-8, 8))
        assert segment_lattice_count(a, b) == brute_segment_count(a, b)


# polygon normalization


def test_polygon_normalization_prunes_and_orients():
    # clockwise square with a redundant midpoint on the bottom edge
    poly = LatticePolygon([(0, 0), (0, 2), (2, 2), (2, 0), (1, 0)])
    assert poly == LatticePolygon([(0, 0), (2, 0), (2, 2), (0, 2)])
    assert len(poly.vertices) == 4  # midpoint pruned
    assert poly.convex
    assert poly.doubled_area() == 8  # positive: orientation flipped to counterclockwise


def test_polygon_equality_up_to_rotation():
    a = LatticePolygon([(0, 0), (3, 0), (0, 3)])
    b = LatticePolygon([(3, 0), (0, 3), (0, 0)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != LatticePolygon([(0, 0), (3, 0), (1, 3)])


def test_polygon_collapses_collinear_input():
    degenerate = LatticePolygon([(0, 0), (1, 1), (3, 3), (2, 2)])
    assert degenerate.vertices == (LatticePoint(0, 0), LatticePoint(3, 3))
    with pytest.raises(DomainError):
        degenerate.doubled_area()
    with pytest.raises(DomainError):
        LatticePolygon([(1, 1)]).doubled_area()


def test_nonconvex_polygon_flagged():
    arrow = LatticePolygon([(0, 0), (4, 0), (4, 4), (2, 1)])
    assert not arrow.convex
    assert arrow.doubled_area() == 12  # shoelace: 0 + 16 - 4 + 0


def test_translated():
    poly = LatticePolygon([(0, 0), (2, 0), (0, 2)])
    moved = poly.translated((5, -1))
    assert moved == LatticePolygon([(5, -1), (7, -1), (5, 1)])
    assert moved.doubled_area() == poly.doubled_area()


# areas and counts


def test_doubled_area_examples():
    assert LatticePolygon([(0, 0), (2, 0), (0, 2)]).doubled_area() == 4
    assert LatticePolygon([(0, 0), (3, 0), (3, 2), (0, 2)]).doubled_area() == 12
    assert LatticePolygon([(0, 0), (3, 1), (1, 4)]).doubled_area() == 11


def test_boundary_count_examples():
    assert LatticePolygon([(0, 0), (1, 0), (0, 1)]).boundary_lattice_count() == 3
    assert LatticePolygon([(0, 0), (2, 0), (0, 2)]).boundary_lattice_count() == 6
    assert LatticePolygon([(0, 0), (3, 0), (3, 3), (0, 3)]).boundary_lattice_count() == 12


def test_interior_count_examples():
    assert LatticePolygon([(0, 0), (1, 0), (0, 1)]).interior_lattice_count() == 0
    assert LatticePolygon([(0, 0), (3, 0), (0, 3)]).interior_lattice_count() == 1
    assert LatticePolygon([(0, 0), (3, 0), (3, 3), (0, 3)]).interior_lattice_count() == 4


def test_counts_match_enumeration_on_simple_polygons():
    rng = random.Random(23)
    for _ in range(80):
        poly = random_simple_polygon(rng)
        assert poly.boundary_lattice_count() == brute_boundary_count(poly)
        assert poly.interior_lattice_count() == brute_interior_count(poly)


def test_pick_identity_on_simple_polygons():
    # doubled area = 2*interior + boundary - 2 for any simple lattice polygon
    rng = random.Random(29)
    for _ in range(80):
        poly = random_simple_polygon(rng)
        i = brute_interior_count(poly)
        b = brute_boundary_count(poly)
        assert poly.doubled_area() == 2 * i + b - 2


def test_counts_are_translation_invariant():
    poly = LatticePolygon([(0, 0), (4, 1), (3, 4), (1, 3)])
    moved = poly.translated((-7, 11))
    assert moved.doubled_area() == poly.doubled_area()
    assert moved.boundary_lattice_count() == poly.boundary_lattice_count()
    assert moved.interior_lattice_count() == poly.interior_lattice_count()


# Minkowski sums and mixed areas


def test_minkowski_sum_of_triangles():
    t = LatticePolygon([(0, 0), (1, 0), (0, 1)])
    total = minkowski_sum(t, t)
    assert total == LatticePolygon([(0, 0), (2, 0), (0, 2)])


def test_minkowski_sum_pentagon_example():
    p1 = LatticePolygon([(0, 0), (1, 0), (0, 1)])
    p2 = LatticePolygon([(0, 0), (1, 0), (1, 1), (0, 1)])
    total = minkowski_sum(p1, p2)
    assert total == LatticePolygon([(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)])
    assert total.doubled_area() == 7


def test_minkowski_sum_with_point_translates():
    poly = LatticePolygon([(0, 0), (2, 0), (0, 2)])
    point = LatticePolygon([(3, 4)])
    assert minkowski_sum(poly, point) == poly.translated((3, 4))
    assert minkowski_sum(point, poly) == poly.translated((3, 4))


def test_minkowski_sum_rejects_degenerate_and_nonconvex():
    seg = LatticePolygon([(0, 0), (2, 2)])
    square = LatticePolygon([(0, 0), (1, 0), (1, 1), (0, 1)])
    arrow = LatticePolygon([(0, 0), (4, 0), (4, 4), (2, 1)])
    with pytest.raises(DomainError):
        minkowski_sum(seg, square)
    with pytest.raises(DomainError):
        minkowski_sum(square, arrow)


def test_minkowski_sum_matches_hull_of_pairwise_sums():
    rng = random.Random(37)
    for _ in range(60):
        p1 = random_convex_polygon(rng, span=7)
        p2 = random_convex_polygon(rng, span=7)
        assert minkowski_sum(p1, p2) == brute_minkowski(p1, p2)


def test_mixed_area_examples():
    square = LatticePolygon([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert mixed_area(square, square) == 2 * square.doubled_area() == 4
    t1 = LatticePolygon([(0, 0), (1, 0), (0, 1)])
    t2 = LatticePolygon([(0, 0), (2, 0), (0, 2)])
    assert mixed_area(t1, t2) == 4


def test_mixed_area_is_symmetric_and_self_consistent():
    rng = random.Random(41)
    for _ in range(40):
        p1 = random_convex_polygon(rng, span=6)
        p2 = random_convex_polygon(rng, span=6)
        assert mixed_area(p1, p2) == mixed_area(p2, p1)
        assert mixed_area(p1, p1) == 2 * p1.doubled_area()

"""Planar convex-geometry predicates used by the range comparisons."""

import numpy as np
import pytest

from einrange import ShapeError, hull_contains, hull_hausdorff, hull_of, hulls_intersect
from einrange.hull import (
    boundary_distance,
    convexity_defect,
    distance_to_hull,
    scale_hull,
)


class TestHullOf:
    def test_triangle(self):
        h = hull_of([0, 1, 1j])
        assert len(h) == 3
        assert hull_contains(h, 0.25 + 0.25j)

    def test_interior_points_dropped(self):
        h = hull_of([0, 1, 1j, 1 + 1j, 0.5 + 0.5j])
        assert len(h) == 4

    def test_collinear_degenerates_to_segment(self):
        h = hull_of([0, 0.25, 0.5, 1.0])
        assert len(h) == 2
        assert set(h.vertices) == {0, 1.0}

    def test_single_point(self):
        h = hull_of([2 + 3j, 2 + 3j])
        assert len(h) == 1

    def test_empty_raises(self):
        with pytest.raises(ShapeError):
            hull_of([])

    def test_counterclockwise_convex(self):
        rng = np.random.default_rng(3)
        pts = rng.standard_normal(50) + 1j * rng.standard_normal(50)
        h = hull_of(pts)
        assert convexity_defect(h.vertices) <= 1e-12


class TestContainment:
    def test_segment_membership(self):
        seg = hull_of([0, 1.0])
        assert hull_contains(seg, 0.5, 1e-6)
        assert not hull_contains(seg, 0.1j, 1e-6)

    def test_dilation(self):
        h = hull_of([0, 1, 1j])
        assert not hull_contains(h, -0.01)
        assert hull_contains(h, -0.01, tol=0.02)

    def test_distance_zero_inside(self):
        h = hull_of([0, 2, 2j, 2 + 2j])
        assert distance_to_hull(h, 1 + 1j) == 0.0
        assert boundary_distance(h, 1 + 1j) == pytest.approx(1.0)

    def test_distance_outside(self):
        h = hull_of([0, 1, 1j])
        assert distance_to_hull(h, 2.0) == pytest.approx(1.0)


class TestIntersection:
    def test_overlapping_squares(self):
        h1 = hull_of([0, 2, 2j, 2 + 2j])
        h2 = hull_of([1 + 1j, 3 + 1j, 1 + 3j, 3 + 3j])
        assert hulls_intersect(h1, h2)

    def test_disjoint(self):
        h1 = hull_of([0, 1, 1j])
        h2 = hull_of([5, 6, 5 + 1j])
        assert not hulls_intersect(h1, h2)
        assert hulls_intersect(h1, h2, tol=10.0)

    def test_touching_within_tol(self):
        h1 = hull_of([0, 1, 1j])
        h2 = hull_of([1.000001, 2, 2 + 1j])
        assert hulls_intersect(h1, h2, tol=1e-3)
        assert not hulls_intersect(h1, h2, tol=1e-9)

    def test_collinear_segments(self):
        s1 = hull_of([0, 1.0])
        s2 = hull_of([2.0, 3.0])
        assert not hulls_intersect(s1, s2, tol=1e-6)
        s3 = hull_of([0.5, 1.5])
        assert hulls_intersect(s1, s3)

    def test_point_cases(self):
        p = hull_of([0.5 + 0.1j])
        tri = hull_of([0, 1, 1j])
        assert hulls_intersect(p, tri)
        assert hulls_intersect(tri, p)
        assert not hulls_intersect(p, hull_of([5.0]), tol=1e-9)


class TestHausdorff:
    def test_self_distance_zero(self):
        h = hull_of([0, 1, 1j])
        assert hull_hausdorff(h, h) == 0.0

    def test_nested_squares(self):
        inner = hull_of([0.25 + 0.25j, 0.75 + 0.25j, 0.25 + 0.75j, 0.75 + 0.75j])
        outer = hull_of([0, 1, 1j, 1 + 1j])
        # farthest outer vertex from the inner square: corner gap
        assert hull_hausdorff(inner, outer) == pytest.approx(np.sqrt(2) / 4, rel=1e-12)

    def test_translated_points(self):
        a = hull_of([0.0])
        b = hull_of([3 + 4j])
        assert hull_hausdorff(a, b) == pytest.approx(5.0)


def test_scale_hull():
    h = hull_of([1, 1j, -1, -1j])
    scaled = scale_hull(h, 2.0)
    assert hull_contains(scaled, 1.5)
    assert not hull_contains(scaled, 2.5)

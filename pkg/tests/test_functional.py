import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isosum import (
    CVSRegion,
    OutsideRegion,
    Polygon,
    QuadVerdict,
    TripleVerdict,
    Verdict,
    classify,
    distance_profile,
    four_point_cvs_test,
    functional2,
    functional3,
    isosum_segment,
    three_point_cvs_test,
)
from isosum.functional import carrier_distances
from isosum.sampling import sample_interior_polygon, sample_interior_polyhedron

from conftest import (
    CONVEX_POLYGONS,
    POLYHEDRA,
    SQRT3,
    cube,
    equiangular_hexagon,
    equilateral,
    house_pentagon,
    isosceles,
    kite,
    quad_slanted,
    square,
    square_pyramid,
)


class TestDistanceProfile:
    def test_square_axis_aligned(self):
        prof = distance_profile(square(), (0.25, 0.5))
        assert prof.distances == (0.5, 0.75, 0.5, 0.25)
        assert prof.total == 2.0

    def test_equilateral_centroid_is_height(self):
        tri = equilateral()
        centroid = tri.vertices.mean(axis=0)
        prof = distance_profile(tri, centroid)
        assert prof.total == pytest.approx(SQRT3 / 2, abs=1e-12)

    def test_cube_opposite_faces(self):
        prof = distance_profile(cube(), (0.3, 0.3, 0.3))
        assert prof.total == pytest.approx(3.0, abs=1e-12)

    def test_outside_point_rejected(self):
        with pytest.raises(OutsideRegion):
            distance_profile(square(), (2.0, 0.5))
        with pytest.raises(OutsideRegion):
            distance_profile(square(), (1.0, 0.5))  # boundary is not inside


class TestFunctional2:
    def test_square_constant(self):
        f = functional2(square())
        assert (f.gx, f.gy) == (0.0, 0.0)
        assert f.constant == pytest.approx(2.0, abs=1e-15)

    def test_quad_gradient_direction(self):
        f = functional2(quad_slanted())
        # gradient proportional to (1, 1 - sqrt(2))
        assert f.gy / f.gx == pytest.approx(1 - math.sqrt(2), abs=1e-12)

    def test_kite_matches_closed_form(self):
        alpha, beta, gamma = 1.0, 2.0, -1.0
        f = functional2(kite(alpha, beta, gamma))
        nb = math.hypot(alpha, beta)
        ng = math.hypot(alpha, gamma)
        assert f.gx == pytest.approx(0.0, abs=1e-12)
        assert f.gy == pytest.approx(-2 * alpha / nb + 2 * alpha / ng, abs=1e-12)
        assert f.constant == pytest.approx(
            2 * alpha * beta / nb - 2 * alpha * gamma / ng, abs=1e-12
        )

    def test_matches_oracle_on_samples(self):
        for name, make in CONVEX_POLYGONS.items():
            poly = make()
            f = functional2(poly)
            pts = sample_interior_polygon(poly, 2000, seed=5)
            affine = f.value_batch(pts)
            oracle = carrier_distances(poly, pts).sum(axis=1)
            worst = np.max(np.abs(affine - oracle) / (1 + np.abs(oracle)))
            assert worst <= 1e-9, name


class TestFunctional3:
    def test_cube(self):
        f = functional3(cube())
        assert np.allclose(f.grad, 0.0, atol=1e-15)
        assert f.constant == pytest.approx(3.0, abs=1e-12)

    def test_pyramid_constant_sum_apex(self):
        alpha = math.sqrt(15 / 2)
        f = functional3(square_pyramid(alpha))
        assert np.allclose(f.grad, 0.0, atol=1e-12)
        # 4 * alpha * beta * gamma / Delta with Delta = 4
        assert f.constant == pytest.approx(alpha, abs=1e-12)

    def test_unit_pyramid_gradient(self):
        f = functional3(square_pyramid(1.0))
        assert f.gx == pytest.approx(0.0, abs=1e-12)
        assert f.gy == pytest.approx(0.0, abs=1e-12)
        assert f.gz == pytest.approx(1 - 4 / SQRT3, abs=1e-12)

    def test_matches_oracle_on_samples(self):
        from isosum.functional import face_distances

        for name, make in POLYHEDRA.items():
            poly = make()
            f = functional3(poly)
            pts = sample_interior_polyhedron(poly, 1000, seed=5)
            affine = f.value_batch(pts)
            oracle = face_distances(poly, pts).sum(axis=1)
            worst = np.max(np.abs(affine - oracle) / (1 + np.abs(oracle)))
            assert worst <= 1e-9, name


class TestClassify:
    def test_square_cvs(self):
        cls = classify(functional2(square()))
        assert cls.verdict is Verdict.CVS
        assert cls.value == pytest.approx(2.0, abs=1e-12)

    def test_quad_direction_slope(self):
        cls = classify(functional2(quad_slanted()))
        assert cls.verdict is Verdict.NON_CVS
        dx, dy = cls.direction
        assert dy / dx == pytest.approx(1 + math.sqrt(2), abs=1e-9)

    def test_equilateral_isosceles_cvs(self):
        cls = classify(functional2(isosceles(beta=SQRT3)))
        assert cls.verdict is Verdict.CVS
        assert cls.value == pytest.approx(SQRT3, abs=1e-12)

    def test_flat_isosceles_horizontal_segments(self):
        cls = classify(functional2(isosceles(beta=1.7)))
        assert cls.verdict is Verdict.NON_CVS
        assert cls.direction == pytest.approx((1.0, 0.0), abs=1e-12)

    def test_equiangular_hexagon_cvs(self):
        assert classify(functional2(equiangular_hexagon())).verdict is Verdict.CVS

    def test_rejects_nonpositive_tol(self):
        with pytest.raises(ValueError):
            classify(functional2(square()), tol=0.0)


class TestIsosumSegment:
    def test_kite_segments_horizontal(self):
        poly = kite(1.0, 2.0, -1.0)
        f = functional2(poly)
        c = f.value(poly.centroid)
        seg = isosum_segment(poly, f, c)
        assert seg is not None
        assert seg[0][1] == pytest.approx(seg[1][1], abs=1e-9)

    def test_quad_segment_slope_and_level(self):
        poly = quad_slanted()
        f = functional2(poly)
        c = f.value(poly.centroid)
        a, b = isosum_segment(poly, f, c)
        d = b - a
        assert d[1] / d[0] == pytest.approx(1 + math.sqrt(2), abs=1e-9)
        assert f.value(a) == pytest.approx(c, abs=1e-9)
        assert f.value(b) == pytest.approx(c, abs=1e-9)

    def test_level_beyond_range_misses(self):
        poly = quad_slanted()
        f = functional2(poly)
        c = max(f.value(v) for v in poly.vertices) + 1.0
        assert isosum_segment(poly, f, c) is None

    def test_level_at_extreme_vertex_degenerates(self):
        poly = quad_slanted()
        f = functional2(poly)
        values = [f.value(v) for v in poly.vertices]
        c = max(values)
        a, b = isosum_segment(poly, f, c)
        assert np.hypot(*(b - a)) <= 1e-9

    def test_cvs_region_rejected(self):
        poly = square()
        with pytest.raises(CVSRegion):
            isosum_segment(poly, functional2(poly), 2.0)

    def test_value_increases_along_gradient(self):
        poly = quad_slanted()
        f = functional2(poly)
        g = f.grad / np.linalg.norm(f.grad)
        p = poly.centroid
        assert f.value(p + 0.1 * g) > f.value(p)


class TestThreePointTest:
    def test_equilateral_triple_implies_cvs(self):
        tri = equilateral()
        pts = sample_interior_polygon(tri, 3, seed=2)
        assert three_point_cvs_test(tri, *pts) is TripleVerdict.IMPLIES_CVS

    def test_collinear_on_isosum_segment(self):
        poly = quad_slanted()
        f = functional2(poly)
        a, b = isosum_segment(poly, f, f.value(poly.centroid))
        pts = [a + t * (b - a) for t in (0.25, 0.5, 0.75)]
        assert three_point_cvs_test(poly, *pts) is TripleVerdict.COLLINEAR

    def test_generic_points_not_equal(self):
        poly = quad_slanted()
        p1, p2, p3 = (0.5, 0.5), (1, 0.5), (1, 1)
        totals = [distance_profile(poly, p).total for p in (p1, p2, p3)]
        assert max(totals) - min(totals) > 1e-6  # genuinely different sums
        assert three_point_cvs_test(poly, p1, p2, p3) is TripleVerdict.NOT_EQUAL_SUMS

    def test_outside_point_rejected(self):
        with pytest.raises(OutsideRegion):
            three_point_cvs_test(square(), (0.5, 0.5), (0.6, 0.6), (2, 2))

    def test_agrees_with_classification(self):
        for name, make in CONVEX_POLYGONS.items():
            poly = make()
            pts = sample_interior_polygon(poly, 3, seed=9)
            verdict = three_point_cvs_test(poly, *pts)
            is_cvs = classify(functional2(poly)).is_cvs
            if verdict is TripleVerdict.IMPLIES_CVS:
                assert is_cvs, name
            if is_cvs:
                assert verdict is TripleVerdict.IMPLIES_CVS, name


class TestFourPointTest:
    def test_cube_implies_cvs(self):
        pts = [(0.2, 0.2, 0.2), (0.7, 0.3, 0.4), (0.4, 0.8, 0.3), (0.5, 0.5, 0.8)]
        assert four_point_cvs_test(cube(), *pts) is QuadVerdict.IMPLIES_CVS

    def test_coplanar_points(self):
        pyr = square_pyramid(1.0)
        pts = [(0.1, 0, 0.2), (-0.1, 0, 0.2), (0, 0.1, 0.2), (0, -0.1, 0.2)]
        assert four_point_cvs_test(pyr, *pts) is QuadVerdict.COPLANAR

    def test_height_separated_points(self):
        pyr = square_pyramid(1.0)
        pts = [(0.1, 0, 0.1), (-0.1, 0, 0.1), (0, 0.1, 0.1), (0, 0, 0.4)]
        assert four_point_cvs_test(pyr, *pts) is QuadVerdict.NOT_EQUAL_SUMS

    def test_agrees_with_classification(self):
        for name, make in POLYHEDRA.items():
            poly = make()
            pts = sample_interior_polyhedron(poly, 4, seed=31)
            verdict = four_point_cvs_test(poly, *pts)
            is_cvs = classify(functional3(poly)).is_cvs
            if verdict is QuadVerdict.IMPLIES_CVS:
                assert is_cvs, name
            if is_cvs:
                assert verdict is QuadVerdict.IMPLIES_CVS, name


class TestScalingAndIsometry:
    @given(st.floats(min_value=0.1, max_value=20.0))
    @settings(max_examples=30, deadline=None)
    def test_similarity_scaling(self, s):
        poly = quad_slanted()
        scaled = Polygon(poly.vertices * s)
        f = functional2(poly)
        fs = functional2(scaled)
        p = poly.centroid
        assert fs.value(s * p) == pytest.approx(s * f.value(p), rel=1e-9)

    @given(
        st.floats(min_value=0, max_value=2 * math.pi),
        st.floats(min_value=-20, max_value=20),
        st.floats(min_value=-20, max_value=20),
    )
    @settings(max_examples=30, deadline=None)
    def test_isometry_equivariance(self, theta, tx, ty):
        poly = house_pentagon()
        rot = np.array(
            [[math.cos(theta), math.sin(theta)], [-math.sin(theta), math.cos(theta)]]
        )
        moved = Polygon(poly.vertices @ rot + np.array([tx, ty]))
        p = poly.centroid
        q = p @ rot + np.array([tx, ty])
        assert functional2(moved).value(q) == pytest.approx(
            functional2(poly).value(p), abs=1e-9
        )

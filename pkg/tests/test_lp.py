import math

import numpy as np
import pytest

from isosum import (
    DegenerateInput,
    OutsideRegion,
    Polygon,
    Verdict,
    barycentric_normalize,
    check_duality,
    classify,
    export_lp_text,
    functional2,
    parse_lp_text,
    triangle_to_lp,
)
from isosum.sampling import sample_interior_polygon

from conftest import SQRT3, equilateral, isosceles, triangle_345


def _subarea_normalized(triangle: Polygon, p) -> np.ndarray:
    """Independent oracle for x_i = h_i / sum(h).

    Each side distance is recovered from the sub-triangle area spanned with
    the opposite side (h_i = 2 * area_i / a_i); no line coefficients touched.
    """
    v = triangle.vertices
    p = np.asarray(p, dtype=float)

    def area(a, b, c):
        return 0.5 * abs(
            (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        )

    h = np.array(
        [
            2 * area(p, v[1], v[2]) / math.hypot(*(v[2] - v[1])),
            2 * area(p, v[2], v[0]) / math.hypot(*(v[0] - v[2])),
            2 * area(p, v[0], v[1]) / math.hypot(*(v[1] - v[0])),
        ]
    )
    return h / h.sum()


class TestTriangleToLP:
    def test_equilateral_unit(self):
        lp = triangle_to_lp(equilateral())
        assert lp.side_lengths == (1.0, 1.0, 1.0)
        assert lp.area == pytest.approx(SQRT3 / 4, abs=1e-15)
        assert lp.objective_coeffs == lp.side_lengths

    def test_345_labeling(self):
        # A=(0,0), B=(3,0), C=(0,4): a1=|BC|, a2=|AC|, a3=|AB|
        lp = triangle_to_lp(triangle_345())
        assert lp.side_lengths == (5.0, 4.0, 3.0)
        assert lp.area == 6.0

    def test_collinear_rejected(self):
        with pytest.warns(UserWarning, match="collinear"):
            with pytest.raises(DegenerateInput):
                triangle_to_lp(Polygon([(0, 0), (1, 0), (2, 0)]))

    def test_quadrilateral_rejected(self):
        with pytest.raises(DegenerateInput, match="triangle"):
            triangle_to_lp(Polygon([(0, 0), (1, 0), (1, 1), (0, 1)]))


class TestBarycentricNormalize:
    def test_equilateral_centroid(self):
        tri = equilateral()
        x = barycentric_normalize(tri, tri.vertices.mean(axis=0)).x
        assert np.allclose(x, 1 / 3, atol=1e-12)

    def test_incenter_equal_distances(self):
        tri = triangle_345()
        lp = triangle_to_lp(tri)
        a = np.array(lp.side_lengths)
        incenter = (tri.vertices * a[:, None]).sum(axis=0) / a.sum()
        x = barycentric_normalize(tri, incenter).x
        assert np.allclose(x, 1 / 3, atol=1e-12)

    def test_sums_to_one(self):
        tri = triangle_345()
        for p in sample_interior_polygon(tri, 200, seed=3):
            assert sum(barycentric_normalize(tri, p).x) == pytest.approx(
                1.0, abs=1e-12
            )

    def test_matches_subarea_oracle(self):
        tri = triangle_345()
        pts = sample_interior_polygon(tri, 1000, seed=17)
        for p in pts:
            got = np.array(barycentric_normalize(tri, p).x)
            want = _subarea_normalized(tri, p)
            assert np.abs(got - want).max() <= 1e-9

    def test_outside_rejected(self):
        with pytest.raises(OutsideRegion):
            barycentric_normalize(triangle_345(), (5, 5))


class TestDuality:
    def test_equilateral_centroid_residual(self):
        tri = equilateral()
        assert check_duality(tri, tri.vertices.mean(axis=0)) <= 1e-12

    @pytest.mark.parametrize(
        "make", [equilateral, triangle_345, lambda: isosceles(beta=SQRT3)]
    )
    def test_residual_bound_on_samples(self, make):
        tri = make()
        lp = triangle_to_lp(tri)
        bound = 1e-9 * (1 + 2 * lp.area)
        for p in sample_interior_polygon(tri, 100, seed=23):
            assert check_duality(tri, p) <= bound

    def test_constant_objective_iff_equilateral(self):
        cases = {
            "equilateral": (equilateral, True),
            "triangle_345": (triangle_345, False),
            "isosceles_sqrt3": (lambda: isosceles(beta=SQRT3), True),
            "isosceles_flat": (lambda: isosceles(beta=1.7), False),
        }
        for name, (make, expect_cvs) in cases.items():
            tri = make()
            lp = triangle_to_lp(tri)
            a = np.array(lp.side_lengths)
            proportional = np.allclose(a, a.mean(), rtol=1e-12)
            is_cvs = classify(functional2(tri)).verdict is Verdict.CVS
            assert proportional == is_cvs == expect_cvs, name


class TestLPText:
    def test_unit_coefficients(self):
        text = export_lp_text(triangle_to_lp(equilateral()))
        assert "1 x1 + 1 x2 + 1 x3" in text
        assert "x1 + x2 + x3 <= 1" in text
        assert text.endswith("\n")
        assert "\r" not in text
        assert text.encode("ascii")  # ASCII only

    def test_345_coefficients_in_order(self):
        text = export_lp_text(triangle_to_lp(triangle_345()))
        assert "maximize: 5 x1 + 4 x2 + 3 x3" in text

    def test_round_trip(self):
        for make in (equilateral, triangle_345, lambda: isosceles(beta=1.25)):
            lp = triangle_to_lp(make())
            text = export_lp_text(lp)
            back = parse_lp_text(text)
            # 12 significant digits survive the trip; re-emission is stable
            assert np.allclose(back.side_lengths, lp.side_lengths, rtol=1e-11)
            assert back.area == pytest.approx(lp.area, rel=1e-11)
            assert export_lp_text(back) == text

"""Shared geometric fixtures: the recurring polygons and solids."""

import math
from pathlib import Path

import numpy as np
import pytest

from isosum import Polygon, Polyhedron, orient_ccw

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"

SQRT3 = math.sqrt(3.0)


def square() -> Polygon:
    return Polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


def equilateral(side: float = 1.0) -> Polygon:
    return Polygon([(0, 0), (side, 0), (side / 2, side * math.sqrt(0.75))])


def triangle_345() -> Polygon:
    return Polygon([(0, 0), (3, 0), (0, 4)])


def isosceles(beta: float, alpha: float = 1.0) -> Polygon:
    return Polygon([(0, beta), (-alpha, 0), (alpha, 0)])


def quad_slanted() -> Polygon:
    """Quadrilateral whose isosum segments have slope 1 + sqrt(2)."""
    return Polygon([(0, 0), (3, 0), (1, 2), (0, 1)])


def kite(alpha: float, beta: float, gamma: float) -> Polygon:
    """Kite with apexes on the y axis at beta (top) and gamma (bottom)."""
    return orient_ccw(Polygon([(0, beta), (-alpha, 0), (0, gamma), (alpha, 0)]))


def kite_concave() -> Polygon:
    return Polygon([(0, 8), (-6, 0), (0, 2.5), (6, 0)])


def l_hexagon() -> Polygon:
    return Polygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])


def cross_octagon() -> Polygon:
    """Concave octagon with two edges on the shared line y = 1."""
    return Polygon(
        [(0, 0), (3, 0), (3, 1), (2, 1), (2, 2), (1, 2), (1, 1), (0, 1)]
    )


def house_pentagon() -> Polygon:
    """Rectangle of width 2, height 3 with an equilateral roof; one
    reflection symmetry, constant sum 5 + sqrt(3)."""
    return Polygon([(0, 3 + SQRT3), (-1, 3), (-1, 0), (1, 0), (1, 3)])


def skew_house_pentagon() -> Polygon:
    """Parallelogram (sides 2 and 3, angle 70 deg) plus an equilateral roof;
    interior angles 70, 110, 130, 60, 170 degrees and no symmetries."""
    c70, s70 = math.cos(math.radians(70)), math.sin(math.radians(70))
    a = (0.0, 0.0)
    b = (2.0, 0.0)
    c = (2.0 + 3 * c70, 3 * s70)
    d = (1.0 + 3 * c70, 3 * s70 + SQRT3)
    e = (3 * c70, 3 * s70)
    return Polygon([a, b, c, d, e])


def equiangular_hexagon() -> Polygon:
    """All interior angles 120 degrees, side lengths 1,2,3,1,2,3."""
    verts = []
    pt = (0.0, 0.0)
    for heading, length in zip(range(0, 360, 60), (1, 2, 3, 1, 2, 3)):
        verts.append(pt)
        rad = math.radians(heading)
        pt = (pt[0] + length * math.cos(rad), pt[1] + length * math.sin(rad))
    return Polygon(verts)


def regular_polygon(n: int, radius: float = 1.0) -> Polygon:
    return Polygon(
        [
            (
                radius * math.cos(2 * math.pi * k / n + math.pi / 2),
                radius * math.sin(2 * math.pi * k / n + math.pi / 2),
            )
            for k in range(n)
        ]
    )


def parallelogram() -> Polygon:
    return Polygon([(0, 0), (3, 0), (4, 1), (1, 1)])


def cube() -> Polyhedron:
    return Polyhedron(
        [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0),
         (0, 0, 1), (1, 0, 1), (1, 1, 1), (0, 1, 1)],
        [[0, 3, 2, 1], [4, 5, 6, 7], [0, 1, 5, 4],
         [1, 2, 6, 5], [2, 3, 7, 6], [3, 0, 4, 7]],
    )


def square_pyramid(alpha: float, beta: float = 1.0, gamma: float = 1.0) -> Polyhedron:
    """Pyramid with apex (0,0,alpha) over the rhombic base (+-beta, +-gamma)."""
    return Polyhedron(
        [(0, 0, alpha), (beta, 0, 0), (0, gamma, 0), (-beta, 0, 0), (0, -gamma, 0)],
        [[1, 2, 3, 4], [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 1]],
    )


def pentagon_prism(height: float = 2.0) -> Polyhedron:
    base = [(0, 3 + SQRT3), (-1, 3), (-1, 0), (1, 0), (1, 3)]
    verts = [(x, y, 0.0) for x, y in base] + [(x, y, height) for x, y in base]
    faces = [[4, 3, 2, 1, 0], [5, 6, 7, 8, 9]] + [
        [i, (i + 1) % 5, 5 + (i + 1) % 5, 5 + i] for i in range(5)
    ]
    return Polyhedron(verts, faces)


def box(a=(1, 0, 0), b=(0, 2, 0), c=(0, 0, 3)) -> Polyhedron:
    a, b, c = np.array(a, float), np.array(b, float), np.array(c, float)
    corners = [i * a + j * b + k * c for i in (0, 1) for j in (0, 1) for k in (0, 1)]
    faces = [
        [0, 2, 6, 4], [1, 5, 7, 3],
        [0, 4, 5, 1], [2, 3, 7, 6],
        [0, 1, 3, 2], [4, 6, 7, 5],
    ]
    return Polyhedron(corners, faces)


CONVEX_POLYGONS = {
    "square": square,
    "equilateral": equilateral,
    "triangle_345": triangle_345,
    "quad_slanted": quad_slanted,
    "house_pentagon": house_pentagon,
    "skew_house_pentagon": skew_house_pentagon,
    "equiangular_hexagon": equiangular_hexagon,
    "kite_convex": lambda: kite(1.0, 2.0, -1.0),
    "parallelogram": parallelogram,
}

CONCAVE_POLYGONS = {
    "kite_concave": kite_concave,
    "l_hexagon": l_hexagon,
    "cross_octagon": cross_octagon,
}

POLYHEDRA = {
    "cube": cube,
    "pyramid_cvs": lambda: square_pyramid(math.sqrt(15 / 2)),
    "pyramid_unit": lambda: square_pyramid(1.0),
    "pentagon_prism": pentagon_prism,
    "box": box,
    "box_oblique": lambda: box((1, 0, 0), (0.3, 1, 0), (0.2, 0.4, 1.5)),
}


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR

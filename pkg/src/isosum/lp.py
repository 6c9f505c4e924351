"""Linear-programming view of the triangle distance sum.

Normalizing the three side distances of an interior point P to
``x_i = h_i / sum(h)`` lands on the simplex face ``x1 + x2 + x3 = 1``, and
the objective ``F(x) = a1*x1 + a2*x2 + a3*x3`` built from the side lengths
satisfies ``F(x) * V(P) = 2S`` with S the triangle area.  F is constant over
the face exactly when the side lengths are proportional to (1, 1, 1), i.e.
for the equilateral triangle.  No solver is attached: the model and the
identity are the content; optima are a non-goal.

Side labeling: ``a_i`` is the length of the side opposite vertex i, and
``h_i`` the distance to that side.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInput, OutsideRegion, ParseError
from .geometry import DEFAULT_TOL, Containment, Polygon


@dataclass(frozen=True)
class LPProblem:
    """Objective coefficients = side lengths; feasible region is the fixed
    simplex ``sum(x) <= 1``, ``x >= 0``."""

    side_lengths: tuple[float, float, float]
    area: float

    @property
    def objective_coeffs(self) -> tuple[float, float, float]:
        return self.side_lengths


@dataclass(frozen=True)
class SimplexPoint:
    x: tuple[float, float, float]


def _triangle_vertices(triangle: Polygon) -> np.ndarray:
    if triangle.n != 3:
        raise DegenerateInput("LP model requires a triangle")
    return triangle.vertices


def triangle_to_lp(triangle: Polygon) -> LPProblem:
    v = _triangle_vertices(triangle)
    sides = []
    for i in range(3):
        p, q = v[(i + 1) % 3], v[(i + 2) % 3]
        sides.append(math.hypot(q[0] - p[0], q[1] - p[1]))
    a1, a2, a3 = sides
    if a1 + a2 <= a3 or a2 + a3 <= a1 or a1 + a3 <= a2:
        raise DegenerateInput("side lengths violate the strict triangle inequality")
    return LPProblem((a1, a2, a3), triangle.area)


def _opposite_side_distances(triangle: Polygon, p) -> np.ndarray:
    v = _triangle_vertices(triangle)
    h = []
    for i in range(3):
        a, b = v[(i + 1) % 3], v[(i + 2) % 3]
        d = b - a
        h.append(
            abs(d[0] * (p[1] - a[1]) - d[1] * (p[0] - a[0])) / math.hypot(d[0], d[1])
        )
    return np.array(h)


def barycentric_normalize(
    triangle: Polygon, p, tol: float = DEFAULT_TOL
) -> SimplexPoint:
    """``x_i = h_i / sum(h)`` for a strictly interior point."""
    if triangle.contains(p, tol) is not Containment.INSIDE:
        raise OutsideRegion(f"point {tuple(p)} is not strictly inside the triangle")
    h = _opposite_side_distances(triangle, p)
    x = h / h.sum()
    return SimplexPoint((float(x[0]), float(x[1]), float(x[2])))


def check_duality(triangle: Polygon, p, tol: float = DEFAULT_TOL) -> float:
    """Residual ``|F(x) * V(p) - 2S|``; zero up to roundoff for interior p."""
    lp = triangle_to_lp(triangle)
    if triangle.contains(p, tol) is not Containment.INSIDE:
        raise OutsideRegion(f"point {tuple(p)} is not strictly inside the triangle")
    h = _opposite_side_distances(triangle, p)
    total = h.sum()
    x = h / total
    f = float(np.dot(lp.side_lengths, x))
    return abs(f * total - 2.0 * lp.area)


def _fmt(value: float) -> str:
    return format(value, ".12g")


def export_lp_text(lp: LPProblem) -> str:
    """Plain-text model listing (ASCII, LF), 12 significant digits."""
    lines = [
        "\\ triangle distance-sum linear program",
        f"\\ area = {_fmt(lp.area)}",
        "maximize: "
        + " + ".join(f"{_fmt(a)} x{i + 1}" for i, a in enumerate(lp.side_lengths)),
        "subject to:",
        "x1 + x2 + x3 <= 1",
        "x1 >= 0",
        "x2 >= 0",
        "x3 >= 0",
        "end",
    ]
    return "\n".join(lines) + "\n"


_OBJ_RE = re.compile(
    r"^maximize:\s*(\S+) x1 \+ (\S+) x2 \+ (\S+) x3\s*$", re.MULTILINE
)
_AREA_RE = re.compile(r"^\\ area = (\S+)\s*$", re.MULTILINE)


def parse_lp_text(text: str) -> LPProblem:
    """Inverse of :func:`export_lp_text` for our own emitted listings."""
    obj = _OBJ_RE.search(text)
    if obj is None:
        raise ParseError("missing or malformed objective line", 3, 1)
    area = _AREA_RE.search(text)
    if area is None:
        raise ParseError("missing area comment line", 2, 1)
    try:
        sides = tuple(float(g) for g in obj.groups())
        s = float(area.group(1))
    except ValueError as exc:
        raise ParseError(f"bad numeral: {exc}", 3, 1) from None
    return LPProblem(sides, s)

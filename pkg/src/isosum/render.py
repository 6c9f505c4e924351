"""SVG rendering of polygons and their isosum level sets.

Output is deterministic: no timestamps, fixed 9-decimal float formatting,
levels chosen at quantiles of V over a fixed 64x64 interior sample grid
(clipped to the attainable range), one parallel family per convex region.
A constant V is rendered as a text annotation instead of segments.
"""

from __future__ import annotations

import numpy as np

from .errors import ValidationError
from .functional import classify, functional2, isosum_segment
from .geometry import DEFAULT_TOL, Containment, Convexity, Polygon, is_convex
from .partition import partition
from .scene import Scene

GRID = 64


def _f9(value: float) -> str:
    out = format(float(value), ".9f")
    return "0.000000000" if out == "-0.000000000" else out


def _grid_points(region: Polygon) -> np.ndarray:
    x0, y0, x1, y1 = region.bounds
    xs = np.linspace(x0, x1, GRID)
    ys = np.linspace(y0, y1, GRID)
    gx, gy = np.meshgrid(xs, ys)
    pts = np.column_stack([gx.ravel(), gy.ravel()])
    inside = region.contains_batch(pts) == Containment.INSIDE
    return pts[inside]


def _levels(region: Polygon, functional, k: int) -> list[float]:
    pts = _grid_points(region)
    if len(pts) == 0:
        return [float(functional.value(region.centroid))]
    values = functional.value_batch(pts)
    qs = [(j + 1) / (k + 1) for j in range(k)]
    return [float(q) for q in np.quantile(values, qs)]


class _Canvas:
    def __init__(self, polygon: Polygon):
        x0, y0, x1, y1 = polygon.bounds
        margin = 0.05 * max(x1 - x0, y1 - y0)
        self._flip = y0 + y1  # SVG y axis points down
        self.view = (x0 - margin, y0 - margin, (x1 - x0) + 2 * margin, (y1 - y0) + 2 * margin)
        self.stroke = max(x1 - x0, y1 - y0) / 200.0
        self.font = max(x1 - x0, y1 - y0) / 40.0
        self.parts: list[str] = []

    def map(self, p) -> tuple[float, float]:
        return float(p[0]), float(self._flip - p[1])

    def polygon_outline(self, polygon: Polygon) -> None:
        pts = " ".join(
            f"{_f9(x)},{_f9(y)}" for x, y in (self.map(v) for v in polygon.vertices)
        )
        self.parts.append(
            f'<polygon points="{pts}" fill="none" stroke="#000000" '
            f'stroke-width="{_f9(self.stroke)}"/>'
        )

    def segment(self, a, b, label: str) -> None:
        (x1, y1), (x2, y2) = self.map(a), self.map(b)
        self.parts.append(
            f'<line x1="{_f9(x1)}" y1="{_f9(y1)}" x2="{_f9(x2)}" y2="{_f9(y2)}" '
            f'stroke="#1f77b4" stroke-width="{_f9(self.stroke / 2)}"/>'
        )
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        self.parts.append(
            f'<text x="{_f9(mx)}" y="{_f9(my)}" font-size="{_f9(self.font)}" '
            f'fill="#1f77b4">{label}</text>'
        )

    def annotation(self, p, text: str) -> None:
        x, y = self.map(p)
        self.parts.append(
            f'<text x="{_f9(x)}" y="{_f9(y)}" font-size="{_f9(self.font)}" '
            f'fill="#000000" text-anchor="middle">{text}</text>'
        )

    def emit(self) -> str:
        vx, vy, vw, vh = (_f9(v) for v in self.view)
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'viewBox="{vx} {vy} {vw} {vh}">\n'
        )
        return head + "\n".join(self.parts) + "\n</svg>\n"


def _draw_family(canvas: _Canvas, region: Polygon, functional, k: int, tol: float):
    cls = classify(functional, tol)
    if cls.is_cvs:
        canvas.annotation(region.centroid, f"CVS, V={_f9(cls.value)}")
        return
    for level in _levels(region, functional, k):
        seg = isosum_segment(region, functional, level, tol)
        if seg is None:
            continue
        canvas.segment(seg[0], seg[1], _f9(level))


def render_svg(scene_or_polygon, levels: int, tol: float = DEFAULT_TOL) -> str:
    """Polygon outline plus ``levels`` labeled isosum segments per region."""
    if levels < 1:
        raise ValidationError("levels must be >= 1")
    if isinstance(scene_or_polygon, Scene):
        polygon = scene_or_polygon.to_polygon(tol)
    elif isinstance(scene_or_polygon, Polygon):
        polygon = scene_or_polygon
    else:
        raise ValidationError("render needs a 2D polygon scene")

    canvas = _Canvas(polygon)
    canvas.polygon_outline(polygon)
    report = is_convex(polygon, tol)
    if report.verdict is Convexity.CONVEX:
        _draw_family(canvas, polygon, functional2(polygon, tol), levels, tol)
    else:
        for cell in partition(polygon, tol).cells:
            _draw_family(canvas, cell.shape, cell.functional, levels, tol)
    return canvas.emit()

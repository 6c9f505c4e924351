"""Convex cell decomposition of concave polygons by their boundary lines.

A concave polygon's interior points do not all lie on the same side of every
side carrier line, so the distance sum V is only piecewise affine.  Cutting
the polygon by the full arrangement of its carrier lines yields convex cells
on which every line has a fixed side; V restricted to a cell is again one
affine expression, with the per-line signs read off the cell's sign vector.

Construction: the polygon's bounding box (with margin) is split successively
by every distinct carrier line, and arrangement cells whose representative
interior point lies inside the polygon are kept.  Every polygon edge lies on
a cutting line, so each arrangement cell is entirely inside or outside.
Adjacent cells always differ in exactly one sign (the line carrying the
shared edge); a defensive merge pass still unions any same-sign adjacent
pair, re-verifying convexity, and records when it has to abort.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateInput, NoInteriorEdge, NotConcave
from .functional import AffineFunctional2, carrier_distances, classify
from .geometry import (
    DEFAULT_TOL,
    Containment,
    Convexity,
    Polygon,
    edge_line,
    is_convex,
)

Line = tuple[float, float, float]


@dataclass(frozen=True)
class SignVector:
    """Side of each distinct boundary line on which a cell lies (+1/-1),
    relative to the line's stored orientation."""

    signs: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.signs)

    def diff_indices(self, other: "SignVector") -> tuple[int, ...]:
        return tuple(
            k for k, (a, b) in enumerate(zip(self.signs, other.signs)) if a != b
        )


@dataclass(frozen=True)
class PartitionCell:
    shape: Polygon
    sign_vector: SignVector
    functional: AffineFunctional2


@dataclass(frozen=True)
class Adjacency:
    """Two cells sharing a positive-length edge on one boundary line."""

    i: int
    j: int
    line_index: int
    segment: tuple[tuple[float, float], tuple[float, float]]

    @property
    def midpoint(self) -> np.ndarray:
        (ax, ay), (bx, by) = self.segment
        return np.array([(ax + bx) / 2.0, (ay + by) / 2.0])


@dataclass
class Partition:
    polygon: Polygon
    lines: tuple[Line, ...]
    edge_to_line: tuple[int, ...]
    cells: list[PartitionCell]
    adjacency: list[Adjacency]
    merge_notes: list[str] = field(default_factory=list)


@dataclass
class NeighborReport:
    valid: bool
    violations: list[str]
    pairs_checked: int


def _canonical_line(a: float, b: float, c: float) -> Line:
    if a < -1e-12 or (abs(a) <= 1e-12 and b < 0):
        return (-a, -b, -c)
    return (a, b, c)


def distinct_lines(
    polygon: Polygon, tol: float = DEFAULT_TOL
) -> tuple[tuple[Line, ...], tuple[int, ...]]:
    """Distinct carrier lines (canonical sign) and the edge -> line map.

    Two edges on one geometric line collapse to a single sign-vector slot,
    though each still contributes its own distance term to V.
    """
    scale = max(1.0, polygon.bbox_diagonal)
    lines: list[Line] = []
    edge_to_line: list[int] = []
    for i in range(polygon.n):
        cand = _canonical_line(*edge_line(polygon, i))
        for k, known in enumerate(lines):
            if (
                abs(cand[0] - known[0]) <= tol
                and abs(cand[1] - known[1]) <= tol
                and abs(cand[2] - known[2]) <= tol * scale
            ):
                edge_to_line.append(k)
                break
        else:
            lines.append(cand)
            edge_to_line.append(len(lines) - 1)
    return tuple(lines), tuple(edge_to_line)


def _clip_halfplane(
    loop: np.ndarray, line: Line, side: int, eps: float
) -> np.ndarray | None:
    """Sutherland-Hodgman step keeping ``side * line(p) >= -eps``."""
    a, b, c = line
    vals = side * (loop[:, 0] * a + loop[:, 1] * b + c)
    out: list[np.ndarray] = []
    n = len(loop)
    for i in range(n):
        j = (i + 1) % n
        vi, vj = vals[i], vals[j]
        if vi >= -eps:
            out.append(loop[i])
        if (vi > eps and vj < -eps) or (vi < -eps and vj > eps):
            t = vi / (vi - vj)
            out.append(loop[i] + t * (loop[j] - loop[i]))
    if len(out) < 3:
        return None
    return np.array(out)


def _clean_loop(loop: np.ndarray, tol: float) -> np.ndarray:
    """Drop coincident and collinear-chain vertices from a clipped loop."""
    scale = max(1.0, float(np.abs(loop).max()))
    keep = list(range(len(loop)))
    changed = True
    while changed and len(keep) >= 3:
        changed = False
        m = len(keep)
        for idx in range(m):
            a = loop[keep[(idx - 1) % m]]
            b = loop[keep[idx]]
            c = loop[keep[(idx + 1) % m]]
            cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
            if np.hypot(*(b - a)) <= tol * scale or abs(cross) <= tol * scale**2:
                del keep[idx]
                changed = True
                break
    return loop[keep]


def _loop_area(loop: np.ndarray) -> float:
    x, y = loop[:, 0], loop[:, 1]
    return 0.5 * abs(float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y)))


def _convex_hull(points: np.ndarray) -> np.ndarray:
    """Monotone-chain hull, CCW without the closing point."""
    pts = points[np.lexsort((points[:, 1], points[:, 0]))]

    def build(seq):
        chain: list[np.ndarray] = []
        for p in seq:
            while len(chain) >= 2:
                u = chain[-1] - chain[-2]
                w = p - chain[-2]
                if u[0] * w[1] - u[1] * w[0] <= 0:
                    chain.pop()
                else:
                    break
            chain.append(p)
        return chain

    lower = build(pts)
    upper = build(pts[::-1])
    return np.array(lower[:-1] + upper[:-1])


def cell_functional(
    polygon: Polygon, cell_or_anchor, tol: float = DEFAULT_TOL
) -> AffineFunctional2:
    """Affine V on one cell: per-edge carrier terms signed at the cell.

    Accepts a :class:`PartitionCell` or any strictly-interior anchor point of
    the cell.  Every polygon edge contributes a term; its sign is the side of
    the edge's carrier line the cell lies on, read at the anchor.
    """
    if isinstance(cell_or_anchor, PartitionCell):
        anchor = cell_or_anchor.shape.centroid
    else:
        anchor = np.asarray(cell_or_anchor, dtype=float)
    gx = gy = const = 0.0
    for i in range(polygon.n):
        a, b, c = edge_line(polygon, i)
        s = 1.0 if a * anchor[0] + b * anchor[1] + c > 0 else -1.0
        gx += s * a
        gy += s * b
        const += s * c
    return AffineFunctional2(gx, gy, const, terms=polygon.n)


def _line_values(lines, pts: np.ndarray) -> np.ndarray:
    arr = np.asarray(lines, dtype=float)
    return pts @ arr[:, :2].T + arr[:, 2]


def _shared_segment(
    cell_a: Polygon, cell_b: Polygon, line: Line, eps: float
) -> tuple[np.ndarray, np.ndarray] | None:
    """Overlap of the two cells' traces on a line, if positive length."""
    a, b, _ = line
    direction = np.array([-b, a])
    intervals = []
    for cell in (cell_a, cell_b):
        vals = _line_values([line], cell.vertices)[:, 0]
        on = cell.vertices[np.abs(vals) <= eps]
        if len(on) < 2:
            return None
        params = on @ direction
        intervals.append((params.min(), params.max(), on))
    lo = max(intervals[0][0], intervals[1][0])
    hi = min(intervals[0][1], intervals[1][1])
    if hi - lo <= eps:
        return None
    # reconstruct endpoints from parameters on the shared line
    anchor_vals = intervals[0][2][0]
    base = anchor_vals - (anchor_vals @ direction) * direction
    return base + lo * direction, base + hi * direction


def partition(polygon: Polygon, tol: float = DEFAULT_TOL) -> Partition:
    """Decompose a concave polygon into convex cells with sign vectors."""
    report = is_convex(polygon, tol)
    if report.verdict is not Convexity.CONCAVE:
        raise NotConcave(
            "partition applies to concave polygons; convex polygons carry a "
            "single affine V"
        )
    lines, edge_to_line = distinct_lines(polygon, tol)
    scale = max(1.0, polygon.bbox_diagonal)
    eps = tol * scale
    area_eps = 1e-12 * scale**2

    x0, y0, x1, y1 = polygon.bounds
    margin = 0.05 * scale
    loops = [
        np.array(
            [
                [x0 - margin, y0 - margin],
                [x1 + margin, y0 - margin],
                [x1 + margin, y1 + margin],
                [x0 - margin, y1 + margin],
            ]
        )
    ]
    for line in lines:
        next_loops = []
        for loop in loops:
            for side in (1, -1):
                piece = _clip_halfplane(loop, line, side, eps)
                if piece is None:
                    continue
                piece = _clean_loop(piece, tol)
                if len(piece) >= 3 and _loop_area(piece) > area_eps:
                    next_loops.append(piece)
        loops = next_loops

    shapes: list[Polygon] = []
    for loop in loops:
        try:
            cell = Polygon(loop, tol=tol)
        except DegenerateInput:
            continue
        if polygon.contains(cell.centroid, tol) is Containment.INSIDE:
            shapes.append(cell)

    def signs_of(cell: Polygon) -> SignVector:
        vals = _line_values(lines, np.atleast_2d(cell.centroid))[0]
        return SignVector(tuple(1 if v > 0 else -1 for v in vals))

    sign_vectors = [signs_of(s) for s in shapes]

    # Defensive merge pass: union adjacent cells with identical sign vectors
    # (structurally unreachable for a full line arrangement, where adjacent
    # cells sit on opposite sides of the separating line).
    merge_notes: list[str] = []
    merged = True
    while merged:
        merged = False
        for i in range(len(shapes)):
            for j in range(i + 1, len(shapes)):
                if sign_vectors[i] != sign_vectors[j]:
                    continue
                touching = any(
                    _shared_segment(shapes[i], shapes[j], ln, eps) for ln in lines
                )
                if not touching:
                    continue
                hull = _convex_hull(
                    np.vstack([shapes[i].vertices, shapes[j].vertices])
                )
                union_area = shapes[i].area + shapes[j].area
                if abs(_loop_area(hull) - union_area) <= 1e-9 * union_area:
                    shapes[i] = Polygon(_clean_loop(hull, tol), tol=tol)
                    sign_vectors[i] = signs_of(shapes[i])
                    del shapes[j], sign_vectors[j]
                    merged = True
                else:
                    merge_notes.append(
                        f"same-sign cells {i},{j} left unmerged: union not convex"
                    )
                break
            if merged:
                break

    order = sorted(
        range(len(shapes)),
        key=lambda k: (float(shapes[k].centroid[0]), float(shapes[k].centroid[1])),
    )
    shapes = [shapes[k] for k in order]
    sign_vectors = [sign_vectors[k] for k in order]

    cells = [
        PartitionCell(
            shape=s,
            sign_vector=sv,
            functional=cell_functional(polygon, s.centroid, tol),
        )
        for s, sv in zip(shapes, sign_vectors)
    ]

    adjacency: list[Adjacency] = []
    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            diff = cells[i].sign_vector.diff_indices(cells[j].sign_vector)
            if len(diff) != 1:
                continue
            seg = _shared_segment(cells[i].shape, cells[j].shape, lines[diff[0]], eps)
            if seg is None:
                continue
            adjacency.append(
                Adjacency(
                    i,
                    j,
                    diff[0],
                    (tuple(map(float, seg[0])), tuple(map(float, seg[1]))),
                )
            )

    return Partition(
        polygon=polygon,
        lines=lines,
        edge_to_line=edge_to_line,
        cells=cells,
        adjacency=adjacency,
        merge_notes=merge_notes,
    )


def neighbor_check(part: Partition, tol: float = DEFAULT_TOL) -> NeighborReport:
    """Validate the one-sign-difference structure of neighboring cells.

    For each adjacent pair: the sign vectors differ in exactly the flipped
    line's slot, and the difference of the two cell functionals equals
    +/- 2 * (number of edges on that line) * the line's coefficients.
    """
    violations: list[str] = []
    for adj in part.adjacency:
        ci, cj = part.cells[adj.i], part.cells[adj.j]
        diff = ci.sign_vector.diff_indices(cj.sign_vector)
        if diff != (adj.line_index,):
            violations.append(
                f"cells {adj.i},{adj.j}: sign vectors differ at {diff}, "
                f"expected only line {adj.line_index}"
            )
            continue
        k = sum(1 for e in part.edge_to_line if e == adj.line_index)
        sigma = ci.sign_vector.signs[adj.line_index]
        a, b, c = part.lines[adj.line_index]
        expect = 2.0 * k * sigma * np.array([a, b, c])
        got = np.array(
            [
                ci.functional.gx - cj.functional.gx,
                ci.functional.gy - cj.functional.gy,
                ci.functional.constant - cj.functional.constant,
            ]
        )
        scale = max(1.0, float(np.abs(expect).max()))
        if np.abs(got - expect).max() > 1e-12 * 10 * scale * part.polygon.n:
            violations.append(
                f"cells {adj.i},{adj.j}: functional difference {got.tolist()} "
                f"!= flipped-line term {expect.tolist()}"
            )
    return NeighborReport(
        valid=not violations, violations=violations, pairs_checked=len(part.adjacency)
    )


def _isosum_direction(f: AffineFunctional2, fallback: np.ndarray) -> np.ndarray:
    cls = classify(f)
    if cls.is_cvs:
        return fallback / np.linalg.norm(fallback)
    return np.array(cls.direction)


def equal_sum_triple(
    polygon: Polygon, tol: float = DEFAULT_TOL, part: Partition | None = None
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """A non-collinear interior triple with equal distance sums.

    Takes the midpoint of a shared cell edge and walks into each neighboring
    cell along that cell's isosum direction, keeping V fixed while leaving
    the line, so the three direct sums agree although no single affine
    expression covers all three points.
    """
    if part is None:
        part = partition(polygon, tol)
    if not part.adjacency:
        raise NoInteriorEdge("partition has no adjacent cell pair")
    diag = polygon.bbox_diagonal

    for adj in part.adjacency:
        p = adj.midpoint
        seg = np.array(adj.segment[1]) - np.array(adj.segment[0])
        edge_normal = np.array([-seg[1], seg[0]])
        offsets = []
        ok = True
        for idx in (adj.i, adj.j):
            cell = part.cells[idx]
            direction = _isosum_direction(cell.functional, edge_normal)
            inradius = min(
                carrier_distances(cell.shape, [cell.shape.centroid])[0].min(), diag
            )
            t = 1e-3 * max(inradius, tol)
            q = None
            while t > tol * 1e-3:
                for s in (1.0, -1.0):
                    cand = p + s * t * direction
                    if cell.shape.contains(cand, tol) is Containment.INSIDE:
                        q = cand
                        break
                if q is not None:
                    break
                t /= 2.0
            if q is None:
                ok = False
                break
            offsets.append(q)
        if not ok:
            continue
        q1, q2 = offsets
        totals = carrier_distances(polygon, [p, q1, q2]).sum(axis=1)
        u, w = q1 - p, q2 - p
        area = 0.5 * abs(u[0] * w[1] - u[1] * w[0])
        if (
            totals.max() - totals.min() <= tol * (1.0 + totals.max())
            and area > 1e-12 * diag**2
        ):
            return p, q1, q2
    raise NoInteriorEdge("no adjacency produced a valid equal-sum triple")

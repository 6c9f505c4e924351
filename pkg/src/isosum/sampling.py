"""Deterministic interior-point sampling for Monte-Carlo oracle checks.

Sample ``i`` is derived from ``seed + i`` through a counter-based bit mixer
(splitmix64), so the result is independent of evaluation order, batching and
thread count: re-running with the same seed always yields the same points.
"""

from __future__ import annotations

import numpy as np

from .geometry import Containment, Polygon
from .polyhedra import Polyhedron

_GAMMA = np.uint64(0x9E3779B97F4A7C15)


def _splitmix64(x: np.ndarray) -> np.ndarray:
    z = (x + _GAMMA).astype(np.uint64)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def _unit_floats(seed: int, index: np.ndarray, round_: int, dim: int) -> np.ndarray:
    """Uniform values in [0, 1) keyed by (seed, sample index, round, axis)."""
    # scalar parts folded in Python ints to avoid uint64 scalar-overflow noise
    key = _splitmix64(np.uint64(seed % 2**64) + index.astype(np.uint64))
    offset = np.uint64((round_ * 0x9E3779B97F4A7C15 + dim) % 2**64)
    word = _splitmix64(key + offset)
    return (word >> np.uint64(11)).astype(np.float64) * 2.0**-53


def sample_interior_polygon(
    polygon: Polygon, n: int, seed: int, max_rounds: int = 10_000
) -> np.ndarray:
    """n points strictly inside the polygon, rejection-sampled in its bbox."""
    x0, y0, x1, y1 = polygon.bounds
    pts = np.empty((n, 2))
    pending = np.arange(n)
    for r in range(max_rounds):
        if len(pending) == 0:
            return pts
        u = _unit_floats(seed, pending, r, 0)
        v = _unit_floats(seed, pending, r, 1)
        cand = np.column_stack([x0 + u * (x1 - x0), y0 + v * (y1 - y0)])
        ok = polygon.contains_batch(cand) == Containment.INSIDE
        pts[pending[ok]] = cand[ok]
        pending = pending[~ok]
    raise RuntimeError("interior sampling did not converge")


def sample_interior_polyhedron(
    poly: Polyhedron, n: int, seed: int, max_rounds: int = 10_000
) -> np.ndarray:
    lo, hi = poly.bounds
    pts = np.empty((n, 3))
    pending = np.arange(n)
    for r in range(max_rounds):
        if len(pending) == 0:
            return pts
        u = np.column_stack([_unit_floats(seed, pending, r, d) for d in range(3)])
        cand = lo + u * (hi - lo)
        ok = poly.contains_batch(cand) == Containment.INSIDE
        pts[pending[ok]] = cand[ok]
        pending = pending[~ok]
    raise RuntimeError("interior sampling did not converge")

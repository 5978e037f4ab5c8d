"""Planar convex geometry over complex points.

Numerical ranges of even-order square tensors are convex, so every
set-level statement about them reduces to polygon geometry on sampled
boundary points.  Hulls may degenerate to segments or single points
(normal operators with collinear spectra do this routinely), and all
predicates handle those cases.  Internals are vectorized: swept
boundaries carry hundreds of vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ShapeError

__all__ = [
    "Hull2D",
    "hull_of",
    "hull_contains",
    "hulls_intersect",
    "hull_hausdorff",
    "distance_to_hull",
    "boundary_distance",
    "scale_hull",
    "convexity_defect",
]


@dataclass(frozen=True)
class Hull2D:
    """Convex hull: counterclockwise vertices, no three collinear.

    One vertex encodes a point, two a segment.
    """

    vertices: tuple[complex, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def points(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=np.complex128)


def _cross(o: complex, a: complex, b: complex) -> float:
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (
        b.real - o.real
    )


def hull_of(points: Iterable[complex]) -> Hull2D:
    """Monotone-chain convex hull with strict turns (collinear points drop)."""
    pts = sorted({(float(z.real), float(z.imag)) for z in map(complex, points)})
    if not pts:
        raise ShapeError("hull of empty point set")
    unique = [complex(x, y) for x, y in pts]
    if len(unique) == 1:
        return Hull2D((unique[0],))
    lower: list[complex] = []
    for p in unique:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[complex] = []
    for p in reversed(unique):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    verts = lower[:-1] + upper[:-1]
    if len(verts) < 2:
        # all points collinear: keep the two extremes
        return Hull2D((unique[0], unique[-1]))
    return Hull2D(tuple(verts))


def _edges(h: Hull2D) -> tuple[np.ndarray, np.ndarray]:
    v = h.points
    return v, np.roll(v, -1)


def _segment_distances(points: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Distances from each point to each segment: shape (P, E)."""
    d = b - a
    dd = np.abs(d) ** 2
    dd = np.where(dd == 0.0, 1.0, dd)
    rel = points[:, None] - a[None, :]
    t = (rel.real * d.real[None, :] + rel.imag * d.imag[None, :]) / dd[None, :]
    t = np.clip(t, 0.0, 1.0)
    return np.abs(rel - t * d[None, :])


def _boundary_distances(h: Hull2D, points: np.ndarray) -> np.ndarray:
    v = h.points
    if len(v) == 1:
        return np.abs(points - v[0])
    a, b = _edges(h)
    if len(v) == 2:
        a, b = a[:1], b[:1]
    return _segment_distances(points, a, b).min(axis=1)


def _set_distances(h: Hull2D, points: np.ndarray) -> np.ndarray:
    """Distance to the hull as a set: 0 inside, boundary gap outside."""
    dist = _boundary_distances(h, points)
    v = h.points
    if len(v) >= 3:
        a, b = _edges(h)
        rel = points[:, None]
        cross = (b - a).real[None, :] * (rel - a[None, :]).imag - (
            b - a
        ).imag[None, :] * (rel - a[None, :]).real
        inside = (cross >= 0.0).all(axis=1)
        dist = np.where(inside, 0.0, dist)
    return dist


def boundary_distance(h: Hull2D, z: complex) -> float:
    """Distance from z to the hull's boundary polyline."""
    return float(_boundary_distances(h, np.asarray([complex(z)]))[0])


def distance_to_hull(h: Hull2D, z: complex) -> float:
    """Distance from z to the hull as a set: 0 inside, else boundary gap."""
    return float(_set_distances(h, np.asarray([complex(z)]))[0])


def hull_contains(h: Hull2D, z: complex, tol: float = 0.0) -> bool:
    """Membership in the hull dilated by tol."""
    return distance_to_hull(h, complex(z)) <= tol


def _axes_of(h: Hull2D) -> np.ndarray:
    v = h.points
    if len(v) == 1:
        return np.zeros(0, dtype=np.complex128)
    a, b = _edges(h)
    if len(v) == 2:
        a, b = a[:1], b[:1]
    d = b - a
    d = d[np.abs(d) > 0]
    d = d / np.abs(d)
    # edge normals plus edge directions (directions cover collinear segments)
    return np.concatenate([d * 1j, d])


def hulls_intersect(h1: Hull2D, h2: Hull2D, tol: float = 0.0) -> bool:
    """Separating-axis test between two convex hulls, dilated by tol."""
    if len(h1) == 1 and len(h2) == 1:
        return abs(h1.vertices[0] - h2.vertices[0]) <= tol
    if len(h1) == 1:
        return hull_contains(h2, h1.vertices[0], tol)
    if len(h2) == 1:
        return hull_contains(h1, h2.vertices[0], tol)
    axes = np.concatenate([_axes_of(h1), _axes_of(h2)])
    p1 = (h1.points[None, :] * axes.conj()[:, None]).real
    p2 = (h2.points[None, :] * axes.conj()[:, None]).real
    separated = (p1.max(axis=1) < p2.min(axis=1) - tol) | (
        p2.max(axis=1) < p1.min(axis=1) - tol
    )
    return not bool(separated.any())


def hull_hausdorff(h1: Hull2D, h2: Hull2D) -> float:
    """Hausdorff distance between the hulls as convex sets.

    The distance-to-set function is convex, so its maximum over a convex
    set is attained at a vertex; scanning vertices is exact.
    """
    d12 = float(_set_distances(h2, h1.points).max())
    d21 = float(_set_distances(h1, h2.points).max())
    return max(d12, d21)


def scale_hull(h: Hull2D, factor: complex) -> Hull2D:
    """Hull scaled about the origin (complex factor rotates and scales)."""
    pts = [complex(factor) * v for v in h.vertices]
    if len(pts) <= 2:
        return Hull2D(tuple(pts))
    return hull_of(pts)


def convexity_defect(points: Sequence[complex]) -> float:
    """Largest clockwise-turn magnitude along the polygon of the given
    ordered points; ~0 certifies a convex, correctly ordered boundary."""
    pts = [complex(z) for z in points]
    n = len(pts)
    if n < 3:
        return 0.0
    worst = 0.0
    for k in range(n):
        c = _cross(pts[k], pts[(k + 1) % n], pts[(k + 2) % n])
        if c < 0:
            worst = max(worst, -c)
    return worst

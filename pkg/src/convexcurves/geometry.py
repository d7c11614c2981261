"""Planar convex polygons: hulls, perimeters, diameters and support queries.

Points are length-2 float arrays (or anything ``np.asarray`` turns into
one); vertex lists are ``(n, 2)`` arrays. Directions are plain angles in
radians.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
import math
from typing import Any, Sequence

import numpy as np

from .errors import DegenerateInput, InvalidShape

COLLAPSE_TOL = 1e-12
CONTAINMENT_TOL = 1e-12

# Shewchuk's ccwerrboundA; beyond it the float sign of orient2d is certain.
_ORIENT_ERRBOUND = (3.0 + 16.0 * 2.0**-53) * 2.0**-53


def orient2d(a, b, c) -> int:
    """Sign of the turn a -> b -> c: +1 left (ccw), -1 right, 0 collinear.

    Uses a float filter and falls back to exact rational arithmetic when the
    floating-point determinant is too small to trust.
    """
    detleft = (a[0] - c[0]) * (b[1] - c[1])
    detright = (a[1] - c[1]) * (b[0] - c[0])
    det = detleft - detright
    bound = _ORIENT_ERRBOUND * (abs(detleft) + abs(detright))
    if det > bound:
        return 1
    if -det > bound:
        return -1
    ax, ay, bx, by, cx, cy = (Fraction(float(v)) for v in (a[0], a[1], b[0], b[1], c[0], c[1]))
    exact = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx)
    return (exact > 0) - (exact < 0)


def normalize_angle(angle: float) -> float:
    """Map an angle to [0, 2*pi)."""
    a = math.fmod(angle, 2.0 * math.pi)
    if a < 0.0:
        a += 2.0 * math.pi
    if a >= 2.0 * math.pi:
        a = 0.0
    return a


def unit(angle: float) -> np.ndarray:
    return np.array([math.cos(angle), math.sin(angle)])


def _cross(u, v):
    return u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]


@dataclass(frozen=True)
class Polyline:
    """Ordered sequence of points; closed curves repeat their first point."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.array(self.points, dtype=float).reshape(-1, 2)
        if len(pts) < 1:
            raise ValueError("a polyline needs at least one point")
        if not np.all(np.isfinite(pts)):
            raise ValueError("polyline coordinates must be finite")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    @property
    def is_closed(self) -> bool:
        return len(self.points) > 2 and bool(np.array_equal(self.points[0], self.points[-1]))

    @property
    def length(self) -> float:
        if len(self.points) < 2:
            return 0.0
        return float(np.sum(np.hypot(*np.diff(self.points, axis=0).T)))

    def closed(self) -> "Polyline":
        """Copy with the first point appended when not already closed."""
        if self.is_closed:
            return self
        return Polyline(np.vstack([self.points, self.points[:1]]))


def _clean_vertices(v: np.ndarray, tol: float) -> np.ndarray:
    """Drop near-duplicate and near-collinear vertices of a ccw polygon."""
    scale = float(np.max(np.ptp(v, axis=0))) if len(v) else 0.0
    if scale <= 0.0:
        raise InvalidShape("polygon has zero extent")
    dup_tol = tol * scale
    keep = [0]
    for i in range(1, len(v)):
        if np.hypot(*(v[i] - v[keep[-1]])) > dup_tol:
            keep.append(i)
    if len(keep) > 1 and np.hypot(*(v[keep[-1]] - v[keep[0]])) <= dup_tol:
        keep.pop()
    v = v[keep]
    cross_tol = tol * scale * scale
    while len(v) >= 3:
        e_in = v - np.roll(v, 1, axis=0)
        e_out = np.roll(v, -1, axis=0) - v
        cr = _cross(e_in, e_out)
        if np.any(cr < -cross_tol):
            raise InvalidShape("vertices are not in convex counterclockwise position")
        flat = np.flatnonzero(cr <= cross_tol)
        if len(flat) == 0:
            break
        # remove non-adjacent flat vertices per pass; neighbours are re-tested next pass
        drop = []
        for i in flat:
            if drop and (i - drop[-1] == 1):
                continue
            if drop and i == len(v) - 1 and drop[0] == 0:
                continue
            drop.append(i)
        v = np.delete(v, drop, axis=0)
    return v


@dataclass(frozen=True)
class ConvexShape:
    """A convex polygon with counterclockwise, strictly convex vertices.

    Near-duplicate vertices and vertices whose turn is below
    ``collapse_tol * scale**2`` are removed on construction, so every
    remaining vertex is an extreme point. ``source`` records where the
    polygon came from: a :class:`~convexcurves.shapes.ShapeSpec` for
    discretized smooth shapes, otherwise ``"raw"``.
    """

    vertices: np.ndarray
    source: Any = "raw"
    collapse_tol: float = field(default=COLLAPSE_TOL, repr=False, compare=False)

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float).reshape(-1, 2)
        if not np.all(np.isfinite(v)):
            raise InvalidShape("vertex coordinates must be finite")
        if len(v) < 3:
            raise InvalidShape("a convex shape needs at least 3 vertices")
        if _shoelace(v) <= 0.0:
            raise InvalidShape("vertices must be listed counterclockwise")
        v = _clean_vertices(v, self.collapse_tol)
        if len(v) < 3 or _shoelace(v) <= 0.0:
            raise InvalidShape("polygon has empty interior")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    def __len__(self):
        return len(self.vertices)

    @cached_property
    def edges(self) -> np.ndarray:
        return np.roll(self.vertices, -1, axis=0) - self.vertices

    @cached_property
    def edge_lengths(self) -> np.ndarray:
        return np.hypot(self.edges[:, 0], self.edges[:, 1])

    @cached_property
    def perimeter(self) -> float:
        return float(math.fsum(self.edge_lengths))

    @cached_property
    def area(self) -> float:
        return _shoelace(self.vertices)

    @cached_property
    def scale(self) -> float:
        """Largest bounding-box extent, used to make tolerances relative."""
        return float(np.max(np.ptp(self.vertices, axis=0)))

    @cached_property
    def centroid(self) -> np.ndarray:
        v = self.vertices
        w = np.roll(v, -1, axis=0)
        cr = _cross(v, w)
        a = cr.sum() / 2.0
        return np.array([((v[:, 0] + w[:, 0]) * cr).sum(), ((v[:, 1] + w[:, 1]) * cr).sum()]) / (6.0 * a)

    @cached_property
    def cumulative_length(self) -> np.ndarray:
        """Arc length from vertex 0 to each vertex, with the perimeter appended."""
        return np.concatenate([[0.0], np.cumsum(self.edge_lengths)])

    def boundary(self) -> Polyline:
        """Closed boundary traversal starting and ending at vertex 0."""
        return Polyline(np.vstack([self.vertices, self.vertices[:1]]))

    def point_at(self, s) -> np.ndarray:
        """Boundary point(s) at arc length ``s`` from vertex 0, counterclockwise."""
        s = np.mod(np.asarray(s, dtype=float), self.cumulative_length[-1])
        idx = np.searchsorted(self.cumulative_length, s, side="right") - 1
        idx = np.clip(idx, 0, len(self.vertices) - 1)
        t = (s - self.cumulative_length[idx]) / self.edge_lengths[idx]
        return self.vertices[idx] + t[..., None] * self.edges[idx]

    def arc_position(self, p) -> float:
        """Arc-length coordinate of a boundary point (nearest edge projection)."""
        p = np.asarray(p, dtype=float)
        rel = p - self.vertices
        t = np.clip(np.einsum("ij,ij->i", rel, self.edges) / self.edge_lengths**2, 0.0, 1.0)
        d = np.hypot(*(rel - t[:, None] * self.edges).T)
        i = int(np.argmin(d))
        return float(self.cumulative_length[i] + t[i] * self.edge_lengths[i])

    def distance_to_boundary(self, p) -> float:
        p = np.asarray(p, dtype=float)
        rel = p - self.vertices
        t = np.clip(np.einsum("ij,ij->i", rel, self.edges) / self.edge_lengths**2, 0.0, 1.0)
        return float(np.min(np.hypot(*(rel - t[:, None] * self.edges).T)))

    def signed_distances(self, points) -> np.ndarray:
        """Signed distance of each point to each edge line, shape ``(m, n)``.

        Positive means on the inner side of that edge.
        """
        pts = np.asarray(points, dtype=float).reshape(-1, 2)
        rel = pts[:, None, :] - self.vertices[None, :, :]
        return _cross(self.edges[None, :, :], rel) / self.edge_lengths[None, :]

    def contains_point(self, p, tol: float = CONTAINMENT_TOL) -> bool:
        return bool(np.all(self.signed_distances(p) >= -tol))

    def translated(self, offset) -> "ConvexShape":
        return ConvexShape(self.vertices + np.asarray(offset, dtype=float), self.source, self.collapse_tol)

    def scaled(self, factor: float, center=None) -> "ConvexShape":
        c = self.centroid if center is None else np.asarray(center, dtype=float)
        return ConvexShape(c + factor * (self.vertices - c), self.source, self.collapse_tol)

    def rotated(self, angle: float, center=(0.0, 0.0)) -> "ConvexShape":
        c = np.asarray(center, dtype=float)
        r = np.array([[math.cos(angle), -math.sin(angle)], [math.sin(angle), math.cos(angle)]])
        return ConvexShape(c + (self.vertices - c) @ r.T, self.source, self.collapse_tol)


def _shoelace(v: np.ndarray) -> float:
    w = np.roll(v, -1, axis=0)
    return float(np.sum(_cross(v, w)) / 2.0)


def convex_hull(points: Sequence, source: Any = "raw") -> ConvexShape:
    """Convex hull by Andrew's monotone chain with an exact orientation test.

    Collinear boundary points are dropped. Raises :class:`DegenerateInput`
    when fewer than three distinct points remain or all are collinear.
    """
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if not np.all(np.isfinite(pts)):
        raise DegenerateInput("non-finite coordinates")
    uniq = sorted(set(map(tuple, pts.tolist())))
    if len(uniq) < 3:
        raise DegenerateInput("fewer than 3 distinct points")

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orient2d(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(uniq)
    upper = chain(reversed(uniq))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("all points are collinear")
    return ConvexShape(np.array(hull), source)


def perimeter(shape: ConvexShape) -> float:
    return shape.perimeter


@dataclass(frozen=True)
class DiameterResult:
    endpoints: tuple
    length: float
    indices: tuple = ()


def diameter(shape: ConvexShape) -> DiameterResult:
    """Farthest vertex pair of ``shape``; computed once per shape and cached."""
    res = shape.__dict__.get("_diameter")
    if res is None:
        res = _calipers_diameter(shape)
        shape.__dict__["_diameter"] = res
    return DiameterResult((res.endpoints[0].copy(), res.endpoints[1].copy()), res.length, res.indices)


def _calipers_diameter(shape: ConvexShape) -> DiameterResult:
    """Farthest vertex pair by rotating calipers.

    Every antipodal pair (and its neighbours, to absorb rounding when edges
    are nearly parallel) is scored; ties go to the lexicographically smallest
    index pair.
    """
    v = shape.vertices
    n = len(v)
    e = shape.edges
    candidates = set()
    j = 1
    for i in range(n):
        # advance j while the next vertex is farther from edge line i
        while _cross(e[i], v[(j + 1) % n] - v[j]) > 0.0:
            j = (j + 1) % n
        for a in (i, (i + 1) % n):
            for b in (j - 1, j, j + 1):
                b %= n
                if a != b:
                    candidates.add((min(a, b), max(a, b)))
    best = None
    best_d2 = -1.0
    for a, b in sorted(candidates):
        dx = v[a, 0] - v[b, 0]
        dy = v[a, 1] - v[b, 1]
        d2 = dx * dx + dy * dy
        if d2 > best_d2:
            best_d2 = d2
            best = (a, b)
    a, b = best
    return DiameterResult((v[a].copy(), v[b].copy()), math.sqrt(best_d2), (a, b))


def support_point(shape: ConvexShape, normal: float) -> np.ndarray:
    """Vertex maximizing the inner product with the unit outer normal at ``normal``.

    Ties go to the lowest vertex index.
    """
    return shape.vertices[support_index(shape, normal)].copy()


def support_index(shape: ConvexShape, normal: float) -> int:
    u = unit(normalize_angle(normal))
    return int(np.argmax(shape.vertices @ u))


def boundary_line_intersections(shape: ConvexShape, point, direction) -> list:
    """Points where the line ``point + t * direction`` meets the boundary.

    Returns 0, 1 or 2 points ordered along ``direction``. A line through a
    vertex reports it once; a line containing an edge reports the edge's
    endpoints.
    """
    p = np.asarray(point, dtype=float)
    d = np.asarray(direction, dtype=float)
    d = d / math.hypot(*d)
    v = shape.vertices
    s = _cross(d[None, :], v - p[None, :])
    n = len(v)
    hits = []
    for i in range(n):
        j = (i + 1) % n
        if s[i] == 0.0:
            hits.append(v[i].copy())
        if (s[i] < 0.0 < s[j]) or (s[j] < 0.0 < s[i]):
            t = s[i] / (s[i] - s[j])
            hits.append(v[i] + t * (v[j] - v[i]))
    if not hits:
        return []
    hits = np.array(hits)
    proj = (hits - p) @ d
    order = np.argsort(proj, kind="stable")
    hits, proj = hits[order], proj[order]
    tol = 1e-12 * shape.scale
    if proj[-1] - proj[0] <= tol:
        return [hits[0]]
    return [hits[0], hits[-1]]


def contains_shape(outer: ConvexShape, inner: ConvexShape, tol: float = CONTAINMENT_TOL) -> bool:
    """True iff every vertex of ``inner`` lies in ``outer`` up to ``tol`` signed distance."""
    return bool(np.all(outer.signed_distances(inner.vertices) >= -tol))


def contains_points(outer: ConvexShape, points, tol: float = CONTAINMENT_TOL) -> bool:
    return bool(np.all(outer.signed_distances(points) >= -tol))

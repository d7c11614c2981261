"""Point selections on convex shapes that force long curves.

``four_point_construction`` picks a diameter ``ab`` and the two points where
its perpendicular bisector leaves the shape; any path through those four
points is at least half the perimeter. ``support_normal_selection`` picks
extreme points with evenly spaced outer normals, and ``equal_arc_polygon``
splits the boundary into equal arcs.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from .errors import DegenerateShape
from .geometry import ConvexShape, boundary_line_intersections, diameter, support_index


@dataclass(frozen=True)
class FourPointWitness:
    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray
    o: np.ndarray
    len_ab: float
    len_cd: float

    @property
    def points(self) -> np.ndarray:
        """The four points in the order a, b, c, d."""
        return np.array([self.a, self.b, self.c, self.d])

    @property
    def len_ad(self) -> float:
        return math.dist(self.a, self.d)

    @property
    def len_ac(self) -> float:
        return math.dist(self.a, self.c)


def four_point_construction(shape: ConvexShape) -> FourPointWitness:
    """Diameter endpoints a, b and bisector exits c, d with ``|co| >= |do|``."""
    diam = diameter(shape)
    a, b = diam.endpoints
    o = 0.5 * (a + b)
    ab = b - a
    hits = boundary_line_intersections(shape, o, (-ab[1], ab[0]))
    if len(hits) != 2:
        raise DegenerateShape("perpendicular bisector of the diameter must cross the boundary twice")
    c, d = hits
    if math.dist(c, o) < math.dist(d, o):
        c, d = d, c
    return FourPointWitness(a, b, c, d, o, diam.length, math.dist(c, d))


def double_perimeter_bound(w: FourPointWitness) -> float:
    """``2|ab| + 2|cd|``, which strictly exceeds the perimeter."""
    return 2.0 * w.len_ab + 2.0 * w.len_cd


@dataclass(frozen=True)
class SupportSelection:
    points: np.ndarray
    normals: np.ndarray
    indices: tuple
    polygon_perimeter: float

    @property
    def distinct_points(self) -> np.ndarray:
        """Selected vertices with consecutive repeats collapsed, in cyclic order."""
        keep = [i for i in range(len(self.indices)) if self.indices[i] != self.indices[i - 1]]
        if not keep:
            keep = [0]
        return self.points[keep]


def support_normal_selection(shape: ConvexShape, n: int, offset: float = 0.0) -> SupportSelection:
    """Extreme points ``v_i`` supporting outer normals at ``offset + 2*pi*i/n``, i = 1..n.

    A vertex may be chosen for several normals. ``polygon_perimeter`` is the
    cyclic length ``sum |v_i v_{i+1}|``, which ignores repeats.
    """
    if n < 3:
        raise ValueError("support selection needs n >= 3")
    normals = np.array([offset + 2.0 * math.pi * i / n for i in range(1, n + 1)])
    idx = tuple(support_index(shape, float(t)) for t in normals)
    pts = shape.vertices[list(idx)]
    nxt = np.roll(pts, -1, axis=0)
    per = math.fsum(np.hypot(*(nxt - pts).T))
    return SupportSelection(pts, np.mod(normals, 2.0 * math.pi), idx, per)


def equal_arc_points(shape: ConvexShape, n: int, anchor: float = 0.0) -> np.ndarray:
    """``n`` boundary points at arc lengths ``anchor + i * per/n`` from vertex 0."""
    if n < 3:
        raise ValueError("equal-arc polygon needs n >= 3")
    s = anchor + shape.perimeter * np.arange(n) / n
    return shape.point_at(s)


def equal_arc_polygon(shape: ConvexShape, n: int, anchor: float = 0.0) -> ConvexShape:
    """Inscribed polygon whose vertices cut the boundary into ``n`` equal arcs.

    Points landing on a common edge are collinear and collapse, which leaves
    the perimeter unchanged.
    """
    return ConvexShape(equal_arc_points(shape, n, anchor), "raw")

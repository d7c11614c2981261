"""Explicit shapes on which boundary-point curves stay short, with their closed-form bounds.

* the 1 x L rectangle, where a comb path of length ``L + n`` visits any
  ``n`` boundary points;
* the thin lens, where the best three points are the corners and an arc
  midpoint;
* the half-ellipse ``E_k``, where every chain through ``n`` arc points is
  shorter than half the perimeter once ``k`` is small;
* a pair of nested deltoids on which ``per - diam`` decreases.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
import math

import numpy as np

from .errors import NotThin, OrderViolation
from .geometry import ConvexShape, DiameterResult, Polyline, contains_shape, diameter
from .reports import CheckReport
from .shapes import THIN_HALF_ANGLE, ShapeSpec, deltoid_vertices, discretize, half_ellipse_perimeter


@dataclass(frozen=True)
class RectangleWitness:
    shape: ConvexShape
    points: np.ndarray
    path: Polyline
    half_perimeter: float
    L: float

    @property
    def ratio(self) -> float:
        return self.path.length / self.half_perimeter


def make_rectangle_witness(L: float, n: int) -> RectangleWitness:
    """``n`` points alternating between the long sides of ``[0, L] x [0, 1]``.

    The comb path runs along the midline ``y = 1/2`` and makes a detour of
    length 1 to each point, so its length is exactly ``L + n``.
    """
    if not L > 1.0 or n < 2:
        raise ValueError("rectangle witness needs L > 1 and n >= 2")
    xs = L * np.arange(n) / (n - 1)
    ys = np.arange(n) % 2
    points = np.column_stack([xs, ys.astype(float)])
    path = [(0.0, 0.5)]
    for x, y in points:
        if path[-1] != (x, 0.5):
            path.append((x, 0.5))
        path.extend([(x, y), (x, 0.5)])
    if path[-1] != (L, 0.5):
        path.append((L, 0.5))
    shape = discretize(ShapeSpec("rectangle", {"width": L, "height": 1.0}))
    return RectangleWitness(shape, points, Polyline(path), L + 1.0, float(L))


def make_lens(R: float, half_angle: float, thin: bool = True) -> ShapeSpec:
    """Lens of two circular segments of radius ``R`` on a common chord.

    ``half_angle`` is half of each arc's central angle, which is also the
    angle between the chord and the tangent at a corner; the full corner
    angle of the lens is ``2 * half_angle``.
    """
    if not (R > 0.0 and 0.0 < half_angle < math.pi / 2):
        raise ValueError("lens needs R > 0 and 0 < half_angle < pi/2")
    if thin and half_angle >= THIN_HALF_ANGLE:
        raise NotThin(f"half_angle {half_angle!r} is outside the thin regime")
    return ShapeSpec(
        "lens",
        {"chord_half": R * math.sin(half_angle), "sagitta": R * (1.0 - math.cos(half_angle))},
        thin=thin,
    )


@dataclass(frozen=True)
class LensGeometry:
    a: np.ndarray
    b: np.ndarray
    m_upper: np.ndarray
    m_lower: np.ndarray
    radius: float
    half_angle: float
    arc_length: float
    chord: float

    @property
    def perimeter(self) -> float:
        return 2.0 * self.arc_length

    @property
    def amb_length(self) -> float:
        """Length of the path a -> m -> b through an arc midpoint."""
        return 2.0 * math.dist(self.a, self.m_upper)


def lens_geometry(spec: ShapeSpec) -> LensGeometry:
    h, s = float(spec["chord_half"]), float(spec["sagitta"])
    r, alpha = spec.lens_radius, spec.lens_half_angle
    return LensGeometry(
        np.array([-h, 0.0]), np.array([h, 0.0]), np.array([0.0, s]), np.array([0.0, -s]),
        r, alpha, 2.0 * alpha * r, 2.0 * h,
    )


def make_half_ellipse(k: float) -> ShapeSpec:
    """Region under the arc ``(cos t, k sin t)``, ``0 <= t <= pi``, above its major axis."""
    return ShapeSpec("half_ellipse", {"k": k})


def arc_point(k: float, t):
    """Point(s) on the half-ellipse arc; ``t = 0`` is ``a = (-1, 0)``, ``t = 1`` is ``b = (1, 0)``."""
    ang = math.pi * (1.0 - np.asarray(t, dtype=float))
    return np.stack([np.cos(ang), k * np.sin(ang)], axis=-1)


def arc_parameter(p, k: float) -> float:
    """Inverse of :func:`arc_point`."""
    return 1.0 - math.atan2(p[1] / k, p[0]) / math.pi


def _sqrt1p_minus_1(k: float) -> float:
    # sqrt(1 + k^2) - 1 without cancellation
    return k * k / (math.hypot(1.0, k) + 1.0)


def small_sum_bound(k: float) -> float:
    """``2 sqrt(1 + k^2) - 2``: most a middle vertex can add to a chord."""
    return 2.0 * _sqrt1p_minus_1(k)


def chain_bound(k: float, n: int) -> float:
    """``2 (n - 2)(sqrt(1 + k^2) - 1) + 2``: longest possible chain through ``n`` arc points."""
    return 2.0 * (n - 2) * _sqrt1p_minus_1(k) + 2.0


def chain_length(points) -> float:
    """Length of the polygonal chain in the given order."""
    p = np.asarray(points, dtype=float)
    return float(np.sum(np.hypot(*np.diff(p, axis=0).T)))


def adding_vertex_excess(prev, mid, nxt, k: float, on_arc_tol: float = 1e-9) -> tuple:
    """``|prev mid| + |mid next| - |prev next|`` and its bound ``2 sqrt(1 + k^2) - 2``.

    All three points must lie on the half-ellipse arc with ``mid`` strictly
    between the others.
    """
    pts = [np.asarray(p, dtype=float) for p in (prev, mid, nxt)]
    for p in pts:
        if abs(p[0] ** 2 + (p[1] / k) ** 2 - 1.0) > on_arc_tol or p[1] < -on_arc_tol * k:
            raise OrderViolation(f"point {p.tolist()} is not on the half-ellipse arc")
    t0, t1, t2 = (arc_parameter(p, k) for p in pts)
    if not (min(t0, t2) < t1 < max(t0, t2)):
        raise OrderViolation("middle point is not between its neighbours along the arc")
    excess = math.dist(pts[0], pts[1]) + math.dist(pts[1], pts[2]) - math.dist(pts[0], pts[2])
    return excess, small_sum_bound(k)


@dataclass(frozen=True)
class HalfEllipseWitness:
    k: float
    n: int
    points: np.ndarray
    chain_length: float
    bound_small2: float
    bound_chain: float
    half_perimeter_exact: float


def make_half_ellipse_witness(k: float, n: int, params=None) -> HalfEllipseWitness:
    """Chain through ``n`` arc points; equally spaced in angle unless ``params`` given."""
    if n < 2:
        raise ValueError("need n >= 2")
    t = np.linspace(0.0, 1.0, n) if params is None else np.sort(np.asarray(params, dtype=float))
    if len(t) != n:
        raise ValueError("params must have n entries")
    pts = arc_point(k, t)
    return HalfEllipseWitness(
        k, n, pts, chain_length(pts), small_sum_bound(k), chain_bound(k, n), 0.5 * half_ellipse_perimeter(k)
    )


def chain_bound_check(w: HalfEllipseWitness, tol: float = 1e-12) -> CheckReport:
    """Chain length below the chain bound, and the chain bound below half the perimeter.

    Reported as ``bound_chain < half_perimeter_exact``; the report fails if
    either comparison fails.
    """
    rep = CheckReport.strictly_less(
        "CHAIN_BOUND", w.bound_chain, w.half_perimeter_exact, tol, n=w.n,
        shape_provenance=f"half_ellipse(k={w.k!r})",
        details={"chain_length": w.chain_length, "chain_ok": w.chain_length <= w.bound_chain + tol},
    )
    if w.chain_length > w.bound_chain + tol:
        rep = replace(rep, passed=False)
    return rep


def chain_threshold(k: float, n_max: int = 10**6) -> int | None:
    """Smallest ``n`` with ``chain_bound(k, n) >= per(E_k) / 2``, or None below ``n_max``.

    Grows like ``2 + log(1/k) / 2``. Both sides differ from 2 by O(k**2), so
    below ``k ~ 1e-6`` the comparison is dominated by rounding.
    """
    half = 0.5 * half_ellipse_perimeter(k)
    step = small_sum_bound(k)
    n = 2 + max(0, math.ceil((half - 2.0) / step) - 1)
    while n <= n_max:
        if chain_bound(k, n) >= half:
            return n
        n += 1
    return None


def sample_arc_configurations(n: int, count: int, rng) -> np.ndarray:
    """Arc parameters for ``count`` configurations of ``n`` points, sorted from a to b.

    Mixes uniform samples with adversarial ones clustered near ``a``, near
    the top of the arc, and equally spaced with jitter.
    """
    out = np.empty((count, n))
    kinds = np.arange(count) % 4
    u = rng.random((count, n))
    out[kinds == 0] = u[kinds == 0]
    out[kinds == 1] = u[kinds == 1] ** 6
    out[kinds == 2] = 0.5 + 0.02 * (u[kinds == 2] - 0.5)
    base = np.linspace(0.0, 1.0, n)
    jit = 0.5 / max(n - 1, 1) * (u[kinds == 3] - 0.5)
    out[kinds == 3] = np.clip(base + jit, 0.0, 1.0)
    out = np.sort(out, axis=1)
    if count:
        out[0] = base
    return out


@dataclass(frozen=True)
class DeltoidPair:
    quad_d: ConvexShape
    quad_dprime: ConvexShape
    values: tuple
    diameters: tuple


def per_minus_diam(shape: ConvexShape) -> float:
    return shape.perimeter - diameter(shape).length


def make_deltoid_pair() -> DeltoidPair:
    """Two nested deltoids over the unit equilateral triangle with ``per - diam`` reversed.

    ``abcd`` (axis 1, 150 degrees at d) sits inside ``abcd'`` (axis 2/sqrt(3),
    120 degrees at d') yet has the larger ``per - diam``.
    """
    small = ConvexShape(deltoid_vertices(1), ShapeSpec("deltoid_pair_member", {"index": 1}))
    big = ConvexShape(deltoid_vertices(2), ShapeSpec("deltoid_pair_member", {"index": 2}))
    ds: DiameterResult = diameter(small)
    db: DiameterResult = diameter(big)
    values = (small.perimeter - ds.length, big.perimeter - db.length)
    if not contains_shape(big, small):
        raise AssertionError("abcd must lie inside abcd'")
    if not values[0] > values[1]:
        raise AssertionError("per - diam must decrease from abcd to abcd'")
    return DeltoidPair(small, big, values, (ds.length, db.length))

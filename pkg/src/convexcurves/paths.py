"""Polyline lengths and exact shortest open paths through small point sets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import itertools
import math

import numpy as np

from .errors import DegenerateTriangle, TooManyPoints
from .geometry import Polyline

MAX_POINTS = 10


@dataclass(frozen=True)
class PathResult:
    order: tuple
    length: float
    polyline: Polyline


def path_length(line) -> float:
    if not isinstance(line, Polyline):
        line = Polyline(line)
    return line.length


@lru_cache(maxsize=None)
def _orders(n: int) -> np.ndarray:
    """All visiting orders of ``range(n)`` with first index below last, lexicographic."""
    if n == 1:
        return np.zeros((1, 1), dtype=np.int8)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8)
    perms = perms[perms[:, 0] < perms[:, -1]]
    perms.setflags(write=False)
    return perms


def distance_matrix(points) -> np.ndarray:
    p = np.asarray(points, dtype=float).reshape(-1, 2)
    diff = p[:, None, :] - p[None, :, :]
    return np.hypot(diff[..., 0], diff[..., 1])


def order_lengths(dist: np.ndarray, orders: np.ndarray) -> np.ndarray:
    """Open-path length of each row of ``orders`` under distance matrix ``dist``."""
    if orders.shape[1] < 2:
        return np.zeros(len(orders))
    total = np.zeros(len(orders))
    for i in range(orders.shape[1] - 1):
        total += dist[orders[:, i], orders[:, i + 1]]
    return total


def shortest_path_through(points, max_n: int = MAX_POINTS) -> PathResult:
    """Shortest open polygonal path visiting every point, endpoints free.

    Brute force over all ``n!/2`` undirected orders. Each undirected path is
    scored once, in the direction whose first index is smaller; among equal
    lengths the lexicographically first order wins.
    """
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    n = len(pts)
    if max_n > MAX_POINTS:
        raise TooManyPoints(f"max_n is capped at {MAX_POINTS}")
    if n < 1:
        raise ValueError("need at least one point")
    if n > max_n:
        raise TooManyPoints(f"{n} points exceeds the enumeration cap {max_n}")
    orders = _orders(n)
    lengths = order_lengths(distance_matrix(pts), orders)
    best = int(np.argmin(lengths))
    order = tuple(int(i) for i in orders[best])
    line = Polyline(pts[list(order)])
    return PathResult(order, line.length, line)


def shortest_path_length(points, max_n: int = MAX_POINTS) -> float:
    return shortest_path_through(points, max_n).length


def triangle_angle_ratio_check(a, apex, b, tol: float = 1e-12) -> tuple:
    """Opposite side over the sum of the apex sides, and ``sin(phi/2)``.

    ``phi`` is the angle at ``apex``. The fixed-angle triangle inequality says
    the ratio never falls below the bound, with equality for isosceles
    triangles.
    """
    a, apex, b = (np.asarray(p, dtype=float) for p in (a, apex, b))
    u, w = a - apex, b - apex
    lu, lw = math.hypot(*u), math.hypot(*w)
    opposite = math.hypot(*(a - b))
    cr = u[0] * w[1] - u[1] * w[0]
    if min(lu, lw, opposite) == 0.0 or abs(cr) <= tol * max(lu, lw, opposite) ** 2:
        raise DegenerateTriangle("points are collinear or coincide")
    phi = math.atan2(abs(cr), float(u @ w))
    return opposite / (lu + lw), math.sin(phi / 2.0)

"""Curve length from line-intersection counts (Crofton formula).

Lines are ``{x cos(phi) + y sin(phi) = p}`` with ``phi`` in ``[0, pi)`` and
signed ``p`` in ``[-p_max, p_max]``; the length of a curve is half the
integral of its intersection count over this set. Both integrals are taken
with the midpoint rule.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from .errors import GridTooCoarse
from .geometry import Polyline
from .reports import CheckReport

DEFAULT_ANGLES = 720
DEFAULT_OFFSETS = 2000
P_MAX_FACTOR = 1.05


@dataclass(frozen=True)
class CroftonGrid:
    n_angles: int = DEFAULT_ANGLES
    n_offsets: int = DEFAULT_OFFSETS
    p_max: float = 1.0

    def __post_init__(self):
        if self.n_angles < 16 or self.n_offsets < 16:
            raise ValueError("Crofton grid needs at least 16 angles and 16 offsets")
        if not self.p_max > 0.0:
            raise ValueError("p_max must be positive")

    @property
    def angles(self) -> np.ndarray:
        return (np.arange(self.n_angles) + 0.5) * (math.pi / self.n_angles)

    @property
    def offsets(self) -> np.ndarray:
        step = 2.0 * self.p_max / self.n_offsets
        return -self.p_max + (np.arange(self.n_offsets) + 0.5) * step

    @property
    def cell_measure(self) -> float:
        return (math.pi / self.n_angles) * (2.0 * self.p_max / self.n_offsets)

    def refined(self, factor: int = 2) -> "CroftonGrid":
        return CroftonGrid(self.n_angles * factor, self.n_offsets * factor, self.p_max)


def default_grid(*curves, n_angles: int = DEFAULT_ANGLES, n_offsets: int = DEFAULT_OFFSETS) -> CroftonGrid:
    """Grid whose offsets reach 1.05 times the largest distance from the origin."""
    r = max(float(np.max(np.hypot(*c.points.T))) for c in curves)
    return CroftonGrid(n_angles, n_offsets, P_MAX_FACTOR * r)


def _sign_runs(g: np.ndarray, closed: bool) -> int:
    """Crossings in a sign sequence: one per sign flip and one per run of zeros."""
    s = np.sign(g).astype(int)
    if closed:
        s = s[:-1]
        nz = np.flatnonzero(s)
        if len(nz) == 0:
            return 1
        s = np.roll(s, -int(nz[0]))
        s = np.append(s, s[0])
    count = 0
    prev = None
    in_zero = False
    for v in s:
        if v == 0:
            if not in_zero:
                count += 1
                in_zero = True
            continue
        if prev is not None and not in_zero and v != prev:
            count += 1
        in_zero = False
        prev = v
    return count


def line_intersection_count(curve: Polyline, phi: float, p: float) -> int:
    """Number of times ``curve`` meets the line at angle ``phi``, signed offset ``p``.

    A segment lying on the line, or a vertex touching it, counts once per
    contiguous run of on-line points.
    """
    pts = curve.points
    g = pts[:, 0] * math.cos(phi) + pts[:, 1] * math.sin(phi) - p
    return _sign_runs(g, curve.is_closed)


def count_grid(curve: Polyline, grid: CroftonGrid) -> np.ndarray:
    """Intersection counts on the whole grid, shape ``(n_angles, n_offsets)``.

    Each segment covers the half-open offset range ``[min g, max g)`` of its
    endpoint projections; grid lines passing exactly through a vertex are
    recounted with :func:`line_intersection_count`.
    """
    pts = curve.points
    offsets = grid.offsets
    angles = grid.angles
    counts = np.zeros((grid.n_angles, grid.n_offsets), dtype=np.int64)
    if len(pts) < 2:
        return counts
    g = pts @ np.vstack([np.cos(angles), np.sin(angles)])  # (m, n_angles)
    lo = np.minimum(g[:-1], g[1:])
    hi = np.maximum(g[:-1], g[1:])
    ilo = np.searchsorted(offsets, lo.ravel(), side="left").reshape(lo.shape)
    ihi = np.searchsorted(offsets, hi.ravel(), side="left").reshape(hi.shape)
    width = grid.n_offsets + 1
    rows = np.broadcast_to(np.arange(grid.n_angles) * width, lo.shape)
    diff = np.bincount((rows + ilo).ravel(), minlength=grid.n_angles * width)
    diff = diff - np.bincount((rows + ihi).ravel(), minlength=grid.n_angles * width)
    counts = np.cumsum(diff.reshape(grid.n_angles, width), axis=1)[:, :-1]
    # measure-zero coincidences of a grid line with a vertex
    pos = np.searchsorted(offsets, g.ravel(), side="left").reshape(g.shape)
    hit = (pos < grid.n_offsets) & (offsets[np.minimum(pos, grid.n_offsets - 1)] == g)
    for vi, ai in zip(*np.nonzero(hit)):
        j = pos[vi, ai]
        counts[ai, j] = line_intersection_count(curve, angles[ai], offsets[j])
    return counts


def crofton_length(curve: Polyline, grid: CroftonGrid | None = None) -> float:
    """Midpoint-rule estimate of ``1/2 * integral n(phi, p) dphi dp``."""
    if grid is None:
        grid = default_grid(curve)
    counts = count_grid(curve, grid)
    if curve.is_closed and counts.max(initial=0) < 2:
        raise GridTooCoarse("closed curve never crossed twice; refine the grid or enlarge p_max")
    return 0.5 * float(counts.sum()) * grid.cell_measure


def crofton_dominance_check(
    curve: Polyline, boundary: Polyline, grid: CroftonGrid | None = None, min_fraction: float = 0.999
) -> CheckReport:
    """Fraction of lines meeting ``boundary`` that meet ``curve`` at least as often.

    Only grid cells whose line hits the boundary are counted. ``lhs`` is the
    observed fraction and ``rhs`` the required ``min_fraction``.
    """
    if grid is None:
        grid = default_grid(curve, boundary)
    nc = count_grid(curve, grid)
    nb = count_grid(boundary, grid)
    relevant = nb > 0
    cells = int(relevant.sum())
    violations = int(np.sum(relevant & (nc < nb)))
    fraction = 1.0 if cells == 0 else 1.0 - violations / cells
    half = 0.5 * grid.cell_measure
    return CheckReport.at_least(
        "CROFTON_DOMINANCE",
        fraction,
        min_fraction,
        0.0,
        details={
            "cells": cells,
            "violations": violations,
            "curve_estimate": half * float(nc.sum()),
            "boundary_estimate": half * float(nb.sum()),
        },
    )

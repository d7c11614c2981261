"""Parametric shape families, their polygonal discretizations and exact perimeters."""

from __future__ import annotations

from dataclasses import dataclass, field
import json
import math
from pathlib import Path
from typing import Mapping

import numpy as np

from .errors import InvalidShape, NotThin, UnsupportedSpec
from .geometry import ConvexShape

DEFAULT_VERTICES = 4096
# A lens is "thin" when its full corner angle (twice the tangent-chord angle)
# is below 60 degrees: every angle at a corner subtended by two boundary
# points is then below 60 degrees, which is what the {a, m, b} optimality
# argument needs.
THIN_HALF_ANGLE = math.pi / 6

_PARAMS = {
    "ellipse": ("a_semi", "b_semi"),
    "half_ellipse": ("k",),
    "lens": ("chord_half", "sagitta"),
    "rectangle": ("width", "height"),
    "deltoid_pair_member": ("index",),
}


@dataclass(frozen=True)
class ShapeSpec:
    """Symbolic description of a shape family member.

    ``kind`` is one of ``polygon``, ``ellipse``, ``half_ellipse``, ``lens``,
    ``rectangle`` or ``deltoid_pair_member``; ``params`` holds the named
    parameters (``vertices`` for polygons). Lenses built with ``thin=True``
    must have a tangent-chord angle below :data:`THIN_HALF_ANGLE` (corner
    angle below 60 degrees).
    """

    kind: str
    params: Mapping = field(default_factory=dict)
    thin: bool = False

    def __post_init__(self):
        params = dict(self.params)
        object.__setattr__(self, "params", params)
        if self.kind == "polygon":
            if "vertices" not in params:
                raise InvalidShape("polygon spec needs 'vertices'")
            return
        if self.kind not in _PARAMS:
            raise UnsupportedSpec(f"unknown shape kind {self.kind!r}")
        missing = [p for p in _PARAMS[self.kind] if p not in params]
        if missing:
            raise InvalidShape(f"{self.kind} spec missing {missing}")
        for name in _PARAMS[self.kind]:
            if not float(params[name]) > 0.0:
                raise InvalidShape(f"{self.kind}.{name} must be strictly positive")
        if self.kind == "half_ellipse" and not float(params["k"]) <= 1.0:
            raise InvalidShape("half_ellipse k must lie in (0, 1]")
        if self.kind == "deltoid_pair_member" and int(params["index"]) not in (1, 2):
            raise InvalidShape("deltoid_pair_member index is 1 (abcd) or 2 (abcd')")
        if self.kind == "lens" and self.thin and self.lens_half_angle >= THIN_HALF_ANGLE:
            raise NotThin(f"lens tangent-chord angle {math.degrees(self.lens_half_angle):.3f} deg is not thin")

    def __getitem__(self, name):
        return self.params[name]

    @property
    def lens_radius(self) -> float:
        h, s = float(self["chord_half"]), float(self["sagitta"])
        return (h * h + s * s) / (2.0 * s)

    @property
    def lens_half_angle(self) -> float:
        """Half the central angle of each arc; equals the tangent-chord angle at a corner."""
        h, s = float(self["chord_half"]), float(self["sagitta"])
        return 2.0 * math.atan2(s, h)

    def label(self) -> str:
        if self.kind == "polygon":
            return f"polygon[{len(self.params['vertices'])}]"
        inner = ",".join(f"{k}={self.params[k]!r}" for k in _PARAMS[self.kind])
        return f"{self.kind}({inner})"


def ellipse_perimeter_exact(a_semi: float, b_semi: float) -> float:
    """Full ellipse perimeter through the arithmetic-geometric mean.

    Uses the Gauss-Legendre form of the complete elliptic integral of the
    second kind: ``2*pi/M(a, b) * (a**2 - sum 2**(n-1) c_n**2)``.
    """
    if not (a_semi > 0.0 and b_semi > 0.0):
        raise ValueError("semi-axes must be positive")
    a, b = max(a_semi, b_semi), min(a_semi, b_semi)
    an, bn = a, b
    weight = 0.5
    total = weight * (a * a - b * b)
    for _ in range(64):
        if an - bn <= 1e-16 * an:
            break
        cn = 0.5 * (an - bn)
        an, bn = 0.5 * (an + bn), math.sqrt(an * bn)
        weight *= 2.0
        total += weight * cn * cn
    return 4.0 * math.pi * (a * a - total) / (an + bn)


def cayley_half_perimeter(k: float) -> float:
    """Leading terms ``2 + k**2 log(1/k) / 2`` of half the perimeter of the half-ellipse.

    Only meaningful as ``k -> 0``; the neglected term is O(k**2).
    """
    return 2.0 + 0.5 * k * k * math.log(1.0 / k)


def half_ellipse_perimeter(k: float) -> float:
    """Boundary length of the half-ellipse: half the ellipse arc plus its major axis."""
    return 0.5 * ellipse_perimeter_exact(1.0, k) + 2.0


def exact_perimeter(spec: ShapeSpec) -> float:
    p = spec.params
    if spec.kind == "ellipse":
        return ellipse_perimeter_exact(float(p["a_semi"]), float(p["b_semi"]))
    if spec.kind == "half_ellipse":
        return half_ellipse_perimeter(float(p["k"]))
    if spec.kind == "lens":
        return 4.0 * spec.lens_radius * spec.lens_half_angle
    if spec.kind == "rectangle":
        return 2.0 * (float(p["width"]) + float(p["height"]))
    if spec.kind == "deltoid_pair_member":
        return ConvexShape(deltoid_vertices(int(p["index"]))).perimeter
    if spec.kind == "polygon":
        return ConvexShape(np.asarray(p["vertices"], dtype=float)).perimeter
    raise UnsupportedSpec(spec.kind)


def deltoid_vertices(index: int) -> np.ndarray:
    """Deltoid over the unit equilateral triangle, in ccw order a, d, c, b.

    ``a=(-1/2, 0)``, ``c=(1/2, 0)``, ``b=(0, sqrt(3)/2)``; ``d`` sits on the
    symmetry axis below ``ac`` at distance ``axis`` from ``b``. Index 1 has
    axis 1 (angle 150 degrees at d), index 2 has axis 2/sqrt(3) (120 degrees).
    """
    axis = {1: 1.0, 2: 2.0 / math.sqrt(3.0)}[index]
    top = math.sqrt(3.0) / 2.0
    return np.array([[-0.5, 0.0], [0.0, top - axis], [0.5, 0.0], [0.0, top]])


def _lens_vertices(spec: ShapeSpec, n: int) -> np.ndarray:
    r = spec.lens_radius
    alpha = spec.lens_half_angle
    s = float(spec["sagitta"])
    n_low = n // 2
    n_up = n - n_low
    # lower arc a -> b bulging to y = -s, then upper arc b -> a
    th = np.linspace(-alpha, alpha, n_low + 1)
    low = np.column_stack([r * np.sin(th), (r - s) - r * np.cos(th)])
    th = np.linspace(alpha, -alpha, n_up + 1)[1:-1]
    up = np.column_stack([r * np.sin(th), (s - r) + r * np.cos(th)])
    h = float(spec["chord_half"])
    low[0] = (-h, 0.0)
    low[-1] = (h, 0.0)
    return np.vstack([low, up])


def discretize(spec: ShapeSpec, n_vertices: int = DEFAULT_VERTICES) -> ConvexShape:
    """Inscribed polygon with vertices exactly on the parametric boundary.

    Corners of half-ellipses and lenses are always vertices: the half-ellipse
    polygon starts at ``(1, 0)`` and ends at ``(-1, 0)``; the lens polygon
    starts at its left corner and has its right corner at index ``n // 2``.
    """
    if spec.kind == "polygon":
        raise UnsupportedSpec("polygons are not discretized; use to_shape()")
    if n_vertices < 8:
        raise ValueError("discretize needs at least 8 vertices")
    p = spec.params
    if spec.kind == "ellipse":
        t = 2.0 * math.pi * np.arange(n_vertices) / n_vertices
        v = np.column_stack([float(p["a_semi"]) * np.cos(t), float(p["b_semi"]) * np.sin(t)])
    elif spec.kind == "half_ellipse":
        t = np.linspace(0.0, math.pi, n_vertices)
        v = np.column_stack([np.cos(t), float(p["k"]) * np.sin(t)])
        v[0], v[-1] = (1.0, 0.0), (-1.0, 0.0)
    elif spec.kind == "lens":
        v = _lens_vertices(spec, n_vertices)
    elif spec.kind == "rectangle":
        w, h = float(p["width"]), float(p["height"])
        v = np.array([[0.0, 0.0], [w, 0.0], [w, h], [0.0, h]])
    elif spec.kind == "deltoid_pair_member":
        v = deltoid_vertices(int(p["index"]))
    else:
        raise UnsupportedSpec(spec.kind)
    return ConvexShape(v, spec)


def to_shape(spec: ShapeSpec, n_vertices: int = DEFAULT_VERTICES) -> ConvexShape:
    """Like :func:`discretize` but passes polygons through unchanged."""
    if spec.kind == "polygon":
        return ConvexShape(np.asarray(spec["vertices"], dtype=float), spec)
    return discretize(spec, n_vertices)


def discretization_slack(shape: ConvexShape) -> float:
    """Perimeter lost by inscribing ``shape`` in its parametric source (0 for raw polygons)."""
    if isinstance(shape.source, ShapeSpec) and shape.source.kind != "polygon":
        return max(0.0, exact_perimeter(shape.source) - shape.perimeter)
    return 0.0


def spec_from_dict(doc: Mapping) -> ShapeSpec:
    """Parse a shape document ``{"kind": ..., "params": {...}}``.

    Polygons use ``{"kind": "polygon", "vertices": [[x, y], ...]}``. The kind
    ``disk`` with ``{"radius": r}`` is accepted as an ellipse alias.
    """
    kind = doc.get("kind")
    if kind == "polygon":
        verts = doc.get("vertices", doc.get("params", {}).get("vertices"))
        if verts is None:
            raise InvalidShape("polygon document needs 'vertices'")
        return ShapeSpec("polygon", {"vertices": [[float(x), float(y)] for x, y in verts]})
    params = dict(doc.get("params", {}))
    if kind == "disk":
        r = float(params.get("radius", doc.get("radius", 1.0)))
        return ShapeSpec("ellipse", {"a_semi": r, "b_semi": r})
    return ShapeSpec(str(kind), {k: float(v) for k, v in params.items()}, bool(doc.get("thin", False)))


def spec_to_dict(spec: ShapeSpec) -> dict:
    if spec.kind == "polygon":
        return {"kind": "polygon", "vertices": [list(map(float, v)) for v in spec["vertices"]]}
    doc = {"kind": spec.kind, "params": {k: spec.params[k] for k in _PARAMS[spec.kind]}}
    if spec.thin:
        doc["thin"] = True
    return doc


def shape_to_dict(shape: ConvexShape) -> dict:
    return {"kind": "polygon", "vertices": shape.vertices.tolist()}


def load_shape(path, n_vertices: int = DEFAULT_VERTICES) -> ConvexShape:
    """Read a shape JSON file and re-validate it.

    Polygon files must already be strictly convex and counterclockwise;
    vertices that would be collapsed are reported as an error.
    """
    doc = json.loads(Path(path).read_text())
    spec = spec_from_dict(doc)
    shape = to_shape(spec, n_vertices)
    if spec.kind == "polygon" and len(shape) != len(spec["vertices"]):
        raise InvalidShape("polygon vertices are not in strictly convex position")
    return shape

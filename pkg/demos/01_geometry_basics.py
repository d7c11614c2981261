"""Convex shapes, hulls, diameters and support points.

Run with ``python demos/01_geometry_basics.py``.
"""

import math

import numpy as np

from convexcurves import ConvexShape, ShapeSpec, convex_hull, diameter, discretize, support_point
from convexcurves.shapes import ellipse_perimeter_exact

# Hulls drop interior points and collinear vertices; orientation tests are exact.
rng = np.random.default_rng(1)
cloud = rng.normal(size=(200, 2))
hull = convex_hull(cloud)
print(f"hull of 200 gaussian points: {len(hull)} vertices, perimeter {hull.perimeter:.4f}")

# The diameter comes from rotating calipers; compare with brute force.
brute = max(math.dist(p, q) for p in hull.vertices for q in hull.vertices)
d = diameter(hull)
print(f"calipers diameter {d.length:.12f}, brute force {brute:.12f}, vertex pair {d.indices}")

# Smooth shapes are inscribed polygons with vertices exactly on the curve.
ellipse = ShapeSpec("ellipse", {"a_semi": 2.0, "b_semi": 1.0})
for n in (64, 512, 4096):
    poly = discretize(ellipse, n)
    print(f"ellipse as {n:4d}-gon: perimeter {poly.perimeter:.10f}")
print(f"closed form (AGM):     {ellipse_perimeter_exact(2.0, 1.0):.10f}")

# Support points: the vertex furthest in a given outer normal direction.
square = ConvexShape(np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]))
for angle in (0.0, math.pi / 4, math.pi):
    print(f"support point of the unit square at normal {angle:.3f}: {support_point(square, angle)}")

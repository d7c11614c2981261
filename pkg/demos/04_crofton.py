"""Estimating curve length by counting line intersections."""

import math

from convexcurves import CroftonGrid, Polyline, ShapeSpec, crofton_dominance_check, crofton_length, discretize
from convexcurves.crofton import default_grid
from convexcurves.verifier import random_convex_polygon, random_covering_curve

circle = discretize(ShapeSpec("ellipse", {"a_semi": 1.0, "b_semi": 1.0}), 1024).boundary()
grid = default_grid(circle)
for factor in (1, 2, 4):
    g = grid if factor == 1 else grid.refined(factor)
    est = crofton_length(circle, g)
    print(f"{g.n_angles:5d} x {g.n_offsets:5d} grid: estimate {est:.6f}, error {est - 2 * math.pi:+.2e}")

segment = Polyline([(0.0, 0.0), (3.0, 4.0)])
print(f"segment of length 5: {crofton_length(segment):.6f}")

# A closed curve whose hull covers K meets every line at least as often as the boundary does.
shape = random_convex_polygon(20, seed=5)
curve = random_covering_curve(shape, seed=6).closed()
rep = crofton_dominance_check(curve, shape.boundary())
print(f"dominance fraction {rep.lhs:.5f} over {rep.details['cells']} cells")
print(f"estimates: curve {rep.details['curve_estimate']:.4f} >= boundary {rep.details['boundary_estimate']:.4f}")

"""Inscribed polygons from support normals and from equal arcs."""

import math

from convexcurves import equal_arc_points, support_normal_selection
from convexcurves.verifier import cyclic_perimeter, epsilon_to_n, random_convex_polygon

shape = random_convex_polygon(40, seed=3)
per = shape.perimeter

# Support-normal selection: n outer normals spaced 2*pi/n apart.
for eps in (0.3, 0.1, 0.03):
    n = epsilon_to_n(eps)
    sel = support_normal_selection(shape, n)
    print(
        f"eps={eps:<4} n={n:2d}: per V / per K = {sel.polygon_perimeter / per:.4f} "
        f">= cos(pi/n) = {math.cos(math.pi / n):.4f}"
    )

# Equal-arc polygons: n points cutting the boundary into equal arcs.
for n in (3, 4, 6, 12):
    ratio = cyclic_perimeter(equal_arc_points(shape, n)) / per
    print(f"equal arcs n={n:2d}: ratio {ratio:.4f} >= 1 - 2/n = {1 - 2 / n:.4f}")

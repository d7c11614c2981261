"""Shapes on which curves through boundary points stay short."""

import math

from convexcurves import witnesses as w
from convexcurves.shapes import cayley_half_perimeter, half_ellipse_perimeter

# Long thin rectangle: a comb path visits n boundary points with length L + n.
for L in (10.0, 100.0, 1e4):
    r = w.make_rectangle_witness(L, 4)
    print(f"rectangle L={L:>7}: path {r.path.length:.1f}, half perimeter {r.half_perimeter:.1f}, ratio {r.ratio:.5f}")

# Thin lens: the corners and an arc midpoint give a path shorter than half the perimeter.
g = w.lens_geometry(w.make_lens(1.0, math.radians(20)))
print(f"lens: |am| + |mb| = {g.amb_length:.6f} < half perimeter {0.5 * g.perimeter:.6f}")

# Half-ellipse E_k: every chain through n arc points is bounded by 2(n-2)(sqrt(1+k^2)-1) + 2.
for k in (1e-1, 1e-2, 1e-3):
    half = 0.5 * half_ellipse_perimeter(k)
    print(
        f"k={k:g}: half perimeter {half:.9f} (leading terms {cayley_half_perimeter(k):.9f}), "
        f"chain bound drops below it up to n = {w.chain_threshold(k) - 1}"
    )

# Nested deltoids: per - diam is not monotone under inclusion.
pair = w.make_deltoid_pair()
print(f"deltoids: inner per-diam {pair.values[0]:.6f} > outer per-diam {pair.values[1]:.6f}")

"""How wide can a lens get before the corners and an arc midpoint stop being optimal?

The {a, m, b} argument only needs the corner angle below 60 degrees. The
maximin search shows where optimality actually breaks.
"""

import math

from convexcurves import discretize, maximin_point_selection
from convexcurves import witnesses as w

print("half-angle  |am|+|mb|   maximin    half per   {a,m,b} optimal")
for deg in (10, 20, 30, 35, 40, 42, 44, 46, 48, 50, 55):
    spec = w.make_lens(1.0, math.radians(deg), thin=False)
    g = w.lens_geometry(spec)
    res = maximin_point_selection(discretize(spec, 2048), 3, restarts=16, seed=0)
    print(f"{deg:6d}      {g.amb_length:.6f}   {res.value:.6f}   {0.5 * g.perimeter:.6f}   {res.value <= g.amb_length + 1e-9}")

"""The four-point construction and the two perimeter bounds it yields.

Take a diameter ab and let c, d be where the perpendicular bisector of ab
leaves the shape. The shortest path through a, b, c, d is at least half the
perimeter, and 2|ab| + 2|cd| strictly exceeds the perimeter.
"""

from pathlib import Path

from convexcurves import double_perimeter_bound, four_point_construction, shortest_path_through
from convexcurves.figures import Figure
from convexcurves.verifier import random_convex_polygon, theorem_one_case

shape = random_convex_polygon(14, seed=21)
w = four_point_construction(shape)
path = shortest_path_through(w.points)
order = "".join("abcd"[i] for i in path.order)
print(f"perimeter        {shape.perimeter:.6f}")
print(f"shortest path    {path.length:.6f} via {order}   (half perimeter {0.5 * shape.perimeter:.6f})")
print(f"2|ab| + 2|cd|    {double_perimeter_bound(w):.6f}")

# The order of the shortest path depends on whether |ad| >= |cd|.
case = theorem_one_case(shape)
print(f"case {case['case']}, enumeration agrees: {case['order_matches']}")

out = Path("demo_output")
out.mkdir(exist_ok=True)
fig = Figure().polygon(shape.vertices).path(path.polyline.points).points(w.points, labels="abcd")
(out / "four_points.svg").write_text(fig.to_svg())
print("figure written to demo_output/four_points.svg")

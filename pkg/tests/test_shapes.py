import math

import numpy as np
import pytest
from scipy.integrate import quad

from convexcurves import shapes
from convexcurves.errors import InvalidShape, NotThin, UnsupportedSpec
from convexcurves.shapes import ShapeSpec


def quad_perimeter(a, b):
    """Independent oracle: integrate the speed of (a cos t, b sin t)."""
    val, _ = quad(lambda t: math.hypot(a * math.sin(t), b * math.cos(t)), 0.0, math.pi / 2, epsabs=1e-13, epsrel=1e-13, limit=400)
    return 4.0 * val


@pytest.mark.parametrize("a,b", [(1.0, 1.0), (1.0, 0.5), (3.0, 0.2), (1.0, 1e-3), (0.3, 2.0)])
def test_agm_perimeter_matches_quadrature(a, b):
    assert shapes.ellipse_perimeter_exact(a, b) == pytest.approx(quad_perimeter(a, b), rel=1e-12)


def test_circle_and_flat_limits():
    assert shapes.ellipse_perimeter_exact(1.0, 1.0) == pytest.approx(2 * math.pi, abs=1e-14)
    # flattened ellipse tends to four times the semi-major axis
    assert shapes.ellipse_perimeter_exact(1.0, 1e-9) == pytest.approx(4.0, abs=1e-8)


def test_half_ellipse_perimeter():
    assert shapes.half_ellipse_perimeter(1.0) == pytest.approx(math.pi + 2.0, abs=1e-14)
    for k in (1e-2, 1e-3):
        assert shapes.half_ellipse_perimeter(k) == pytest.approx(0.5 * quad_perimeter(1.0, k) + 2.0, rel=1e-12)


def test_cayley_expansion_constant():
    # (P(1, k) - 4 - 2 k^2 log(1/k)) / k^2 tends to 2 log 4 - 1
    for k in (1e-3, 1e-4):
        c = (shapes.ellipse_perimeter_exact(1.0, k) - 4.0 - 2 * k * k * math.log(1 / k)) / k**2
        assert c == pytest.approx(2 * math.log(4.0) - 1.0, abs=1e-2)


def test_spec_validation():
    with pytest.raises(InvalidShape):
        ShapeSpec("ellipse", {"a_semi": 1.0})
    with pytest.raises(InvalidShape):
        ShapeSpec("ellipse", {"a_semi": 1.0, "b_semi": -1.0})
    with pytest.raises(InvalidShape):
        ShapeSpec("half_ellipse", {"k": 1.5})
    with pytest.raises(UnsupportedSpec):
        ShapeSpec("torus", {})
    with pytest.raises(NotThin):
        ShapeSpec("lens", {"chord_half": 1.0, "sagitta": 1.0}, thin=True)


def test_discretize_ellipse_converges():
    spec = ShapeSpec("ellipse", {"a_semi": 2.0, "b_semi": 1.0})
    exact = shapes.exact_perimeter(spec)
    errs = [exact - shapes.discretize(spec, n).perimeter for n in (256, 512, 1024)]
    assert all(e > 0 for e in errs)
    # inscribed polygon error is O(1/n^2)
    assert errs[0] / errs[1] == pytest.approx(4.0, rel=0.02)


def test_discretize_corners():
    he = shapes.discretize(ShapeSpec("half_ellipse", {"k": 0.3}), 64)
    np.testing.assert_array_equal(he.vertices[0], [1.0, 0.0])
    np.testing.assert_array_equal(he.vertices[-1], [-1.0, 0.0])
    lens = shapes.discretize(ShapeSpec("lens", {"chord_half": 1.0, "sagitta": 0.2}), 64)
    np.testing.assert_array_equal(lens.vertices[0], [-1.0, 0.0])
    np.testing.assert_array_equal(lens.vertices[32], [1.0, 0.0])


def test_lens_perimeter_closed_form():
    spec = ShapeSpec("lens", {"chord_half": 1.0, "sagitta": 0.2})
    r, alpha = spec.lens_radius, spec.lens_half_angle
    assert r == pytest.approx((1 + 0.04) / 0.4)
    assert math.sin(alpha) * r == pytest.approx(1.0)
    assert shapes.discretize(spec, 4096).perimeter == pytest.approx(shapes.exact_perimeter(spec), rel=1e-7)


def test_deltoids():
    d1 = shapes.deltoid_vertices(1)
    assert math.dist(d1[1], d1[3]) == pytest.approx(1.0)
    d2 = shapes.deltoid_vertices(2)
    assert math.dist(d2[1], d2[3]) == pytest.approx(2 / math.sqrt(3))


def test_polygon_not_discretized():
    spec = ShapeSpec("polygon", {"vertices": [[0, 0], [1, 0], [0, 1]]})
    with pytest.raises(UnsupportedSpec):
        shapes.discretize(spec)
    assert shapes.to_shape(spec).perimeter == pytest.approx(2 + math.sqrt(2))


def test_discretization_slack_nonnegative():
    s = shapes.discretize(ShapeSpec("ellipse", {"a_semi": 1.0, "b_semi": 1.0}), 128)
    assert 0 < shapes.discretization_slack(s) < 1e-3


class TestDocumentedExamples:
    def test_disk_4096(self):
        s = shapes.discretize(ShapeSpec("ellipse", {"a_semi": 1.0, "b_semi": 1.0}), 4096)
        delta = 2 * math.pi - s.perimeter
        assert 0 < delta < 1e-5
        assert delta <= 2 * math.pi**3 / 4096**2

    def test_ellipse_diameter(self):
        from convexcurves.geometry import diameter

        s = shapes.discretize(ShapeSpec("ellipse", {"a_semi": 2.0, "b_semi": 1.0}), 4096)
        assert diameter(s).length == pytest.approx(4.0, abs=1e-12)

    def test_half_disk_8(self):
        s = shapes.discretize(ShapeSpec("half_ellipse", {"k": 1.0}), 8)
        verts = s.vertices.tolist()
        assert [-1.0, 0.0] in verts and [1.0, 0.0] in verts

    def test_rectangle_exact(self):
        s = shapes.discretize(ShapeSpec("rectangle", {"width": 100.0, "height": 1.0}))
        np.testing.assert_array_equal(s.vertices, [[0, 0], [100, 0], [100, 1], [0, 1]])

    def test_ellipse_quadrature_1e10(self):
        assert abs(shapes.ellipse_perimeter_exact(1.0, 0.5) - quad_perimeter(1.0, 0.5)) < 1e-10

    def test_degenerate_limit(self):
        assert abs(shapes.ellipse_perimeter_exact(1.0, 1e-6) - 4.0) < 1e-4

    def test_cayley_values(self):
        assert shapes.cayley_half_perimeter(0.01) == pytest.approx(2.000230, abs=1e-6)
        assert shapes.cayley_half_perimeter(0.1) == pytest.approx(2.011513, abs=1e-6)
        assert shapes.cayley_half_perimeter(1.0) == 2.0

    def test_cayley_error_is_order_k_squared(self):
        for k in (1e-2, 1e-3, 1e-4):
            err = abs(0.5 * shapes.half_ellipse_perimeter(k) - shapes.cayley_half_perimeter(k))
            assert err <= 0.5 * k * k

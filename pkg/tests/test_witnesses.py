import math

import numpy as np
import pytest

from convexcurves import witnesses as w
from convexcurves.errors import NotThin, OrderViolation
from convexcurves.geometry import contains_shape, diameter
from convexcurves.paths import shortest_path_through
from convexcurves.shapes import discretize


class TestRectangle:
    def test_l100_n4(self):
        r = w.make_rectangle_witness(100.0, 4)
        assert r.path.length == 104.0
        assert r.half_perimeter == 101.0
        # the comb path really visits every point
        for p in r.points:
            assert np.min(np.hypot(*(r.path.points - p).T)) == 0.0

    def test_two_points(self):
        r = w.make_rectangle_witness(10.0, 2)
        assert shortest_path_through(r.points).length == pytest.approx(math.hypot(10, 1))
        assert math.hypot(10, 1) <= 12

    def test_ratio_tends_to_one(self):
        ratios = [w.make_rectangle_witness(L, 4).ratio for L in (10.0, 100.0, 1e3, 1e4)]
        assert all(a > b for a, b in zip(ratios, ratios[1:]))
        assert ratios[-1] < 1.0003


class TestLens:
    def test_thin_guard(self):
        with pytest.raises(NotThin):
            w.make_lens(1.0, math.radians(30))
        w.make_lens(1.0, math.radians(29.9))
        w.make_lens(1.0, math.radians(70), thin=False)

    def test_tiny_angle(self):
        g = w.lens_geometry(w.make_lens(1.0, 1e-3))
        assert g.perimeter == pytest.approx(2 * g.chord, rel=1e-6)
        assert g.amb_length < 0.5 * g.perimeter

    def test_order_forced(self):
        g = w.lens_geometry(w.make_lens(1.0, math.radians(20)))
        res = shortest_path_through([g.a, g.m_upper, g.b])
        assert res.length == pytest.approx(g.amb_length, rel=1e-15)
        assert res.order in ((0, 1, 2),)

    def test_geometry_closed_form(self):
        alpha = math.radians(20)
        g = w.lens_geometry(w.make_lens(2.0, alpha))
        assert g.radius == pytest.approx(2.0)
        assert g.half_angle == pytest.approx(alpha)
        assert g.perimeter == pytest.approx(4 * 2.0 * alpha)


    def test_optimality_probe_beyond_thin_limit(self):
        # inside the thin regime the corners and a midpoint are optimal; well past it they are not
        from convexcurves.verifier import maximin_point_selection

        for deg, optimal in ((25, True), (55, False)):
            spec = w.make_lens(1.0, math.radians(deg), thin=False)
            g = w.lens_geometry(spec)
            res = maximin_point_selection(discretize(spec, 1024), 3, restarts=8, seed=0)
            assert (res.value <= g.amb_length + 1e-9) == optimal


class TestHalfEllipse:
    def test_ordered_chain_is_shortest(self, rng):
        # the ordered chain is not assumed shortest; check it on sampled configurations
        for k in (1.0, 0.1, 1e-3):
            for n in (4, 6):
                for t in w.sample_arc_configurations(n, 200, rng):
                    p = w.arc_point(k, t)
                    assert shortest_path_through(p).length == pytest.approx(w.chain_length(p), rel=1e-12)

    def test_endpoints(self):
        np.testing.assert_allclose(w.arc_point(0.3, [0.0, 1.0]), [[-1, 0], [1, 0]], atol=1e-16)
        assert w.arc_parameter(w.arc_point(0.3, 0.25), 0.3) == pytest.approx(0.25)

    def test_half_disk(self):
        s = discretize(w.make_half_ellipse(1.0), 2048)
        assert s.perimeter == pytest.approx(math.pi + 2, rel=1e-6)

    def test_excess_midpoint_equality(self):
        k = 1.0
        exc, bound = w.adding_vertex_excess(w.arc_point(k, 0), w.arc_point(k, 0.5), w.arc_point(k, 1), k)
        assert exc == pytest.approx(2 * math.sqrt(2) - 2, abs=1e-15)
        assert bound == pytest.approx(exc, abs=1e-15)

    def test_excess_vanishes_near_prev(self):
        k = 0.5
        exc, _ = w.adding_vertex_excess(w.arc_point(k, 0.2), w.arc_point(k, 0.2 + 1e-9), w.arc_point(k, 0.8), k)
        assert 0.0 <= exc < 1e-8

    def test_excess_order_violation(self):
        k = 0.5
        with pytest.raises(OrderViolation):
            w.adding_vertex_excess(w.arc_point(k, 0.5), w.arc_point(k, 0.2), w.arc_point(k, 0.8), k)
        with pytest.raises(OrderViolation):
            w.adding_vertex_excess((0, 0), w.arc_point(k, 0.5), w.arc_point(k, 0.8), k)

    def test_random_triples(self, rng):
        k = 0.01
        t = np.sort(rng.random((10_000, 3)), axis=1)
        bound = w.small_sum_bound(k)
        worst = 0.0
        for a, m, b in t:
            if not a < m < b:
                continue
            exc, _ = w.adding_vertex_excess(w.arc_point(k, a), w.arc_point(k, m), w.arc_point(k, b), k)
            worst = max(worst, exc)
        assert worst <= bound + 1e-12

    def test_chain_bound_values(self):
        k = 1e-3
        assert w.chain_bound(k, 5) == pytest.approx(6 * (math.sqrt(1 + 1e-6) - 1) + 2, abs=1e-15)
        assert w.chain_bound(k, 2) == 2.0

    def test_chain_check_k1e3_n5(self):
        wit = w.make_half_ellipse_witness(1e-3, 5)
        rep = w.chain_bound_check(wit)
        assert rep.passed
        assert 0 < rep.slack < 1e-5

    def test_chain_check_fails_when_n_large(self):
        k = 1e-3
        n = w.chain_threshold(k)
        assert not w.chain_bound_check(w.make_half_ellipse_witness(k, n)).passed
        assert w.chain_bound_check(w.make_half_ellipse_witness(k, n - 1)).passed

    def test_threshold_grows_like_log(self):
        ks = (1e-1, 1e-2, 1e-3, 1e-4, 1e-6)
        ts = [w.chain_threshold(k) for k in ks]
        assert ts == sorted(ts)
        for k, n in zip(ks, ts):
            assert abs(n - (2 + 0.5 * math.log(1 / k))) <= 1.5

    def test_sampled_chains_below_bound(self, rng):
        k, n = 1e-3, 5
        cfg = w.sample_arc_configurations(n, 2000, rng)
        bound = w.chain_bound(k, n)
        for t in cfg:
            assert w.chain_length(w.arc_point(k, t)) <= bound + 1e-12


class TestDeltoids:
    def test_values(self):
        p = w.make_deltoid_pair()
        assert p.values[0] == pytest.approx(2 + 4 * math.sin(math.radians(15)) - 1, abs=1e-12)
        assert p.values[1] == pytest.approx(2.0, abs=1e-12)

    def test_diameters_are_bd(self):
        p = w.make_deltoid_pair()
        assert p.diameters[0] == pytest.approx(1.0, abs=1e-15)
        assert p.diameters[1] == pytest.approx(2 / math.sqrt(3), abs=1e-15)
        # in abcd the diagonals ac and bd tie at length 1
        v = p.quad_d.vertices
        assert math.dist(v[1], v[3]) == pytest.approx(diameter(p.quad_d).length, abs=1e-15)
        assert set(diameter(p.quad_dprime).indices) == {1, 3}

    def test_containment(self):
        p = w.make_deltoid_pair()
        assert contains_shape(p.quad_dprime, p.quad_d)
        assert not contains_shape(p.quad_d, p.quad_dprime)

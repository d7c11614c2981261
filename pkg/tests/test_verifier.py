import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from convexcurves import verifier as v
from convexcurves.errors import MissingAux
from convexcurves.geometry import ConvexShape, Polyline, diameter
from convexcurves.shapes import ShapeSpec, discretize
from convexcurves.witnesses import make_rectangle_witness

SQUARE = ConvexShape(np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]))
DISK = discretize(ShapeSpec("ellipse", {"a_semi": 1.0, "b_semi": 1.0}), 4096)


class TestSeeding:
    def test_splitmix_reference(self):
        # first outputs of the reference splitmix64 generator seeded with 0
        assert v.splitmix64(0) == 0xE220A8397B1DCDAF
        assert v.splitmix64(1) == 0x910A2DEC89025CC1

    def test_derive_seed_distinct(self):
        assert len({v.derive_seed(7, i) for i in range(1000)}) == 1000

    def test_polygon_determinism(self):
        a = v.random_convex_polygon(50, 9)
        b = v.random_convex_polygon(50, 9)
        np.testing.assert_array_equal(a.vertices, b.vertices)
        assert len(a) == 50

    def test_triangle(self):
        assert len(v.random_convex_polygon(3, 1)) == 3

    def test_corpus_sizes(self):
        c = v.corpus(124, 0)
        assert [e.n for e in c[:3]] == [3, 4, 5]
        assert c[62].n == 3
        assert all(len(e.shape) == e.n for e in c)


class TestCurves:
    @given(st.integers(0, 10**6))
    @settings(max_examples=40, deadline=None)
    def test_vertex_curve_visits_all(self, seed):
        s = v.random_convex_polygon(3 + seed % 20, seed)
        assert v.curve_passes_through_vertices(v.random_vertex_curve(s, seed), s)

    @given(st.integers(0, 10**6))
    @settings(max_examples=40, deadline=None)
    def test_covering_curve_covers(self, seed):
        s = v.random_convex_polygon(3 + seed % 20, seed)
        assert v.hull_covers(v.random_covering_curve(s, seed).points, s)

    def test_boundary_covers(self):
        assert v.hull_covers_exact(SQUARE.boundary().points, SQUARE)
        assert not v.hull_covers_exact(SQUARE.vertices[:3], SQUARE)


class TestChecks:
    def test_t1_disk(self):
        r = v.check_theorem("T1_four_points", DISK)
        assert r.lhs == pytest.approx(3 * math.sqrt(2), abs=1e-6)
        assert r.rhs == pytest.approx(math.pi, abs=1e-6)
        assert r.passed

    def test_t2_disk(self):
        r = v.check_theorem("T2_double_perimeter", DISK)
        assert r.slack == pytest.approx(8 - 2 * math.pi, abs=1e-5)
        assert r.passed

    def test_t4_square(self):
        aux = Polyline(SQUARE.vertices)
        r = v.check_theorem("T4_extreme_curve", SQUARE, aux)
        assert r.lhs == 3.0
        assert r.rhs == pytest.approx(4 - math.sqrt(2))
        assert r.passed

    def test_missing_aux(self):
        with pytest.raises(MissingAux):
            v.check_theorem("T4_extreme_curve", SQUARE)

    def test_bad_aux(self):
        with pytest.raises(ValueError):
            v.check_theorem("T4_extreme_curve", SQUARE, Polyline(SQUARE.vertices[:3]))
        with pytest.raises(ValueError):
            v.check_theorem("BARRIER_half", SQUARE, Polyline(SQUARE.vertices[:3]))

    def test_unknown(self):
        with pytest.raises(ValueError):
            v.check_theorem("T9", SQUARE)

    def test_epsilon_to_n(self):
        assert [v.epsilon_to_n(e) for e in (0.3, 0.1, 0.03)] == [4, 7, 13]

    def test_bollobas_needs_n(self):
        with pytest.raises(ValueError):
            v.check_theorem("BOLLOBAS", SQUARE)

    def test_theorem_one_case_matches_enumeration(self, small_corpus):
        for e in small_corpus:
            res = v.theorem_one_case(e.shape)
            assert res["order_matches"], (e.seed, res)
            assert res["length"] == pytest.approx(res["claimed_length"], rel=1e-12)

    def test_acdb_case_example(self):
        # |ad| >= |cd| on a thin isosceles triangle with apex far from ab
        tri = ConvexShape(np.array([[0.0, 0.0], [1.0, 0.0], [0.5, 0.1]]))
        res = v.theorem_one_case(tri)
        assert res["case"] == "acdb" and res["order_matches"]

    def test_conjecture_examples(self):
        d = diameter(SQUARE).length
        r = v.check_theorem("CONJECTURE", SQUARE, SQUARE.boundary())
        assert r.slack == pytest.approx(d)
        r = v.check_theorem("CONJECTURE", SQUARE, Polyline(SQUARE.vertices))
        assert r.slack == pytest.approx(3 - (4 - math.sqrt(2)))


class TestMaximin:
    def test_disk_pair(self):
        res = v.maximin_point_selection(DISK, 2, restarts=4, seed=0)
        assert res.value == pytest.approx(2.0, abs=1e-6)

    def test_rectangle_upper_bound(self):
        L = 20.0
        rect = make_rectangle_witness(L, 4).shape
        res = v.maximin_point_selection(rect, 4, restarts=8, seed=1)
        assert res.value <= L + 4 + 1e-9
        assert res.value / (L + 1) <= (L + 4) / (L + 1) + 1e-12

    def test_profile_monotone(self):
        s = v.random_convex_polygon(12, 4)
        vals = [r.value for r in v.maximin_profile(s, [2, 3, 4], restarts=4, seed=2)]
        assert vals == sorted(vals)

    def test_grid_oracle_triangle(self):
        # for an equilateral triangle the best triple is the vertex set
        tri = ConvexShape(np.array([[0.0, 0.0], [1.0, 0.0], [0.5, math.sqrt(3) / 2]]))
        val, _, _ = v.maximin_grid_oracle(tri, 60)
        assert val == pytest.approx(2.0, abs=1e-12)

    def test_arc_set_distance(self):
        assert v.arc_set_distance(10.0, [0.5, 9.8], [9.9, 0.4]) == pytest.approx(0.1)


class TestSearch:
    def test_reproducible_and_worker_independent(self):
        a = v.conjecture_search(60, seed=3, chunk=25)
        b = v.conjecture_search(60, seed=3, workers=2, chunk=25)
        assert a.as_dict() == b.as_dict()
        assert a.candidates == []

    def test_instance_regenerates(self):
        f1, s1, c1 = v.conjecture_instance(5, 17)
        f2, s2, c2 = v.conjecture_instance(5, 17)
        assert f1 == f2
        np.testing.assert_array_equal(s1.vertices, s2.vertices)
        np.testing.assert_array_equal(c1.points, c2.points)


def test_reverify_rejects_non_violations():
    # ordinary trials have positive slack, so re-verification must not report them
    for trial in range(10):
        assert v.reverify_candidate(0, trial) is None

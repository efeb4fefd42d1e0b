import numpy as np
import pytest

from svfrac import GridMap, Interval, Selection, hausdorff_to_zero

RNG = np.random.default_rng(0)


def sym_linear(n=4):
    return GridMap.from_builtin("sym_linear", 0.0, 1.0, n)


class TestConstruction:
    def test_domain_validation(self):
        with pytest.raises(ValueError):
            GridMap(1.0, 0.0, [0, 0], [1, 1])

    def test_crossed_endpoints_rejected(self):
        with pytest.raises(ValueError):
            GridMap(0.0, 1.0, [0, 2], [1, 1])

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            GridMap(0.0, 1.0, [0, np.inf], [1, np.inf])

    def test_unknown_builtin(self):
        with pytest.raises(ValueError):
            GridMap.from_builtin("nope")

    def test_json_roundtrip(self):
        f = sym_linear()
        g = GridMap.from_json(f.to_json())
        assert np.array_equal(f.lo, g.lo) and np.array_equal(f.hi, g.hi)

    def test_json_builtin_kind(self):
        f = GridMap.from_json(
            {"a": 0, "b": 1, "segments": 4, "kind": "constant", "params": {"lo": 1, "hi": 2}}
        )
        assert f.eval(0.3) == Interval(1, 2)

    def test_csv_has_header_and_12_digits(self):
        text = sym_linear().to_csv()
        lines = text.strip().split("\n")
        assert lines[0] == "u,lo,hi"
        assert len(lines) == 6
        assert lines[-1] == "1,-1,1"


class TestEval:
    def test_canonical_map_between_nodes(self):
        assert sym_linear(4).eval(0.5) == Interval(-0.5, 0.5)

    def test_exact_at_nodes(self):
        f = sym_linear(4)
        assert f.eval(0.75) == f.interval_at(3)

    def test_constant_map(self):
        f = GridMap.from_builtin("constant", 0, 1, 8, lo=1.0, hi=2.0)
        assert f.eval(0.37) == Interval(1.0, 2.0)

    def test_outside_domain(self):
        with pytest.raises(ValueError):
            sym_linear().eval(1.5)


class TestSupBound:
    def test_canonical_map(self):
        assert sym_linear(16).sup_bound() == 1.0

    def test_constant(self):
        assert GridMap.from_builtin("constant", 0, 1, 4, lo=1, hi=2).sup_bound() == 2.0

    def test_against_brute_force(self):
        u = np.linspace(0, 1, 9)
        f = GridMap(0, 1, -3 + u, u)
        assert f.sup_bound() == 3.0
        us = RNG.uniform(0, 1, 10_000)
        brute = max(hausdorff_to_zero(f.eval(x)) for x in us)
        assert brute <= f.sup_bound() + 1e-12
        assert f.sup_bound() - brute < 1e-3


class TestSelections:
    def test_extremals_of_canonical_map(self):
        f = sym_linear(8)
        lo, hi = f.extremal_lower(), f.extremal_upper()
        assert np.allclose(lo.values, -f.nodes)
        assert np.allclose(hi.values, f.nodes)

    def test_degenerate_extremals_coincide(self):
        f = GridMap(0, 1, [0, 1, 2], [0, 1, 2])
        assert np.array_equal(f.extremal_lower().values, f.extremal_upper().values)

    def test_constant_upper(self):
        f = GridMap.from_builtin("constant", 0, 1, 4, lo=1, hi=2)
        assert np.all(f.extremal_upper().values == 2.0)

    def test_random_selection_deterministic(self):
        f = sym_linear(32)
        s1, s2 = f.random_selection(99), f.random_selection(99)
        assert np.array_equal(s1.values, s2.values)

    def test_degenerate_unique_selection(self):
        f = GridMap(0, 1, [1, 2, 3], [1, 2, 3])
        assert np.array_equal(f.random_selection(5).values, [1, 2, 3])

    def test_uniform_sampler_mean(self):
        # node u=1 of [-u, u]: 1e4 draws, mean ~ 0 within 3 standard errors
        f = sym_linear(4)
        draws = np.array([f.random_selection(seed).values[-1] for seed in range(10_000)])
        stderr = (2.0 / np.sqrt(12.0)) / 100.0
        assert abs(draws.mean()) < 3 * stderr

    def test_membership_at_nodes_and_interior(self):
        f = GridMap.from_builtin("sin_envelope", 0, 1, 32)
        for sel in (f.extremal_lower(), f.extremal_upper(), f.random_selection(3)):
            assert sel.is_selection_of(f)
            for u in RNG.uniform(0, 1, 1000):
                box = f.eval(u)
                assert box.lo - 1e-12 <= sel.eval(u) <= box.hi + 1e-12

    def test_cross_grid_attachment_is_error(self):
        f = sym_linear(4)
        s = Selection(0, 1, np.zeros(9))
        with pytest.raises(ValueError):
            s.is_selection_of(f)


class TestVariationLipschitz:
    def test_monotone_linear(self):
        s = Selection(0, 1, -np.linspace(0, 1, 9))
        assert s.variation() == 1.0
        assert abs(s.lipschitz() - 1.0) < 1e-12

    def test_constant(self):
        s = Selection(0, 1, np.zeros(5))
        assert s.variation() == 0.0 and s.lipschitz() == 0.0

    def test_hat_against_brute_force(self):
        s = Selection(0, 1, [0.0, 1.0, 0.0])
        assert s.variation() == 2.0 and s.lipschitz() == 2.0
        # random partitions never exceed the exact value
        worst_var = 0.0
        for _ in range(200):
            pts = np.sort(np.concatenate(([0, 0.5, 1], RNG.uniform(0, 1, 30))))
            ys = [s.eval(p) for p in pts]
            worst_var = max(worst_var, float(np.abs(np.diff(ys)).sum()))
        assert worst_var <= 2.0 + 1e-12
        assert worst_var > 2.0 - 1e-6
        worst_lip = 0.0
        for _ in range(2000):
            u, v = RNG.uniform(0, 1, 2)
            if u != v:
                worst_lip = max(worst_lip, abs(s.eval(u) - s.eval(v)) / abs(u - v))
        assert worst_lip <= 2.0 + 1e-12

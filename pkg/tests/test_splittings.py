import numpy as np
import pytest

from torusqft import splittings as sp
from torusqft.numerics import TORUS_ZERO, torus_distance, torus_from_real


def random_self_dual_lifts(rng, n, k):
    sign = -1 if k % 2 else 1
    lifts = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i < j:
                lifts[i, j] = float(rng.uniform(-2, 2))
            elif i > j:
                lifts[i, j] = sign * lifts[j, i]
        lifts[i, i] = 0.0 if k % 2 else float(rng.uniform(-2, 2))
    return tuple(tuple(row) for row in lifts)


class TestGeneralCase:
    def test_zero_lifts(self):
        model = sp.SplittingModel(2, 3, 1, 4, "general", ((0.0,) * 3,) * 2)
        corr = sp.correct_x_general(model)
        assert np.all(corr.component_array() == 0.0)
        assert sp.corrected_pairing_general(model, corr) == 0.0

    def test_rank_one_cancellation(self):
        model = sp.SplittingModel(1, 1, 1, 3, "general", ((0.4,),))
        corr = sp.correct_x_general(model)
        # the component is the negated lift mod 1, cancelling the pairing
        assert corr.u_components[0][0] == pytest.approx(0.6)
        assert sp.corrected_pairing_general(model, corr) < 1e-12

    def test_random_rectangular(self):
        rng = np.random.default_rng(0)
        for _ in range(100):
            n = int(rng.integers(1, 7))
            nt = int(rng.integers(1, 7))
            k = int(rng.integers(1, 4))
            m = int(rng.integers(k + 1, k + 4))
            lifts = tuple(tuple(float(x) for x in row) for row in rng.uniform(-3, 3, size=(n, nt)))
            model = sp.SplittingModel(n, nt, k, m, "general", lifts)
            corr = sp.correct_x_general(model)
            assert sp.corrected_pairing_general(model, corr) < 1e-9

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            sp.SplittingModel(2, 2, 1, 3, "general", ((0.1,),))


class TestSelfDualCase:
    def test_zero_lifts(self):
        model = sp.SplittingModel(2, 2, 2, 4, "self_dual", ((0.0, 0.0), (0.0, 0.0)))
        corr = sp.correct_x_duality(model)
        assert np.all(corr.component_array() == 0.0)

    def test_even_degree_diagonal(self):
        model = sp.SplittingModel(1, 1, 2, 4, "self_dual", ((0.5,),))
        corr = sp.correct_x_duality(model)
        # -c/2 = -0.25, stored as its representative in [0, 1)
        assert corr.u_components[0][0] == pytest.approx(0.75)
        assert torus_distance(torus_from_real(corr.u_components[0][0]),
                              torus_from_real(-0.25)) < 1e-12
        assert sp.corrected_pairing_duality(model, corr) < 1e-9

    def test_odd_degree_example(self):
        model = sp.SplittingModel(
            2, 2, 1, 2, "self_dual", ((0.0, 0.3), (-0.3, 0.0))
        )
        corr = sp.correct_x_duality(model)
        comps = corr.component_array()
        # u_1 = (0, -0.15), u_2 = (0.15, 0) up to the mod-1 representative
        assert torus_distance(torus_from_real(comps[0][1]), torus_from_real(-0.15)) < 1e-12
        assert torus_distance(torus_from_real(comps[1][0]), torus_from_real(0.15)) < 1e-12
        assert comps[0][0] == 0.0 and comps[1][1] == 0.0
        assert sp.corrected_pairing_duality(model, corr) < 1e-9

    def test_random_both_parities(self):
        rng = np.random.default_rng(1)
        for _ in range(100):
            n = int(rng.integers(1, 7))
            k = int(rng.integers(1, 4))
            model = sp.SplittingModel(
                n, n, k, 2 * k, "self_dual", random_self_dual_lifts(rng, n, k)
            )
            corr = sp.correct_x_duality(model)
            assert sp.corrected_pairing_duality(model, corr) < 1e-9

    def test_symmetry_structure(self):
        # corrections are -1/2 of a (graded) symmetric matrix
        rng = np.random.default_rng(2)
        for k in (1, 2):
            n = 4
            model = sp.SplittingModel(
                n, n, k, 2 * k, "self_dual", random_self_dual_lifts(rng, n, k)
            )
            comps = sp.correct_x_duality(model).component_array()
            sign = -1 if k % 2 else 1
            for i in range(n):
                for j in range(n):
                    lhs = torus_from_real(comps[i, j])
                    rhs = torus_from_real(sign * comps[j, i])
                    assert torus_distance(lhs, rhs) < 1e-12

    def test_requires_self_dual_grading(self):
        with pytest.raises(ValueError):
            sp.SplittingModel(1, 1, 1, 3, "self_dual", ((0.0,),))

    def test_rejects_odd_degree_nonzero_diagonal(self):
        with pytest.raises(ValueError):
            sp.SplittingModel(1, 1, 1, 2, "self_dual", ((0.3,),))

    def test_rejects_graded_asymmetry(self):
        with pytest.raises(ValueError):
            sp.SplittingModel(
                2, 2, 1, 2, "self_dual", ((0.0, 0.3), (0.4, 0.0))
            )


class TestSectorCorrections:
    def test_zero(self):
        corr = sp.correct_a((), ())
        assert corr.delta_primal == () and corr.delta_dual == ()

    def test_negation_example(self):
        corr = sp.correct_a((0.2,), ())
        assert corr.delta_primal[0] == pytest.approx(0.8)

    def test_b_example(self):
        corr = sp.correct_b((0.6,), (0.25,))
        assert corr.delta_primal[0] == pytest.approx(0.4)
        assert corr.delta_dual[0] == pytest.approx(0.75)

    def test_random_residuals(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            n = int(rng.integers(1, 7))
            nt = int(rng.integers(1, 7))
            k = int(rng.integers(1, 4))
            m = int(rng.integers(k + 1, k + 4))
            p = rng.uniform(-2, 2, size=n).tolist()
            pt = rng.uniform(-2, 2, size=nt).tolist()
            for fix in (sp.correct_a, sp.correct_b):
                corr = fix(p, pt)
                assert sp.sector_orthogonality_residual(p, pt, corr, k, m) < 1e-9


class TestJson:
    def test_roundtrip(self):
        model = sp.SplittingModel(2, 3, 1, 4, "general", ((0.1, 0.2, 0.3), (0.4, 0.5, 0.6)))
        back = sp.model_from_dict(sp.model_to_dict(model))
        assert back == model

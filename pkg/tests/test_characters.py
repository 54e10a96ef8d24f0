import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torusqft import characters as ch
from torusqft.numerics import TORUS_ZERO, torus_distance, torus_from_real
from torusqft.sampling import rand_character, rand_dynamical
from torusqft.topo import tau_lr

TWO_PI = 2 * math.pi

coeffs = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)


@st.composite
def characters(draw, kmax=4):
    ks = draw(st.sets(st.integers(min_value=1, max_value=kmax), min_size=0, max_size=3))
    modes = tuple(
        ch.ChiralMode(k, draw(coeffs), draw(coeffs), draw(coeffs), draw(coeffs))
        for k in sorted(ks)
    )
    return ch.FourierCharacter(
        h0=torus_from_real(draw(coeffs)),
        ht0=torus_from_real(draw(coeffs)),
        n=draw(st.integers(min_value=-3, max_value=3)),
        nt=draw(st.integers(min_value=-3, max_value=3)),
        modes=modes,
    )


def scalar_phi(modes, t, theta):
    """Direct sample of the mode part of the primal scalar lift."""
    total = 0.0
    for m in modes:
        xm = TWO_PI * m.k * (t - theta)
        xp = TWO_PI * m.k * (t + theta)
        total += (
            -m.b_minus * math.cos(xm)
            - m.b_plus * math.cos(xp)
            + m.a_minus * math.sin(xm)
            + m.a_plus * math.sin(xp)
        )
    return total


def scalar_lift(h, t, theta):
    return h.h0.rep + h.n * theta - h.nt * t + scalar_phi(h.modes, t, theta)


class TestCurvature:
    def test_zero(self):
        c = ch.curvature(ch.FourierCharacter())
        assert c.n == 0 and c.nt == 0 and c.modes == ()

    def test_pure_winding_is_harmonic(self):
        c = ch.curvature(ch.FourierCharacter(n=1))
        assert (c.n, c.nt) == (1, 0)
        assert c.modes == ()
        assert c.dtheta_component(0.3, 0.1) == 1.0
        assert c.dt_component(0.3, 0.1) == 0.0

    def test_single_mode_amplitudes(self):
        h = ch.FourierCharacter(modes=(ch.ChiralMode(1, a_minus=1.0),))
        c = ch.curvature(h)
        for t, theta in ((0.0, 0.0), (0.3, 0.2), (-0.7, 0.9)):
            xm = TWO_PI * (t - theta)
            assert c.dt_component(t, theta) == pytest.approx(TWO_PI * math.cos(xm))
            assert c.dtheta_component(t, theta) == pytest.approx(-TWO_PI * math.cos(xm))

    def test_matches_finite_differences_of_scalar_lift(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            h = rand_character(rng, max_modes=3, kmax=4)
            c = ch.curvature(h)
            t, theta = float(rng.normal()), float(rng.random())
            step = 1e-6
            dt_fd = (scalar_lift(h, t + step, theta) - scalar_lift(h, t - step, theta)) / (2 * step)
            dth_fd = (scalar_lift(h, t, theta + step) - scalar_lift(h, t, theta - step)) / (2 * step)
            assert c.dt_component(t, theta) == pytest.approx(dt_fd, abs=1e-4)
            assert c.dtheta_component(t, theta) == pytest.approx(dth_fd, abs=1e-4)

    def test_closedness(self):
        rng = np.random.default_rng(4)
        for _ in range(10):
            c = ch.curvature(rand_character(rng, max_modes=3, kmax=4))
            assert c.closedness_residual(float(rng.normal()), float(rng.random())) < 1e-6


class TestCharacteristicClass:
    def test_examples(self):
        assert ch.characteristic_class(ch.FourierCharacter()) == (0, 0)
        assert ch.characteristic_class(ch.FourierCharacter(n=2, nt=-1)) == (2, -1)
        only_modes = ch.FourierCharacter(modes=(ch.ChiralMode(1, a_plus=1.0),))
        assert ch.characteristic_class(only_modes) == (0, 0)


class TestRestriction:
    def test_zero(self):
        r = ch.restrict_to_cauchy(ch.FourierCharacter())
        assert r.ks == () and r.cos_h == () and r.sin_h == ()

    def test_a_plus_only(self):
        h = ch.FourierCharacter(modes=(ch.ChiralMode(1, a_plus=1.0),))
        r = ch.restrict_to_cauchy(h)
        assert r.sin_h == (1.0,) and r.cos_h == (0.0,)
        assert r.sin_ht == (-1.0,) and r.cos_ht == (0.0,)

    def test_b_minus_only(self):
        h = ch.FourierCharacter(modes=(ch.ChiralMode(1, b_minus=1.0),))
        r = ch.restrict_to_cauchy(h)
        assert r.cos_h == (-1.0,)
        assert r.cos_ht == (-1.0,)

    def test_matches_time_zero_sampling(self):
        rng = np.random.default_rng(5)
        h = rand_character(rng, max_modes=4, kmax=5)
        r = ch.restrict_to_cauchy(h)
        thetas = rng.random(16)
        sampled = r.sample_phi(thetas)
        direct = np.array([scalar_phi(h.modes, 0.0, th) for th in thetas])
        np.testing.assert_allclose(sampled, direct, atol=1e-12)


class TestDecompose:
    def test_zero(self):
        top, dyn = ch.decompose(ch.FourierCharacter())
        assert top.is_zero() and dyn.modes == ()

    def test_field_projection(self):
        mode = ch.ChiralMode(2, b_plus=0.5)
        h = ch.FourierCharacter(h0=torus_from_real(0.3), n=2, modes=(mode,))
        top, dyn = ch.decompose(h)
        assert top.u[0].rep == pytest.approx(0.3)
        assert top.v == (2,)
        assert dyn.modes == (mode,)

    def test_roundtrip_on_random_characters(self):
        rng = np.random.default_rng(6)
        for _ in range(100):
            h = rand_character(rng)
            top, dyn = ch.decompose(h)
            back = ch.recompose(top, dyn)
            assert back == h


class TestSigma:
    def test_diagonal_vanishes(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            h = rand_character(rng)
            assert torus_distance(ch.sigma(h, h), TORUS_ZERO) < 1e-9

    def test_topological_example(self):
        h = ch.FourierCharacter(n=1)
        hp = ch.FourierCharacter(ht0=torus_from_real(0.25))
        assert ch.sigma(h, hp).rep == pytest.approx(0.75)

    def test_mode_example(self):
        ha = ch.FourierCharacter(modes=(ch.ChiralMode(1, a_plus=1.0),))
        hb = ch.FourierCharacter(modes=(ch.ChiralMode(1, b_plus=1.0),))
        # -2 pi mod 1, frozen from the closed form
        assert ch.sigma(ha, hb).rep == pytest.approx(0.7168146928204138, abs=1e-10)

    def test_antisymmetry_random(self):
        rng = np.random.default_rng(8)
        for _ in range(200):
            x, y = rand_character(rng), rand_character(rng)
            assert torus_distance(ch.sigma(x, y) + ch.sigma(y, x), TORUS_ZERO) < 1e-9

    def test_additivity(self):
        rng = np.random.default_rng(9)
        for _ in range(100):
            x, y, z = (rand_character(rng) for _ in range(3))
            lhs = ch.sigma(x + y, z)
            rhs = ch.sigma(x, z) + ch.sigma(y, z)
            assert torus_distance(lhs, rhs) < 1e-9

    def test_integer_doubling_of_windings(self):
        rng = np.random.default_rng(10)
        for _ in range(50):
            z = rand_character(rng)
            n, nt = int(rng.integers(-3, 4)), int(rng.integers(-3, 4))
            single = ch.FourierCharacter(n=n, nt=nt)
            double = ch.FourierCharacter(n=2 * n, nt=2 * nt)
            lhs = ch.sigma(double, z)
            rhs = ch.sigma(single, z) + ch.sigma(single, z)
            assert torus_distance(lhs, rhs) < 1e-9

    def test_matches_lattice_product_on_topological_part(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            x = rand_character(rng, max_modes=1)
            y = rand_character(rng, max_modes=1)
            xt = ch.FourierCharacter(x.h0, x.ht0, x.n, x.nt)
            yt = ch.FourierCharacter(y.h0, y.ht0, y.n, y.nt)
            ex, _ = ch.decompose(xt)
            ey, _ = ch.decompose(yt)
            assert torus_distance(ch.sigma(xt, yt), tau_lr(ex, ey)) < 1e-9


class TestSigmaProperties:
    @settings(max_examples=200, deadline=None)
    @given(characters(), characters())
    def test_antisymmetry_property(self, x, y):
        assert torus_distance(ch.sigma(x, y) + ch.sigma(y, x), TORUS_ZERO) < 1e-9

    @settings(max_examples=200, deadline=None)
    @given(characters(), characters(), characters())
    def test_additivity_property(self, x, y, z):
        lhs = ch.sigma(x + y, z)
        rhs = ch.sigma(x, z) + ch.sigma(y, z)
        assert torus_distance(lhs, rhs) < 1e-9

    @settings(max_examples=200, deadline=None)
    @given(characters())
    def test_decompose_recompose_property(self, x):
        top, dyn = ch.decompose(x)
        assert ch.recompose(top, dyn) == x


class TestTauU:
    def test_diagonal(self):
        rng = np.random.default_rng(12)
        d = rand_dynamical(rng)
        assert ch.tau_u(d, d) == pytest.approx(0.0, abs=1e-12)

    def test_chiral_example(self):
        da = ch.DynamicalDatum((ch.ChiralMode(1, a_plus=1.0),))
        db = ch.DynamicalDatum((ch.ChiralMode(1, b_plus=1.0),))
        assert ch.tau_u(da, db) == pytest.approx(-TWO_PI)

    def test_bilinearity(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            d, dp = rand_dynamical(rng), rand_dynamical(rng)
            assert ch.tau_u(d.scaled(2.0), dp) == pytest.approx(2 * ch.tau_u(d, dp), rel=1e-12, abs=1e-12)

    def test_reduction_matches_sigma(self):
        rng = np.random.default_rng(14)
        for _ in range(100):
            d, dp = rand_dynamical(rng), rand_dynamical(rng)
            x = ch.FourierCharacter(modes=d.modes)
            y = ch.FourierCharacter(modes=dp.modes)
            assert torus_distance(ch.sigma(x, y), torus_from_real(ch.tau_u(d, dp))) < 1e-9


class TestSigmaQuadrature:
    def test_zero(self):
        zero = ch.DynamicalDatum(())
        assert ch.sigma_quadrature(zero, zero, 32).rep == 0.0

    def test_matches_closed_form_example(self):
        da = ch.DynamicalDatum((ch.ChiralMode(1, a_plus=1.0),))
        db = ch.DynamicalDatum((ch.ChiralMode(1, b_plus=1.0),))
        q = ch.sigma_quadrature(da, db, 64)
        assert q.rep == pytest.approx(0.7168146928, abs=1e-6)

    def test_distinct_modes_orthogonal(self):
        d1 = ch.DynamicalDatum((ch.ChiralMode(1, a_plus=1.0, b_minus=0.5),))
        d2 = ch.DynamicalDatum((ch.ChiralMode(2, a_minus=1.0, b_plus=0.5),))
        assert torus_distance(ch.sigma_quadrature(d1, d2, 64), TORUS_ZERO) < 1e-9

    def test_agreement_on_random_pairs(self):
        rng = np.random.default_rng(15)
        for _ in range(100):
            d = rand_dynamical(rng, max_modes=8, kmax=8)
            dp = rand_dynamical(rng, max_modes=8, kmax=8)
            closed = torus_from_real(ch.tau_u(d, dp))
            quad = ch.sigma_quadrature(d, dp, 128)
            assert torus_distance(closed, quad) < 1e-6

    def test_undersampling_rejected(self):
        d = ch.DynamicalDatum((ch.ChiralMode(8, a_plus=1.0),))
        with pytest.raises(ValueError):
            ch.sigma_quadrature(d, d, 64)


class TestValidationAndJson:
    def test_duplicate_mode_numbers_rejected(self):
        with pytest.raises(ValueError):
            ch.DynamicalDatum((ch.ChiralMode(1, 1.0), ch.ChiralMode(1, 2.0)))

    def test_nonpositive_mode_number_rejected(self):
        with pytest.raises(ValueError):
            ch.ChiralMode(0, 1.0)

    def test_non_finite_coefficient_rejected(self):
        with pytest.raises(ValueError):
            ch.ChiralMode(1, float("nan"))

    def test_character_json_roundtrip(self):
        rng = np.random.default_rng(16)
        h = rand_character(rng)
        doc = json.loads(json.dumps(ch.character_to_dict(h)))
        assert ch.character_from_dict(doc) == h

    def test_dynamical_json_roundtrip(self):
        rng = np.random.default_rng(17)
        d = rand_dynamical(rng)
        doc = json.loads(json.dumps(ch.dynamical_to_dict(d)))
        assert ch.dynamical_from_dict(doc) == d

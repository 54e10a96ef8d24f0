import math

import numpy as np
import pytest

from torusqft import testforms as tf
from torusqft.sampling import bump_profile, rand_test_form


def bump_form(s=0, k=1, center=0.0, width=0.8, n=801, amp=1.0):
    t0, dt, samples = bump_profile(center, width, n)
    return tf.SampledTestForm(
        (tf.FormComponent(s, k, t0, dt, tuple(amp * z for z in samples)),)
    )


class TestCoefficients:
    def test_zero_form(self):
        form = tf.SampledTestForm(())
        assert tf.propagator_coefficients(form).coeffs == {}

    def test_bump_transform_oracle(self):
        # c^+_{1,0} must equal ghat(1)/2 with ghat tabulated by quadrature
        form = bump_form(k=1, n=1601)
        comp = form.components[0]
        t = comp.times()
        ghat = np.trapezoid(comp.profile() * np.exp(-2j * math.pi * t), dx=comp.dt)
        cp, cm, dp, dm = tf.propagator_coefficients(form).get(1, 0)
        assert cp == pytest.approx(ghat / 2, abs=1e-12)
        assert cm == pytest.approx(ghat / 2, abs=1e-12)

    def test_conjugation_relations_for_real_forms(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            form = rand_test_form(rng)
            assert form.is_real()
            data = tf.propagator_coefficients(form)
            for (k, s), (cp, cm, dp, dm) in data.coeffs.items():
                assert dp == pytest.approx(-cm.conjugate(), abs=1e-12)
                assert dm == pytest.approx(-cp.conjugate(), abs=1e-12)

    def test_zero_mean_enforced(self):
        t0, dt, samples = bump_profile(0.0, 0.5, 101)
        form = tf.SampledTestForm(
            (
                tf.FormComponent(0, 0, t0, dt, samples),  # zero mode, dropped
                tf.FormComponent(0, 2, t0, dt, samples),
            )
        )
        assert {c.k for c in form.components} == {2}

    def test_noncompact_profile_rejected(self):
        with pytest.raises(ValueError):
            tf.SampledTestForm(
                (tf.FormComponent(0, 1, 0.0, 0.1, (1.0, 0.5, 0.2, 0.7)),)
            )


class TestMuTilde:
    def test_zero(self):
        empty = tf.TestFormModeData({})
        assert tf.mu_tilde(empty, empty) == 0.0

    def test_single_coefficient(self):
        data = tf.TestFormModeData({(1, 0): (0j, 0j, 1.0 + 0j, 0j)})
        assert tf.mu_tilde(data, data) == pytest.approx(1.0 / (4 * math.pi))

    def test_symmetric_on_real_forms(self):
        rng = np.random.default_rng(1)
        for _ in range(10):
            a = tf.propagator_coefficients(rand_test_form(rng))
            b = tf.propagator_coefficients(rand_test_form(rng))
            assert tf.mu_tilde(a, b) == pytest.approx(tf.mu_tilde(b, a), abs=1e-12)


class TestKernelOracle:
    def test_zero(self):
        form = tf.SampledTestForm(())
        assert tf.two_point_kernel_oracle(form, form, 64) == 0.0

    def test_agreement_with_coefficient_formula(self):
        rng = np.random.default_rng(2)
        for _ in range(10):
            fa, fb = rand_test_form(rng), rand_test_form(rng)
            coeff = tf.two_point_coefficients(
                tf.propagator_coefficients(fa), tf.propagator_coefficients(fb)
            )
            kern = tf.two_point_kernel_oracle(fa, fb, 64)
            assert abs(coeff - kern) < 1e-5

    def test_bump_pair_agreement(self):
        fa = bump_form(s=0, k=1, center=-0.2, width=0.7)
        fb = bump_form(s=0, k=1, center=0.3, width=0.6)
        coeff = tf.two_point_coefficients(
            tf.propagator_coefficients(fa), tf.propagator_coefficients(fb)
        )
        kern = tf.two_point_kernel_oracle(fa, fb, 64)
        assert abs(coeff - kern) < 1e-5

    def test_swap_conjugates_for_real_forms(self):
        rng = np.random.default_rng(3)
        fa, fb = rand_test_form(rng), rand_test_form(rng)
        ab = tf.two_point_kernel_oracle(fa, fb, 64)
        ba = tf.two_point_kernel_oracle(fb, fa, 64)
        assert ab == pytest.approx(ba.conjugate(), abs=1e-12)

    def test_unresolved_modes_rejected(self):
        form = bump_form(k=3)
        with pytest.raises(ValueError):
            tf.two_point_kernel_oracle(form, form, 16)


class TestJson:
    def test_roundtrip(self):
        rng = np.random.default_rng(4)
        form = rand_test_form(rng)
        back = tf.form_from_dict(tf.form_to_dict(form))
        assert back == form

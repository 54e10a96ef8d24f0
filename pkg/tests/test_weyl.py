import math

import numpy as np
import pytest

from torusqft import weyl
from torusqft import hadamard as hd
from torusqft import topo
from torusqft.characters import ChiralMode, DynamicalDatum
from torusqft.models import character_group_model, dynamical_group_model, topological_group_model
from torusqft.numerics import torus_from_real
from torusqft.sampling import rand_character, rand_dynamical, rand_topological, rand_weyl_element


def simple_model():
    """Integers with a half-integer twist: s(a, b) = a b / 4 mod 1."""
    return weyl.GroupModel(
        name="z-demo",
        zero=0,
        add=lambda a, b: a + b,
        neg=lambda a: -a,
        presymplectic=lambda a, b: torus_from_real((a * b - b * a) / 4.0),
        encode=lambda a: a,
    )


def quarter_twist_model():
    """Two commuting directions with s(e1, e2) = 1/4."""
    def form(a, b):
        return torus_from_real((a[0] * b[1] - a[1] * b[0]) / 4.0)

    return weyl.GroupModel(
        name="quarter",
        zero=(0, 0),
        add=lambda a, b: (a[0] + b[0], a[1] + b[1]),
        neg=lambda a: (-a[0], -a[1]),
        presymplectic=form,
        encode=lambda a: a,
    )


class TestGenerators:
    def test_unit(self):
        model = simple_model()
        one = weyl.unit(model)
        assert weyl.banach_norm(one) == 1.0
        assert list(one.terms.items()) == [(0, 1.0 + 0.0j)]

    def test_single_term_norm(self):
        model = simple_model()
        assert weyl.banach_norm(weyl.generator(model, 7)) == 1.0

    def test_addition_merges(self):
        model = simple_model()
        g = weyl.generator(model, 3)
        assert list((g + g).terms.values()) == [2.0 + 0.0j]


class TestMultiply:
    def test_quarter_twist_gives_i(self):
        model = quarter_twist_model()
        a = weyl.generator(model, (1, 0))
        b = weyl.generator(model, (0, 1))
        prod = weyl.multiply(a, b)
        ((g, alpha),) = prod.terms.items()
        assert g == (1, 1)
        assert alpha == pytest.approx(1j)

    def test_inverse_generator(self):
        model = quarter_twist_model()
        a = weyl.generator(model, (2, 5))
        b = weyl.generator(model, (-2, -5))
        prod = weyl.multiply(a, b)
        ((g, alpha),) = prod.terms.items()
        assert g == (0, 0)
        assert alpha == pytest.approx(1.0 + 0.0j)

    def test_associativity_random(self):
        model = quarter_twist_model()
        rng = np.random.default_rng(0)

        def sample(r):
            return (int(r.integers(-5, 6)), int(r.integers(-5, 6)))

        for _ in range(100):
            a = rand_weyl_element(rng, model, sample, 2)
            b = rand_weyl_element(rng, model, sample, 2)
            c = rand_weyl_element(rng, model, sample, 2)
            lhs = weyl.multiply(weyl.multiply(a, b), c)
            rhs = weyl.multiply(a, weyl.multiply(b, c))
            assert weyl.banach_norm(lhs - rhs) < 1e-12

    def test_mixed_models_rejected(self):
        with pytest.raises(weyl.MixedModelError):
            weyl.multiply(
                weyl.generator(simple_model(), 1),
                weyl.generator(simple_model(), 1),
            )


class TestAdjoint:
    def test_unit_fixed(self):
        model = simple_model()
        one = weyl.unit(model)
        assert weyl.residual_norm(weyl.adjoint(one), one) == 0.0

    def test_conjugate_linear(self):
        model = simple_model()
        a = weyl.generator(model, 4).scaled(2j)
        adj = weyl.adjoint(a)
        ((g, alpha),) = adj.terms.items()
        assert g == -4
        assert alpha == pytest.approx(-2j)

    def test_involutive(self):
        model = quarter_twist_model()
        rng = np.random.default_rng(1)

        def sample(r):
            return (int(r.integers(-5, 6)), int(r.integers(-5, 6)))

        for _ in range(50):
            a = rand_weyl_element(rng, model, sample, 3)
            assert weyl.banach_norm(weyl.adjoint(weyl.adjoint(a)) - a) < 1e-12
            assert weyl.banach_norm(weyl.adjoint(a)) == pytest.approx(weyl.banach_norm(a))


class TestBanachNorm:
    def test_example(self):
        model = simple_model()
        a = weyl.generator(model, 1).scaled(2.0) + weyl.generator(model, 2).scaled(-3j)
        assert weyl.banach_norm(a) == pytest.approx(5.0)

    def test_submultiplicative(self):
        model = quarter_twist_model()
        rng = np.random.default_rng(2)

        def sample(r):
            return (int(r.integers(-5, 6)), int(r.integers(-5, 6)))

        for _ in range(100):
            a = rand_weyl_element(rng, model, sample, 3)
            b = rand_weyl_element(rng, model, sample, 3)
            assert weyl.banach_norm(weyl.multiply(a, b)) <= (
                weyl.banach_norm(a) * weyl.banach_norm(b) + 1e-12
            )


class TestStates:
    def test_normalization_enforced(self):
        model = simple_model()
        with pytest.raises(ValueError):
            weyl.evaluate_state(lambda g: 0.0, weyl.unit(model))

    def test_unit_evaluates_to_one(self):
        model = simple_model()
        vac = weyl.vacuum_state_function(model)
        assert weyl.evaluate_state(vac, weyl.unit(model)) == 1.0

    def test_vacuum_picks_unit_coefficient(self):
        model = simple_model()
        vac = weyl.vacuum_state_function(model)
        a = weyl.unit(model).scaled(3.5) + weyl.generator(model, 2).scaled(7j)
        assert weyl.evaluate_state(vac, a) == pytest.approx(3.5)

    def test_linearity(self):
        model = simple_model()
        vac = weyl.vacuum_state_function(model)
        rng = np.random.default_rng(3)
        for _ in range(20):
            a = rand_weyl_element(rng, model, lambda r: int(r.integers(-5, 6)), 3)
            b = rand_weyl_element(rng, model, lambda r: int(r.integers(-5, 6)), 3)
            lhs = weyl.evaluate_state(vac, a + b)
            rhs = weyl.evaluate_state(vac, a) + weyl.evaluate_state(vac, b)
            assert lhs == pytest.approx(rhs)


class TestPositivity:
    def test_generator_squares_to_one(self):
        model = quarter_twist_model()
        vac = weyl.vacuum_state_function(model)
        a = weyl.generator(model, (3, 1))
        assert weyl.positivity_check(vac, a) == pytest.approx(1.0)

    def test_unit_minus_generator(self):
        model = simple_model()
        vac = weyl.vacuum_state_function(model)
        a = weyl.unit(model) - weyl.generator(model, 5)
        assert weyl.positivity_check(vac, a) == pytest.approx(2.0)

    def test_violation_reported(self):
        model = simple_model()

        def bad_state(g):
            return 1.0 if g == 0 else 2.0  # not positive definite

        a = weyl.unit(model) - weyl.generator(model, 1)
        with pytest.raises(weyl.PositivityError):
            weyl.positivity_check(bad_state, a)

    def test_quasifree_state_positive_on_dynamical_model(self):
        model = dynamical_group_model()
        rng = np.random.default_rng(4)
        for _ in range(200):
            a = rand_weyl_element(
                rng, model, lambda r: rand_dynamical(r, max_modes=2, kmax=4, scale=0.7),
                n_terms=int(rng.integers(2, 5)),
            )
            assert weyl.positivity_check(hd.omega_mu, a, eps=1e-9) >= -1e-9

    def test_lattice_states_positive_on_topological_model(self):
        model = topological_group_model(2, 4, 2, 2)
        rng = np.random.default_rng(5)
        for _ in range(200):
            a = rand_weyl_element(
                rng, model, lambda r: rand_topological(r, 2, 4, 2, 2),
                n_terms=int(rng.integers(2, 5)),
            )
            assert weyl.positivity_check(topo.omega_t, a, eps=1e-9) >= -1e-9
            assert weyl.positivity_check(topo.omega_t0, a, eps=1e-9) >= -1e-9


class TestRegisteredModels:
    def test_sample_sanity_all_models(self):
        rng = np.random.default_rng(6)
        char_model = character_group_model()
        char_model.check_samples([rand_character(rng, max_modes=2, kmax=3) for _ in range(4)])
        dyn_model = dynamical_group_model()
        dyn_model.check_samples([rand_dynamical(rng, max_modes=2, kmax=3) for _ in range(4)])
        top_model = topological_group_model(1, 2, 1, 1)
        top_model.check_samples([rand_topological(rng, 1, 2, 1, 1) for _ in range(4)])

    def test_wraparound_keys_merge(self):
        # adding 0.3 and 0.7 lands a rounding error below 1.0; the key must fold
        model = character_group_model()
        import torusqft.characters as ch

        g = ch.FourierCharacter(h0=torus_from_real(0.3))
        ginv = -g
        prod = weyl.multiply(weyl.generator(model, g), weyl.generator(model, ginv))
        vac = weyl.vacuum_state_function(model)
        assert weyl.evaluate_state(vac, prod) == pytest.approx(1.0)

import math

import pytest
from hypothesis import given, strategies as st

from torusqft.numerics import (
    DEFAULT_TOLERANCES,
    TORUS_ZERO,
    Tolerances,
    TorusValue,
    require_finite,
    torus_distance,
    torus_from_real,
)

finite_reals = st.floats(
    min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False
)


def test_reduction_examples():
    assert torus_from_real(0.0).rep == 0.0
    assert torus_from_real(-0.25).rep == 0.75
    # 2 pi reduced mod 1, evaluated independently from the constant
    assert torus_from_real(2 * math.pi).rep == pytest.approx(
        2 * math.pi - 6, abs=1e-12
    )


def test_distance_examples():
    assert torus_distance(torus_from_real(0.1), torus_from_real(0.9)) == pytest.approx(0.2)
    assert torus_distance(torus_from_real(0.37), torus_from_real(0.37)) == 0.0
    assert torus_distance(torus_from_real(0.0), torus_from_real(0.5)) == 0.5


def test_rejects_non_finite():
    with pytest.raises(ValueError):
        torus_from_real(float("nan"))
    with pytest.raises(ValueError):
        torus_from_real(float("inf"))
    with pytest.raises(ValueError):
        require_finite(complex(1.0, float("nan")))


def test_tolerances_positive():
    assert DEFAULT_TOLERANCES.eps_torus == 1e-9
    assert DEFAULT_TOLERANCES.eps_quadrature == 1e-6
    assert DEFAULT_TOLERANCES.eps_linear == 1e-12
    with pytest.raises(ValueError):
        Tolerances(eps_torus=0.0)


@given(finite_reals)
def test_representative_in_range(x):
    rep = torus_from_real(x).rep
    assert 0.0 <= rep < 1.0


@given(finite_reals, st.integers(min_value=-1000, max_value=1000))
def test_integer_periodicity(x, n):
    a = torus_from_real(x + n)
    b = torus_from_real(x)
    assert torus_distance(a, b) < 1e-9


@given(finite_reals, finite_reals, finite_reals)
def test_group_laws(x, y, z):
    a, b, c = torus_from_real(x), torus_from_real(y), torus_from_real(z)
    assert torus_distance((a + b) + c, a + (b + c)) < DEFAULT_TOLERANCES.eps_linear * 10
    assert torus_distance(a + b, b + a) < DEFAULT_TOLERANCES.eps_linear
    assert torus_distance(a + (-a), TORUS_ZERO) < DEFAULT_TOLERANCES.eps_linear


@given(finite_reals, finite_reals, finite_reals)
def test_distance_metric(x, y, z):
    a, b, c = torus_from_real(x), torus_from_real(y), torus_from_real(z)
    assert torus_distance(a, a) == 0.0
    assert torus_distance(a, b) == torus_distance(b, a)
    assert torus_distance(a, c) <= torus_distance(a, b) + torus_distance(b, c) + 1e-15


def test_integer_scaling():
    x = torus_from_real(0.25)
    assert x.scaled(3).rep == pytest.approx(0.75)
    assert x.scaled(-1).rep == pytest.approx(0.75)
    assert x.scaled(4).rep == pytest.approx(0.0)

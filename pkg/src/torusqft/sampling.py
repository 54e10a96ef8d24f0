"""Seeded random generators for configurations, lattice elements and test forms.

Shared by the verification runner and the test suite; everything is a pure
function of the supplied numpy generator, so runs are reproducible from the
seed alone.
"""

from __future__ import annotations

import math

import numpy as np

from . import weyl
from .characters import ChiralMode, DynamicalDatum, FourierCharacter
from .numerics import torus_from_real
from .testforms import FormComponent, SampledTestForm
from .topo import TopologicalElement


def rand_dynamical(rng: np.random.Generator, max_modes: int = 8, kmax: int = 8,
                   scale: float = 1.0) -> DynamicalDatum:
    count = int(rng.integers(1, max_modes + 1))
    ks = rng.choice(np.arange(1, kmax + 1), size=min(count, kmax), replace=False)
    return DynamicalDatum(
        ChiralMode(int(k), *(scale * rng.normal(size=4)).tolist()) for k in sorted(ks)
    )


def rand_character(rng: np.random.Generator, max_modes: int = 4, kmax: int = 6) -> FourierCharacter:
    dyn = rand_dynamical(rng, max_modes=max_modes, kmax=kmax)
    return FourierCharacter(
        h0=torus_from_real(float(rng.random())),
        ht0=torus_from_real(float(rng.random())),
        n=int(rng.integers(-3, 4)),
        nt=int(rng.integers(-3, 4)),
        modes=dyn.modes,
    )


def rand_topological(
    rng: np.random.Generator, k: int, m: int, rank: int, rank_tilde: int
) -> TopologicalElement:
    return TopologicalElement(
        k,
        m,
        tuple(torus_from_real(float(x)) for x in rng.random(rank_tilde)),
        tuple(torus_from_real(float(x)) for x in rng.random(rank)),
        tuple(int(x) for x in rng.integers(-3, 4, size=rank)),
        tuple(int(x) for x in rng.integers(-3, 4, size=rank_tilde)),
    )


def rand_weyl_element(
    rng: np.random.Generator, model: weyl.GroupModel, sample_group, n_terms: int = 4
) -> weyl.WeylElement:
    out = weyl.WeylElement(model)
    for _ in range(n_terms):
        coeff = complex(rng.normal(), rng.normal())
        out = out + weyl.generator(model, sample_group(rng)).scaled(coeff)
    return out


def bump_profile(center: float, halfwidth: float, n: int) -> tuple[float, float, tuple[complex, ...]]:
    """Smooth compactly supported bump exp(-1/(1-x^2)) on [c-w, c+w].

    Returns (t0, dt, samples); the samples vanish at both grid ends, as the
    propagator quadratures require.
    """
    t0 = center - halfwidth
    dt = 2.0 * halfwidth / (n - 1)
    samples = []
    for j in range(n):
        x = (t0 + j * dt - center) / halfwidth
        if abs(x) >= 1.0:
            samples.append(0.0 + 0.0j)
        else:
            samples.append(complex(math.exp(-1.0 / (1.0 - x * x)), 0.0))
    return t0, dt, tuple(samples)


def rand_test_form(rng: np.random.Generator, kmax: int = 3, n_samples: int = 257) -> SampledTestForm:
    comps = []
    for _ in range(int(rng.integers(1, 4))):
        s = int(rng.integers(0, 2))
        k = int(rng.integers(1, kmax + 1))
        center = float(rng.uniform(-0.5, 0.5))
        width = float(rng.uniform(0.4, 0.9))
        t0, dt, samples = bump_profile(center, width, n_samples)
        amp = float(rng.normal())
        comps.append(
            FormComponent(s, k, t0, dt, tuple(amp * z for z in samples))
        )
    return SampledTestForm(tuple(comps))

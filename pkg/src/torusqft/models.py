"""Canonical pre-symplectic group models registered with the Weyl machinery.

Three models cover the worked sectors: full cylinder configurations, purely
dynamical data, and topological lattice elements.  Torus and coefficient
components are quantized to the key grid for map identity.

The dynamical model's cocycle deserves a note.  The symplectic form tau_u
carries a 2 pi k mode weight, and the quasifree state exp(-mu/2) is positive
for the Weyl relation of its one-particle structure, whose twist is
exp(-(i/2) tau_u) = exp(2 pi i (-tau_u / 4 pi)).  Feeding tau_u mod 1
directly into the exp(2 pi i s) relation instead produces an algebra on
which exp(-mu/2) fails positivity on three-term combinations, so the
quantization twist used here is s(f, g) = -tau_u(f, g) / (4 pi) mod 1.
The circle-valued tau_u itself is unchanged and remains what the sector
product reduces mod 1.
"""

from __future__ import annotations

import math

from . import weyl
from .characters import CHARACTER_ZERO, DynamicalDatum, FourierCharacter, sigma, tau_u
from .numerics import torus_distance, torus_from_real
from .topo import topological_group_model  # noqa: F401  (re-exported)


def _mode_key(modes):
    return tuple(
        (
            m.k,
            weyl.quantize(m.a_plus),
            weyl.quantize(m.a_minus),
            weyl.quantize(m.b_plus),
            weyl.quantize(m.b_minus),
        )
        for m in modes
    )


def _modes_close(xs, ys, tol: float) -> bool:
    ax = {m.k: m for m in xs}
    ay = {m.k: m for m in ys}
    for k in set(ax) | set(ay):
        mx = ax.get(k)
        my = ay.get(k)
        for name in ("a_plus", "a_minus", "b_plus", "b_minus"):
            vx = getattr(mx, name) if mx is not None else 0.0
            vy = getattr(my, name) if my is not None else 0.0
            if abs(vx - vy) > tol:
                return False
    return True


def _characters_close(x: FourierCharacter, y: FourierCharacter, tol: float) -> bool:
    return (
        x.n == y.n
        and x.nt == y.nt
        and torus_distance(x.h0, y.h0) <= tol
        and torus_distance(x.ht0, y.ht0) <= tol
        and _modes_close(x.modes, y.modes, tol)
    )


def character_group_model() -> weyl.GroupModel:
    """Full configuration pairs under the circle-valued product sigma."""
    return weyl.GroupModel(
        name="characters(RxS1)",
        zero=CHARACTER_ZERO,
        add=lambda a, b: a + b,
        neg=lambda a: -a,
        presymplectic=sigma,
        encode=lambda h: (
            weyl.quantize_torus(h.h0.rep),
            weyl.quantize_torus(h.ht0.rep),
            h.n,
            h.nt,
            _mode_key(h.modes),
        ),
        close=_characters_close,
    )


def dynamical_group_model() -> weyl.GroupModel:
    """Dynamical data under the quantization twist -tau_u/(4 pi) mod 1."""
    return weyl.GroupModel(
        name="dynamical(RxS1)",
        zero=DynamicalDatum(()),
        add=lambda a, b: a + b,
        neg=lambda a: -a,
        presymplectic=lambda a, b: torus_from_real(-tau_u(a, b) / (4.0 * math.pi)),
        encode=lambda d: _mode_key(d.modes),
        close=lambda x, y, tol: _modes_close(x.modes, y.modes, tol),
    )

"""Circle-group scalars and shared tolerance configuration.

Values of holonomies, pre-symplectic products and cohomological pairings
live on the unit circle T = R/Z.  A ``TorusValue`` keeps the canonical
representative in [0, 1); comparisons always go through ``torus_distance``,
never through raw representative equality, because 0.999... and 0.000...
are the same point of the circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Numerical slack used across the engine.

    eps_torus:      mod-1 equality of circle values
    eps_quadrature: quadrature oracles vs closed forms
    eps_linear:     plain floating-point linear algebra
    """

    eps_torus: float = 1e-9
    eps_quadrature: float = 1e-6
    eps_linear: float = 1e-12

    def __post_init__(self):
        if not (self.eps_torus > 0 and self.eps_quadrature > 0 and self.eps_linear > 0):
            raise ValueError("tolerances must be strictly positive")


DEFAULT_TOLERANCES = Tolerances()


def require_finite(x, name="value"):
    """Reject NaN/Inf before it can enter an algebra element."""
    if isinstance(x, complex):
        if not (math.isfinite(x.real) and math.isfinite(x.imag)):
            raise ValueError(f"{name} must be finite, got {x!r}")
        return x
    xf = float(x)
    if not math.isfinite(xf):
        raise ValueError(f"{name} must be finite, got {x!r}")
    return xf


@dataclass(frozen=True)
class TorusValue:
    """A point of R/Z, stored as the canonical representative in [0, 1)."""

    rep: float

    def __post_init__(self):
        if not (0.0 <= self.rep < 1.0):
            raise ValueError(f"representative {self.rep} outside [0, 1)")

    def __add__(self, other: "TorusValue") -> "TorusValue":
        return torus_from_real(self.rep + other.rep)

    def __sub__(self, other: "TorusValue") -> "TorusValue":
        return torus_from_real(self.rep - other.rep)

    def __neg__(self) -> "TorusValue":
        return torus_from_real(-self.rep)

    def scaled(self, n: int) -> "TorusValue":
        """Integer multiple n*x on the circle (T is only a Z-module)."""
        return torus_from_real(self.rep * int(n))

    def __float__(self) -> float:
        return self.rep


def torus_from_real(x) -> TorusValue:
    """Reduce a real number mod Z to its canonical representative in [0, 1).

    ``x - floor(x)`` may round up to exactly 1.0 for tiny negative inputs;
    that case is folded back to 0.0.
    """
    xf = require_finite(x, "torus value")
    rep = xf - math.floor(xf)
    if rep >= 1.0:
        rep = 0.0
    return TorusValue(rep)


TORUS_ZERO = torus_from_real(0.0)


def torus_distance(a: TorusValue, b: TorusValue) -> float:
    """Geodesic distance on the circle, min(|a-b|, 1-|a-b|) of representatives."""
    d = abs(a.rep - b.rep)
    return min(d, 1.0 - d)


def torus_is_zero(a: TorusValue, eps: float = DEFAULT_TOLERANCES.eps_torus) -> bool:
    return torus_distance(a, TORUS_ZERO) < eps

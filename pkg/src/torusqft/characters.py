"""Degree-(1,1) gauge configurations on the cylinder R x S^1.

A configuration is a dual pair (h, h~) of circle-valued fields encoded by
truncated Fourier data.  With light-cone phases x_pm = 2*pi*k*(t +- theta)
the scalar lifts read

    h  = h0  + n*theta  - nt*t + phi      (mod Z)
    h~ = ht0 + nt*theta - n*t  + phi~     (mod Z)

    phi  = sum_k  -b_k^- cos(x_-) - b_k^+ cos(x_+)
                  +a_k^- sin(x_-) + a_k^+ sin(x_+)
    phi~ = sum_k  -b_k^- cos(x_-) + b_k^+ cos(x_+)
                  +a_k^- sin(x_-) - a_k^+ sin(x_+)

One coefficient set (a_k^pm, b_k^pm) serves both members of the pair, so the
field-strength constraint curv h = * curv h~ holds by construction.  The
metric is the ultrastatic -dt(x)dt + dtheta(x)dtheta with the circle of unit
total measure; the Hodge dual acts as *dtheta = -dt, *dt = -dtheta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import TorusValue, require_finite, torus_from_real
from .topo import TopologicalElement

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ChiralMode:
    """Coefficients of the four chiral oscillators at mode number k >= 1."""

    k: int
    a_plus: float = 0.0
    a_minus: float = 0.0
    b_plus: float = 0.0
    b_minus: float = 0.0

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise ValueError(f"mode number must be a positive integer, got {self.k}")
        for name in ("a_plus", "a_minus", "b_plus", "b_minus"):
            require_finite(getattr(self, name), name)

    def is_zero(self) -> bool:
        return self.a_plus == 0.0 and self.a_minus == 0.0 and self.b_plus == 0.0 and self.b_minus == 0.0


def _normalize_modes(modes) -> tuple[ChiralMode, ...]:
    """Sort by k, drop exactly-zero modes, reject duplicate mode numbers."""
    cleaned = sorted((m for m in modes if not m.is_zero()), key=lambda m: m.k)
    ks = [m.k for m in cleaned]
    if len(set(ks)) != len(ks):
        raise ValueError(f"duplicate mode numbers in {ks}")
    return tuple(cleaned)


def _merge_modes(xs, ys, sign=1.0):
    table: dict[int, list[float]] = {}
    for m in xs:
        table[m.k] = [m.a_plus, m.a_minus, m.b_plus, m.b_minus]
    for m in ys:
        row = table.setdefault(m.k, [0.0, 0.0, 0.0, 0.0])
        row[0] += sign * m.a_plus
        row[1] += sign * m.a_minus
        row[2] += sign * m.b_plus
        row[3] += sign * m.b_minus
    return _normalize_modes(
        ChiralMode(k, *row) for k, row in table.items()
    )


@dataclass(frozen=True)
class DynamicalDatum:
    """The purely dynamical sector d phi = * d phi~: a finite list of chiral modes."""

    modes: tuple[ChiralMode, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "modes", _normalize_modes(self.modes))

    def __add__(self, other: "DynamicalDatum") -> "DynamicalDatum":
        return DynamicalDatum(_merge_modes(self.modes, other.modes))

    def __sub__(self, other: "DynamicalDatum") -> "DynamicalDatum":
        return DynamicalDatum(_merge_modes(self.modes, other.modes, sign=-1.0))

    def __neg__(self) -> "DynamicalDatum":
        return self.scaled(-1.0)

    def scaled(self, c: float) -> "DynamicalDatum":
        return DynamicalDatum(
            ChiralMode(m.k, c * m.a_plus, c * m.a_minus, c * m.b_plus, c * m.b_minus)
            for m in self.modes
        )

    def max_mode(self) -> int:
        return self.modes[-1].k if self.modes else 0


@dataclass(frozen=True)
class FourierCharacter:
    """A dual pair (h, h~) with torus constants, winding numbers and modes."""

    h0: TorusValue = torus_from_real(0.0)
    ht0: TorusValue = torus_from_real(0.0)
    n: int = 0
    nt: int = 0
    modes: tuple[ChiralMode, ...] = ()

    def __post_init__(self):
        if int(self.n) != self.n or int(self.nt) != self.nt:
            raise ValueError("winding numbers must be integers")
        object.__setattr__(self, "modes", _normalize_modes(self.modes))

    def __add__(self, other: "FourierCharacter") -> "FourierCharacter":
        return FourierCharacter(
            self.h0 + other.h0,
            self.ht0 + other.ht0,
            self.n + other.n,
            self.nt + other.nt,
            _merge_modes(self.modes, other.modes),
        )

    def __neg__(self) -> "FourierCharacter":
        return FourierCharacter(
            -self.h0,
            -self.ht0,
            -self.n,
            -self.nt,
            tuple(
                ChiralMode(m.k, -m.a_plus, -m.a_minus, -m.b_plus, -m.b_minus)
                for m in self.modes
            ),
        )

    def dynamical(self) -> DynamicalDatum:
        return DynamicalDatum(self.modes)


CHARACTER_ZERO = FourierCharacter()


# -- curvature ---------------------------------------------------------------


@dataclass(frozen=True)
class CurvatureMode:
    """Mode-k amplitudes of the field strength, already scaled by 2*pi*k.

    The dt component of the curvature carries, at phase x_pm = 2*pi*k*(t +- theta),

        sin_minus*sin(x_-) + cos_minus*cos(x_-)
        + sin_plus*sin(x_+) + cos_plus*cos(x_+)

    and the dtheta component the chirality-signed combination

        -sin_minus*sin(x_-) - cos_minus*cos(x_-)
        + sin_plus*sin(x_+) + cos_plus*cos(x_+).
    """

    k: int
    sin_minus: float
    cos_minus: float
    sin_plus: float
    cos_plus: float

    def dt_at(self, t: float, theta: float) -> float:
        xm = TWO_PI * self.k * (t - theta)
        xp = TWO_PI * self.k * (t + theta)
        return (
            self.sin_minus * math.sin(xm)
            + self.cos_minus * math.cos(xm)
            + self.sin_plus * math.sin(xp)
            + self.cos_plus * math.cos(xp)
        )

    def dtheta_at(self, t: float, theta: float) -> float:
        xm = TWO_PI * self.k * (t - theta)
        xp = TWO_PI * self.k * (t + theta)
        return (
            -self.sin_minus * math.sin(xm)
            - self.cos_minus * math.cos(xm)
            + self.sin_plus * math.sin(xp)
            + self.cos_plus * math.cos(xp)
        )


@dataclass(frozen=True)
class CurvatureData:
    """Field strength curv h = n dtheta - nt dt + d phi in mode amplitudes."""

    n: int
    nt: int
    modes: tuple[CurvatureMode, ...]

    def dt_component(self, t: float, theta: float) -> float:
        return -self.nt + sum(m.dt_at(t, theta) for m in self.modes)

    def dtheta_component(self, t: float, theta: float) -> float:
        return self.n + sum(m.dtheta_at(t, theta) for m in self.modes)

    def closedness_residual(self, t: float, theta: float, step: float = 1e-5) -> float:
        """|d(curv h)| sampled by central differences: dt(dtheta-part) - dtheta(dt-part)."""
        ddt = (self.dtheta_component(t + step, theta) - self.dtheta_component(t - step, theta)) / (2 * step)
        ddtheta = (self.dt_component(t, theta + step) - self.dt_component(t, theta - step)) / (2 * step)
        return abs(ddt - ddtheta)


def curvature(h: FourierCharacter) -> CurvatureData:
    """Field strength of the pair; term-by-term derivative of the mode series.

    Differentiation swaps the sin/cos roles of (a, b) and scales by 2*pi*k:
    the dt amplitudes are (sin, cos) = 2*pi*k*(b, a) per chirality.
    """
    modes = tuple(
        CurvatureMode(
            m.k,
            sin_minus=TWO_PI * m.k * m.b_minus,
            cos_minus=TWO_PI * m.k * m.a_minus,
            sin_plus=TWO_PI * m.k * m.b_plus,
            cos_plus=TWO_PI * m.k * m.a_plus,
        )
        for m in h.modes
    )
    return CurvatureData(h.n, h.nt, modes)


def characteristic_class(h: FourierCharacter) -> tuple[int, int]:
    """The pair of winding numbers (n, nt) surviving in integer cohomology."""
    return (h.n, h.nt)


# -- Cauchy restriction ------------------------------------------------------


@dataclass(frozen=True)
class CauchyRestriction:
    """t = 0 restriction of the pair to the circle.

    h restricts to  h0 + n*theta + sum cos_h[k] cos(2 pi k theta) + sin_h[k] sin(...)
    and h~ analogously with (ht0, nt, cos_ht, sin_ht).  Coefficient arrays are
    indexed by position in ``ks``.
    """

    h0: TorusValue
    n: int
    ht0: TorusValue
    nt: int
    ks: tuple[int, ...]
    cos_h: tuple[float, ...]
    sin_h: tuple[float, ...]
    cos_ht: tuple[float, ...]
    sin_ht: tuple[float, ...]

    def sample_phi(self, theta):
        """Sample the mode part of the h restriction (winding excluded)."""
        theta = np.asarray(theta, dtype=float)
        out = np.zeros_like(theta)
        for k, c, s in zip(self.ks, self.cos_h, self.sin_h):
            out += c * np.cos(TWO_PI * k * theta) + s * np.sin(TWO_PI * k * theta)
        return out

    def sample_phi_tilde(self, theta):
        theta = np.asarray(theta, dtype=float)
        out = np.zeros_like(theta)
        for k, c, s in zip(self.ks, self.cos_ht, self.sin_ht):
            out += c * np.cos(TWO_PI * k * theta) + s * np.sin(TWO_PI * k * theta)
        return out

    def sample_dphi(self, theta):
        """theta-derivative of the h mode part, differentiated term by term."""
        theta = np.asarray(theta, dtype=float)
        out = np.zeros_like(theta)
        for k, c, s in zip(self.ks, self.cos_h, self.sin_h):
            w = TWO_PI * k
            out += -c * w * np.sin(w * theta) + s * w * np.cos(w * theta)
        return out

    def sample_dphi_tilde(self, theta):
        theta = np.asarray(theta, dtype=float)
        out = np.zeros_like(theta)
        for k, c, s in zip(self.ks, self.cos_ht, self.sin_ht):
            w = TWO_PI * k
            out += -c * w * np.sin(w * theta) + s * w * np.cos(w * theta)
        return out


def restrict_to_cauchy(h: FourierCharacter) -> CauchyRestriction:
    """Restriction of (h, h~) to the circle t = 0.

    Setting t = 0 in the mode series collapses the chiralities into
    cos/sin coefficients on S^1:

        h:  cos -> -b^- - b^+,  sin -> a^+ - a^-
        h~: cos ->  b^+ - b^-,  sin -> -a^+ - a^-
    """
    ks = tuple(m.k for m in h.modes)
    return CauchyRestriction(
        h0=h.h0,
        n=h.n,
        ht0=h.ht0,
        nt=h.nt,
        ks=ks,
        cos_h=tuple(-m.b_minus - m.b_plus for m in h.modes),
        sin_h=tuple(m.a_plus - m.a_minus for m in h.modes),
        cos_ht=tuple(m.b_plus - m.b_minus for m in h.modes),
        sin_ht=tuple(-m.a_plus - m.a_minus for m in h.modes),
    )


# -- sector decomposition ----------------------------------------------------


def decompose(h: FourierCharacter) -> tuple[TopologicalElement, DynamicalDatum]:
    """Split into the rank-1 topological element and the dynamical modes.

    The cylinder has no torsion, so the pair of sectors is exhaustive and
    recomposition is the identity.
    """
    top = TopologicalElement(
        k=1,
        m=2,
        u=(h.h0,),
        ut=(h.ht0,),
        v=(h.n,),
        vt=(h.nt,),
    )
    return top, DynamicalDatum(h.modes)


def recompose(top: TopologicalElement, dyn: DynamicalDatum) -> FourierCharacter:
    if top.rank() != 1 or top.rank_tilde() != 1:
        raise ValueError("cylinder characters carry rank-1 topological data")
    return FourierCharacter(
        h0=top.u[0],
        ht0=top.ut[0],
        n=top.v[0],
        nt=top.vt[0],
        modes=dyn.modes,
    )


# -- pre-symplectic products -------------------------------------------------


def tau_u(d: DynamicalDatum, dp: DynamicalDatum) -> float:
    """Symplectic product of dynamical data, as an unreduced real number.

    sum_k 2 pi k ( b+ a+' + b- a-' - a+ b+' - a- b-' ); weakly non-degenerate
    and antisymmetric.  The mod-Z reduction of this value is the dynamical
    part of the full pre-symplectic product.
    """
    by_k = {m.k: m for m in dp.modes}
    total = 0.0
    for m in d.modes:
        mp = by_k.get(m.k)
        if mp is None:
            continue
        total += TWO_PI * m.k * (
            m.b_plus * mp.a_plus
            + m.b_minus * mp.a_minus
            - m.a_plus * mp.b_plus
            - m.a_minus * mp.b_minus
        )
    return total


def sigma(h: FourierCharacter, hp: FourierCharacter) -> TorusValue:
    """Pre-symplectic product of two configuration pairs, valued in R/Z.

    The topological block is nt'*h0 - n*ht0' + n'*ht0 - nt*h0'; the mode
    block is the 2*pi*k chiral sum, reduced mod Z at the end.
    """
    topological = (
        h.h0.rep * hp.nt
        - hp.ht0.rep * h.n
        + h.ht0.rep * hp.n
        - hp.h0.rep * h.nt
    )
    return torus_from_real(topological + tau_u(h.dynamical(), hp.dynamical()))


def sigma_quadrature(
    d: DynamicalDatum, dp: DynamicalDatum, n_points: int
) -> TorusValue:
    """Quadrature oracle for the dynamical part of the product.

    Integrates phi d(phi~') + phi~ d(phi') over the unit-measure circle using
    the t = 0 restrictions, with the equispaced (periodic trapezoidal) rule.
    Independent of the closed-form mode sum; must agree with it within the
    quadrature tolerance.
    """
    kmax = max(d.max_mode(), dp.max_mode())
    if kmax and n_points < 16 * kmax:
        raise ValueError(
            f"{n_points} points cannot resolve mode {kmax}; need >= {16 * kmax}"
        )
    if n_points < 16:
        raise ValueError("need at least 16 quadrature points")
    r = restrict_to_cauchy(FourierCharacter(modes=d.modes))
    rp = restrict_to_cauchy(FourierCharacter(modes=dp.modes))
    theta = np.arange(n_points) / n_points
    integrand = r.sample_phi(theta) * rp.sample_dphi_tilde(theta) + r.sample_phi_tilde(
        theta
    ) * rp.sample_dphi(theta)
    return torus_from_real(float(np.mean(integrand)))


# -- JSON encoding -----------------------------------------------------------


def mode_to_dict(m: ChiralMode) -> dict:
    return {
        "k": m.k,
        "a_plus": m.a_plus,
        "a_minus": m.a_minus,
        "b_plus": m.b_plus,
        "b_minus": m.b_minus,
    }


def mode_from_dict(d: dict) -> ChiralMode:
    return ChiralMode(
        k=int(d["k"]),
        a_plus=float(d.get("a_plus", 0.0)),
        a_minus=float(d.get("a_minus", 0.0)),
        b_plus=float(d.get("b_plus", 0.0)),
        b_minus=float(d.get("b_minus", 0.0)),
    )


def character_to_dict(h: FourierCharacter) -> dict:
    return {
        "h0": h.h0.rep,
        "ht0": h.ht0.rep,
        "n": h.n,
        "nt": h.nt,
        "modes": [mode_to_dict(m) for m in h.modes],
    }


def character_from_dict(d: dict) -> FourierCharacter:
    return FourierCharacter(
        h0=torus_from_real(float(d.get("h0", 0.0))),
        ht0=torus_from_real(float(d.get("ht0", 0.0))),
        n=int(d.get("n", 0)),
        nt=int(d.get("nt", 0)),
        modes=tuple(mode_from_dict(m) for m in d.get("modes", [])),
    )


def dynamical_to_dict(d: DynamicalDatum) -> dict:
    return {"modes": [mode_to_dict(m) for m in d.modes]}


def dynamical_from_dict(d: dict) -> DynamicalDatum:
    return DynamicalDatum(mode_from_dict(m) for m in d.get("modes", []))

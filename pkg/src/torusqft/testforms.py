"""Smeared-observable sector: compactly supported test one-forms on the cylinder.

A test form enters as a sum of separable components psi_s(t, theta) =
g(t) cos(2 pi k theta), one per (component index s, mode number k), with the
t-profile g sampled on a uniform grid covering its support.  Profiles may be
complex; real profiles give real forms.  Mean-zero in theta is enforced by
dropping any k = 0 content before use.

Two independent routes evaluate the two-point pairing on such forms:

* transform route: the four frequency coefficients per (k, s)

      c_{k,s}^+- = int dt dtheta e^(-2 pi i k t) e^(-+ 2 pi i k theta) psi_s
      d_{k,s}^+- = -int dt dtheta e^(+2 pi i k t) e^(-+ 2 pi i k theta) psi_s

  feed the mode formula sum 1/(4 pi k) conj(d~) d;

* kernel route: double quadrature of the explicit kernel
  e^(-2 pi i k (t - t')) cos(2 pi k (theta - theta')) / (2 pi k)
  against psi~_0 psi_0 + psi~_1 psi_1.

The real part of either is the symmetric form mu~; the routes must agree
within quadrature tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class FormComponent:
    """One separable component g(t) cos(2 pi k theta) of psi_s."""

    s: int
    k: int
    t0: float
    dt: float
    samples: tuple[complex, ...]

    def __post_init__(self):
        if self.s not in (0, 1):
            raise ValueError("component index s must be 0 or 1")
        if self.k < 0:
            raise ValueError("mode number must be nonnegative")
        if self.dt <= 0:
            raise ValueError("grid spacing must be positive")
        if len(self.samples) < 4:
            raise ValueError("need at least 4 profile samples")

    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(len(self.samples))

    def profile(self) -> np.ndarray:
        return np.asarray(self.samples, dtype=complex)

    def check_compact(self, eps: float = 1e-12):
        p = self.profile()
        if abs(p[0]) > eps or abs(p[-1]) > eps:
            raise ValueError(
                "t-profile does not vanish at the grid boundary; support not covered"
            )

    def time_transform(self, k: int, sign: int) -> complex:
        """Trapezoidal int g(t) e^(sign * 2 pi i k t) dt on the component grid."""
        t = self.times()
        integrand = self.profile() * np.exp(sign * 2.0j * math.pi * k * t)
        return complex(np.trapezoid(integrand, dx=self.dt))


@dataclass(frozen=True)
class SampledTestForm:
    """A finite sum of separable components, mean-zero in theta."""

    components: tuple[FormComponent, ...]

    def __post_init__(self):
        # drop the circle average: k = 0 components carry the zero mode
        kept = tuple(c for c in self.components if c.k >= 1)
        for c in kept:
            c.check_compact()
        object.__setattr__(self, "components", kept)

    def max_mode(self) -> int:
        return max((c.k for c in self.components), default=0)

    def is_real(self, eps: float = 0.0) -> bool:
        return all(
            abs(x.imag) <= eps for c in self.components for x in c.samples
        )


@dataclass(frozen=True)
class TestFormModeData:
    """Frequency coefficients (c^+, c^-, d^+, d^-) indexed by (k, s)."""

    coeffs: dict

    def get(self, k: int, s: int) -> tuple[complex, complex, complex, complex]:
        return self.coeffs.get((k, s), (0j, 0j, 0j, 0j))


def propagator_coefficients(form: SampledTestForm) -> TestFormModeData:
    """Quadrature evaluation of the four frequency integrals per (k, s).

    A cos(2 pi k0 theta) profile meets e^(-+ 2 pi i k theta) only at k = k0,
    where the circle integral contributes 1/2; the t-transforms are done by
    trapezoid on each component's own grid.  For real profiles the results
    obey d^+ = -conj(c^-) and d^- = -conj(c^+).
    """
    out: dict[tuple[int, int], list[complex]] = {}
    for c in form.components:
        ghat_minus = c.time_transform(c.k, -1)  # int g e^(-2 pi i k t)
        ghat_plus = c.time_transform(c.k, +1)
        entry = out.setdefault((c.k, c.s), [0j, 0j, 0j, 0j])
        entry[0] += 0.5 * ghat_minus  # c^+
        entry[1] += 0.5 * ghat_minus  # c^-
        entry[2] += -0.5 * ghat_plus  # d^+
        entry[3] += -0.5 * ghat_plus  # d^-
    return TestFormModeData({key: tuple(val) for key, val in out.items()})


def two_point_coefficients(a: TestFormModeData, b: TestFormModeData) -> complex:
    """Mode formula for the pairing: sum 1/(4 pi k) conj(d~^pm) d^pm over (k, s)."""
    total = 0.0 + 0.0j
    keys = set(a.coeffs) | set(b.coeffs)
    for k, s in keys:
        _, _, da_p, da_m = a.get(k, s)
        _, _, db_p, db_m = b.get(k, s)
        total += (da_p.conjugate() * db_p + da_m.conjugate() * db_m) / (4.0 * math.pi * k)
    return total


def mu_tilde(a: TestFormModeData, b: TestFormModeData) -> float:
    """Symmetric form on test forms: the real part of the mode formula."""
    return two_point_coefficients(a, b).real


def two_point_kernel_oracle(
    form_a: SampledTestForm, form_b: SampledTestForm, n_theta: int
) -> complex:
    """Double quadrature of the explicit kernel against the sampled forms.

    The kernel factorizes as e^(-2 pi i k t) e^(2 pi i k t') times
    cos cos + sin sin in the angles, so the quadruple sum contracts into
    products of single-grid quadratures; this is an exact reordering of the
    full quadrature, not a reuse of the transform route.
    """
    kmax = max(form_a.max_mode(), form_b.max_mode())
    if kmax == 0:
        return 0.0 + 0.0j
    if n_theta < 8 * kmax:
        raise ValueError(f"n_theta={n_theta} cannot resolve mode {kmax}; need >= {8 * kmax}")
    theta = np.arange(n_theta) / n_theta

    def contractions(form: SampledTestForm, k: int, s: int, sign: int):
        """(cos-part, sin-part) of int psi_s(t, th) e^(sign i k t) {cos,sin}(k th)."""
        cos_tot = 0.0 + 0.0j
        sin_tot = 0.0 + 0.0j
        for c in form.components:
            if c.s != s:
                continue
            tpart = c.time_transform(k, sign)
            prof_cos = np.cos(TWO_PI * c.k * theta)
            angle_cos = float(np.mean(prof_cos * np.cos(TWO_PI * k * theta)))
            angle_sin = float(np.mean(prof_cos * np.sin(TWO_PI * k * theta)))
            cos_tot += tpart * angle_cos
            sin_tot += tpart * angle_sin
        return cos_tot, sin_tot

    total = 0.0 + 0.0j
    for k in range(1, kmax + 1):
        for s in (0, 1):
            a_cos, a_sin = contractions(form_a, k, s, -1)
            b_cos, b_sin = contractions(form_b, k, s, +1)
            total += (a_cos * b_cos + a_sin * b_sin) / (TWO_PI * k)
    return total


# -- JSON encoding -----------------------------------------------------------


def form_to_dict(form: SampledTestForm) -> dict:
    return {
        "components": [
            {
                "s": c.s,
                "k": c.k,
                "t_grid": {"t0": c.t0, "dt": c.dt},
                "samples_re": [x.real for x in c.samples],
                "samples_im": [x.imag for x in c.samples],
            }
            for c in form.components
        ]
    }


def form_from_dict(d: dict) -> SampledTestForm:
    comps = []
    for c in d.get("components", []):
        re = [float(x) for x in c["samples_re"]]
        im = [float(x) for x in c.get("samples_im", [0.0] * len(re))]
        if len(re) != len(im):
            raise ValueError("samples_re and samples_im lengths differ")
        comps.append(
            FormComponent(
                s=int(c["s"]),
                k=int(c["k"]),
                t0=float(c["t_grid"]["t0"]),
                dt=float(c["t_grid"]["dt"]),
                samples=tuple(complex(a, b) for a, b in zip(re, im)),
            )
        )
    return SampledTestForm(tuple(comps))

"""Quasifree ground state of the dynamical sector on the cylinder.

The one-particle machinery works in chiral mode coordinates.  Rewriting the
mode series in complex exponentials, each mode k carries four amplitudes
labelled by the signs of the t- and theta-exponents; suppressing the e^(+ikt)
half is the positive-frequency projection P.  The symmetric form

    mu(d, d') = sum_k pi k ( a+ a+' + b+ b+' + a- a-' + b- b-' )

is recovered as the imaginary part of the sesquilinear pairing of projected
data, and the quasifree state is omega_mu(d) = exp(-mu(d, d)/2).  The
two-point function mu + (i/2) tau_u uses the unreduced real symplectic form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .characters import ChiralMode, DynamicalDatum, tau_u
from .numerics import DEFAULT_TOLERANCES, TorusValue, torus_from_real

TWO_PI = 2.0 * math.pi


# -- positive-frequency projection --------------------------------------------


@dataclass(frozen=True)
class ModeAmplitudes:
    """Complex-exponential amplitudes of one mode.

    Index convention: (sign of t-exponent, sign of theta-exponent); e.g.
    ``pos_neg`` multiplies e^(+2 pi i k t) e^(-2 pi i k theta).
    """

    k: int
    pos_pos: complex
    pos_neg: complex
    neg_pos: complex
    neg_neg: complex


@dataclass(frozen=True)
class PositiveFrequencyData:
    """Per mode, the two surviving e^(-2 pi i k t) amplitudes (one per chirality)."""

    modes: tuple[tuple[int, complex, complex], ...]
    # entries (k, amp_pos_theta, amp_neg_theta)


def complex_expansion(d: DynamicalDatum) -> tuple[ModeAmplitudes, ...]:
    """Rewrite the chiral trig series of phi in complex exponentials."""
    out = []
    for m in d.modes:
        out.append(
            ModeAmplitudes(
                k=m.k,
                pos_pos=0.5 * complex(-m.b_plus, -m.a_plus),
                pos_neg=0.5 * complex(-m.b_minus, -m.a_minus),
                neg_pos=0.5 * complex(-m.b_minus, m.a_minus),
                neg_neg=0.5 * complex(-m.b_plus, m.a_plus),
            )
        )
    return tuple(out)


def suppress_positive_time_frequencies(
    amps: tuple[ModeAmplitudes, ...]
) -> tuple[ModeAmplitudes, ...]:
    """Zero the e^(+2 pi i k t) half; idempotent by construction."""
    return tuple(
        ModeAmplitudes(a.k, 0.0 + 0.0j, 0.0 + 0.0j, a.neg_pos, a.neg_neg) for a in amps
    )


def project_positive(d: DynamicalDatum) -> PositiveFrequencyData:
    """Positive-frequency projection P in mode coordinates.

    Real-linear in the datum; the surviving amplitudes are
    (-b^- + i a^-)/2 on e^(+i k theta) and (-b^+ + i a^+)/2 on e^(-i k theta).
    """
    kept = suppress_positive_time_frequencies(complex_expansion(d))
    return PositiveFrequencyData(
        tuple((a.k, a.neg_pos, a.neg_neg) for a in kept)
    )


def tau_c_positive(p: PositiveFrequencyData, pp: PositiveFrequencyData) -> complex:
    """Sesquilinear pairing of projected data by exact circle-mode integration.

    Evaluates int_{S^1} conj(phi~^+) d(phi'^+) + conj(phi^+) d(phi~'^+) at
    t = 0 through Fourier orthogonality of the complex exponentials; the
    tilde partner of a projected datum flips the sign of its e^(-ik theta)
    amplitude.  Reduces to 4 pi i k sum of conjugate products per mode.
    """
    table = {k: (ap, an) for k, ap, an in pp.modes}
    total = 0.0 + 0.0j
    for k, ap, an in p.modes:
        other = table.get(k)
        if other is None:
            continue
        total += 4.0 * math.pi * 1.0j * k * (ap.conjugate() * other[0] + an.conjugate() * other[1])
    return total


# -- quasifree data ------------------------------------------------------------


def mu(d: DynamicalDatum, dp: DynamicalDatum) -> float:
    """Symmetric positive form: sum_k pi k of matched coefficient products."""
    table = {m.k: m for m in dp.modes}
    total = 0.0
    for m in d.modes:
        o = table.get(m.k)
        if o is None:
            continue
        total += math.pi * m.k * (
            m.a_plus * o.a_plus
            + m.b_plus * o.b_plus
            + m.a_minus * o.a_minus
            + m.b_minus * o.b_minus
        )
    return total


def omega_mu(d: DynamicalDatum) -> float:
    """Quasifree state on generators: exp(-mu(d, d)/2), a value in (0, 1]."""
    return math.exp(-0.5 * mu(d, d))


def two_point(d: DynamicalDatum, dp: DynamicalDatum) -> complex:
    """Two-point function mu + (i/2) tau_u with the unreduced symplectic form."""
    return complex(mu(d, dp), 0.5 * tau_u(d, dp))


def cs_inequality(
    d: DynamicalDatum, dp: DynamicalDatum, eps: float = DEFAULT_TOLERANCES.eps_linear
) -> bool:
    """|tau_u(d, d')|/2 <= sqrt(mu(d,d) mu(d',d')) up to eps slack."""
    lhs = 0.5 * abs(tau_u(d, dp))
    rhs = math.sqrt(abs(mu(d, d))) * math.sqrt(abs(mu(dp, dp)))
    return lhs <= rhs + eps


def purity_maximizer(d: DynamicalDatum) -> DynamicalDatum:
    """Per-mode, per-chirality rotation (a, b) -> (b, -a) attaining the purity sup.

    The returned datum J d satisfies tau_u(d, J d)^2 / (4 mu(Jd, Jd)) = mu(d, d)
    exactly, certifying that the variational bound saturates.
    """
    if not d.modes:
        raise ValueError("purity maximizer undefined for the zero datum")
    return DynamicalDatum(
        ChiralMode(
            m.k,
            a_plus=m.b_plus,
            a_minus=m.b_minus,
            b_plus=-m.a_plus,
            b_minus=-m.a_minus,
        )
        for m in d.modes
    )


# -- symmetries and duality ----------------------------------------------------


def symmetry_translate(d: DynamicalDatum, s: float, phi0: TorusValue) -> DynamicalDatum:
    """Spacetime shift (t, theta) -> (t + s, theta + phi0).

    Per mode and chirality the phase advances by delta = 2 pi k (s +- phi0),
    rotating the coefficient pair: (a, b) -> (a cos d + b sin d, b cos d - a sin d).
    """
    out = []
    for m in d.modes:
        dp = TWO_PI * m.k * (s + phi0.rep)
        dm = TWO_PI * m.k * (s - phi0.rep)
        cp, sp = math.cos(dp), math.sin(dp)
        cm, sm = math.cos(dm), math.sin(dm)
        out.append(
            ChiralMode(
                m.k,
                a_plus=m.a_plus * cp + m.b_plus * sp,
                b_plus=m.b_plus * cp - m.a_plus * sp,
                a_minus=m.a_minus * cm + m.b_minus * sm,
                b_minus=m.b_minus * cm - m.a_minus * sm,
            )
        )
    return DynamicalDatum(out)


def duality_zeta_u(d: DynamicalDatum) -> DynamicalDatum:
    """Field-exchange map (d phi, d phi~) -> (d phi~, d phi) in degree one.

    On coefficients: the minus chirality is fixed, the plus chirality is
    negated; involutive and norm-preserving mode by mode.
    """
    return DynamicalDatum(
        ChiralMode(
            m.k,
            a_plus=-m.a_plus,
            a_minus=m.a_minus,
            b_plus=-m.b_plus,
            b_minus=m.b_minus,
        )
        for m in d.modes
    )


def ground_state_certificate(
    d: DynamicalDatum, dp: DynamicalDatum, n_samples: int
) -> float:
    """Spectral-support test of the ground-state property.

    Samples t -> two_point(d, translate(dp, t)) over one period, takes the
    discrete Fourier transform and returns the fraction of spectral energy
    sitting at frequencies <= 0 (DC excluded; the form has no zero mode).
    A ground state concentrates all energy at strictly positive bins.
    """
    kmax = max(d.max_mode(), dp.max_mode())
    if n_samples < max(4 * kmax, 4) or (n_samples & (n_samples - 1)) != 0:
        raise ValueError(
            f"need a power-of-two sample count >= {max(4 * kmax, 4)}, got {n_samples}"
        )
    zero_shift = torus_from_real(0.0)
    samples = np.array(
        [
            two_point(d, symmetry_translate(dp, j / n_samples, zero_shift))
            for j in range(n_samples)
        ],
        dtype=complex,
    )
    spectrum = np.fft.fft(samples)
    freqs = np.fft.fftfreq(n_samples)
    energy = np.abs(spectrum) ** 2
    total = float(np.sum(energy[freqs != 0.0]))
    if total == 0.0:
        return 0.0
    negative = float(np.sum(energy[freqs < 0.0]))
    return negative / total

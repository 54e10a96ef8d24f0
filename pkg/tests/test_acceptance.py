"""Acceptance gate: one test per release criterion, each printing a verdict line.

Criteria run at their stated sample counts and tolerances; the final test
bounds the wall-clock time of the complete verification registry.
"""

import math
import time
import zlib

import numpy as np
import pytest

from torusqft import verify
from torusqft import characters as ch
from torusqft import hadamard as hd
from torusqft import modes
from torusqft.numerics import torus_distance, torus_from_real

SEED = 20240811


def _report(criterion: str, residual: float, threshold: float):
    status = "PASS" if residual < threshold else "FAIL"
    print(f"{status} {criterion}: residual {residual:.3e} < {threshold:.1e}")
    assert residual < threshold, f"{criterion}: {residual:.3e} >= {threshold:.1e}"


def _run(name: str, scale: float = 1.0, seed: int = SEED) -> float:
    spec = next(s for s in verify.REGISTRY if s.name == name)
    rng = np.random.default_rng([seed, zlib.crc32(name.encode())])
    return float(spec.fn(rng, scale))


def test_criterion_01_sigma_oracle_equivalence():
    started = time.perf_counter()
    residual = _run("sigma-quadrature-oracle")
    elapsed = time.perf_counter() - started
    _report("01 sigma quadrature oracle (100 pairs, <= 8 modes)", residual, 1e-6)
    print(f"     runtime {elapsed:.2f}s")
    assert elapsed < 2.0


def test_criterion_02_sigma_antisymmetry_bilinearity():
    residual = max(_run("sigma-antisymmetry"), _run("sigma-bilinearity"))
    _report("02 sigma antisymmetry and Z-bilinearity (1000 characters)", residual, 1e-9)


def test_criterion_03_weyl_laws():
    residual = _run("weyl-laws")
    _report("03 Weyl relation, associativity, involution, unit (3 models)", residual, 1e-12)


def test_criterion_04_state_point_values():
    zero = ch.DynamicalDatum(())
    assert hd.omega_mu(zero) == 1.0
    r1 = abs(hd.omega_mu(ch.DynamicalDatum((ch.ChiralMode(1, a_plus=1.0),)))
             - math.exp(-math.pi / 2))
    s = modes.ModeSpectrum(4, 2, ((1.0, 1),))
    d = modes.ModeInitialData(((1.0, 0.0),))
    r2 = abs(modes.omega_mu_general(s, d) - math.exp(-0.25))
    _report("04 quasifree state point values", max(r1, r2), 1e-12)


def test_criterion_05_cauchy_schwarz_purity():
    residual = max(_run("cs-and-purity"), _run("mode-cs-purity"))
    _report("05 two-point bound and purity saturation (both sectors)", residual, 1e-9)


def test_criterion_06_invariance():
    residual = max(_run("state-invariance"), _run("zeta-translate-commute"))
    _report("06 state invariance under shifts and field exchange", residual, 1e-12)


def test_criterion_07_ground_state_certificate():
    residual = _run("ground-state-certificate")
    _report("07 nonpositive-frequency energy fraction (100 pairs)", residual, 1e-8)


def test_criterion_08_topological_positivity():
    residual = _run("omega-t-grouped")
    _report("08 lattice-state positivity, grouped vs brute force (200)", residual, 1e-9)


def test_criterion_09_gns_and_duality():
    residual = max(
        _run("gns-reconstruction"),
        _run("gns-well-defined"),
        _run("duality-intertwining"),
    )
    _report("09 GNS reconstruction and duality intertwining", residual, 1e-12)


def test_criterion_10_splittings():
    residual = max(
        _run("splitting-general"),
        _run("splitting-duality"),
        _run("splitting-sectors"),
    )
    _report("10 corrected splitting pairings vanish mod 1 (100 models)", residual, 1e-9)


def test_criterion_11_mode_solver():
    ode = _run("mode-ode-residual")
    energy = _run("mode-initial-energy")
    bridge = _run("mode-bridge-2d")
    _report("11a mode evolution residual at h = 1e-3", ode, 1e-4)
    _report("11b initial data and energy drift on [0, 10]", energy, 1e-10)
    _report("11c two-dimensional bridge agreement", bridge, 1e-9)


def test_criterion_12_kunneth_table():
    residual = max(_run("kunneth-table"), _run("poincare-duality"))
    _report("12 degree-two ranks (1, 3, 0) and palindromic Betti", residual, 0.5)


def test_criterion_13_fock():
    residual = max(
        _run("fock-ccr"),
        _run("fock-second-quantization"),
        _run("fock-duality"),
    )
    _report("13 CCR, second quantization, block-swap duality", residual, 1e-10)


def test_criterion_14_propagator_sector():
    conjugation = _run("propagator-conjugation")
    kernel = _run("kernel-oracle")
    _report("14a coefficient conjugation relations on real forms", conjugation, 1e-12)
    _report("14b kernel quadrature vs coefficient pairing", kernel, 1e-5)


def test_full_suite_runtime_and_passes():
    started = time.perf_counter()
    results = verify.run_checks(seed=0, samples=100)
    elapsed = time.perf_counter() - started
    failed = [r.name for r in results if not r.passed]
    print(f"PASS full verification registry: {len(results)} checks in {elapsed:.1f}s")
    assert not failed, f"failing checks: {failed}"
    assert elapsed < 60.0

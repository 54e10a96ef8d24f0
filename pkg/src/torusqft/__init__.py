"""Desk-scale engine for gauge-field sectors on spacetimes with compact slices.

Configurations, pre-symplectic products, Weyl quantization, quasifree and
lattice states, sector splittings and the electric-magnetic exchange are all
represented by finite Fourier, lattice and eigenmode data, with every
computable identity wired into a verification registry.
"""

from .numerics import (
    DEFAULT_TOLERANCES,
    Tolerances,
    TorusValue,
    torus_distance,
    torus_from_real,
)
from .characters import (
    ChiralMode,
    CurvatureData,
    DynamicalDatum,
    FourierCharacter,
    characteristic_class,
    curvature,
    decompose,
    recompose,
    restrict_to_cauchy,
    sigma,
    sigma_quadrature,
    tau_u,
)
from .hadamard import (
    cs_inequality,
    duality_zeta_u,
    ground_state_certificate,
    mu,
    omega_mu,
    project_positive,
    purity_maximizer,
    symmetry_translate,
    two_point,
)
from .topo import (
    GnsVector,
    TopologicalElement,
    duality_U,
    gns_quotient,
    inner_product,
    momentum,
    momentum_tilde,
    omega_t,
    omega_t0,
    pairing_f,
    represent,
    tau_lr,
)
from .weyl import (
    GroupModel,
    WeylElement,
    adjoint,
    banach_norm,
    evaluate_state,
    generator,
    multiply,
    positivity_check,
)
from .models import character_group_model, dynamical_group_model, topological_group_model
from .modes import (
    ModeInitialData,
    ModeSolution,
    ModeSpectrum,
    bridge_from_dynamical,
    mu_general,
    omega_mu_general,
    solve_cauchy,
    tau_u_general,
    verify_duality_equation,
)
from .splittings import (
    CorrectionResult,
    SplittingModel,
    correct_a,
    correct_b,
    correct_x_duality,
    correct_x_general,
)
from .kunneth import Space, betti, space_from_name, torsion_free
from .fock import (
    FockVector,
    annihilate,
    create,
    duality_one_particle,
    number,
    second_quantize,
    vacuum,
)
from .verify import run_checks

__version__ = "0.1.0"

"""Sector-splitting corrections in dual-basis coordinates.

The three right inverses relating the sector groups are fixed only up to
torus-valued corrections; this module computes the corrections that make all
cross-sector products vanish.  Gauge configurations appear only through the
real lifts of their circle-valued pairings, supplied by the caller (no
silent branch-cut choices).  The defining postcondition everywhere is that
the corrected pairing matrix is congruent to zero mod 1; the internal sign
bookkeeping exists to make that hold.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .numerics import DEFAULT_TOLERANCES, TORUS_ZERO, torus_distance, torus_from_real


@dataclass(frozen=True)
class SplittingModel:
    """Rank, grading and pairing-lift data of one splitting problem.

    general case:   lifts[i][j] lifts the pairing of the j-th dual-sector
                    generator against the i-th primal one; shape (n, n_tilde).
    self_dual case: m = 2k and n_tilde = n; lifts[i][j] lifts the self-pairing
                    of generators i and j and must be graded-symmetric,
                    lifts[j][i] = (-1)^k lifts[i][j] mod 1, with zero diagonal
                    for odd k.
    """

    n: int
    n_tilde: int
    k: int
    m: int
    case: str
    lifts: tuple

    def __post_init__(self):
        arr = np.asarray(self.lifts, dtype=float)
        if self.case == "general":
            if arr.shape != (self.n, self.n_tilde):
                raise ValueError(f"lift matrix must be {self.n}x{self.n_tilde}, got {arr.shape}")
        elif self.case == "self_dual":
            if self.m != 2 * self.k:
                raise ValueError("self-dual splitting needs m = 2k")
            if self.n_tilde != self.n:
                raise ValueError("self-dual splitting needs equal ranks")
            if arr.shape != (self.n, self.n):
                raise ValueError(f"lift matrix must be {self.n}x{self.n}, got {arr.shape}")
            self._validate_graded_symmetry(arr)
        else:
            raise ValueError(f"unknown case {self.case!r}")
        object.__setattr__(self, "lifts", tuple(tuple(row) for row in arr))

    def _validate_graded_symmetry(self, arr: np.ndarray, eps: float = DEFAULT_TOLERANCES.eps_torus):
        sign = -1 if self.k % 2 else 1
        for i in range(self.n):
            for j in range(self.n):
                lhs = torus_from_real(arr[j, i])
                rhs = torus_from_real(sign * arr[i, j])
                if torus_distance(lhs, rhs) >= eps:
                    raise ValueError(
                        f"lift matrix is not graded-symmetric at ({i},{j})"
                    )
        if self.k % 2:
            for i in range(self.n):
                if torus_distance(torus_from_real(arr[i, i]), TORUS_ZERO) >= eps:
                    raise ValueError("odd-degree self-pairing diagonal must vanish")

    def lift_array(self) -> np.ndarray:
        return np.asarray(self.lifts, dtype=float)


@dataclass(frozen=True)
class CorrectionResult:
    """Torus components of the correcting classes, one row per corrected class.

    ``u_components[r][c]`` is the c-th dual-basis component of the r-th torus
    class, reduced to [0, 1).  Corrections live entirely in the torus
    directions; integer winding data is never touched.
    """

    case: str
    u_components: tuple

    def component_array(self) -> np.ndarray:
        return np.asarray(self.u_components, dtype=float)


def correct_x_general(model: SplittingModel) -> CorrectionResult:
    """Correct the free-sector splitting in the mixed-rank case.

    The j-th dual class is shifted by the torus class with components equal
    to the negated lifts against the primal generators, cancelling the
    pairing row by row.
    """
    if model.case != "general":
        raise ValueError("model is not a general-case splitting")
    lifts = model.lift_array()
    comps = np.mod(-lifts.T, 1.0)  # row j: components of the j-th correction
    return CorrectionResult("general", tuple(tuple(float(x) for x in row) for row in comps))


def corrected_pairing_general(model: SplittingModel, corr: CorrectionResult) -> float:
    """Max mod-1 residual of lifts[i][j] + component_i(correction_j)."""
    lifts = model.lift_array()
    comps = corr.component_array()
    worst = 0.0
    for i in range(model.n):
        for j in range(model.n_tilde):
            val = torus_from_real(lifts[i, j] + comps[j, i])
            worst = max(worst, torus_distance(val, TORUS_ZERO))
    return worst


def correct_x_duality(model: SplittingModel) -> CorrectionResult:
    """Duality-compatible correction of the self-dual splitting (m = 2k).

    Builds the real array c from the strict upper triangle of the lifts
    via c[j][i] = (-1)^k c[i][j] (zero diagonal for odd k) and shifts the
    i-th generator by the torus class with components -c[i][:]/2.  One shared
    matrix corrects both members of the pair, which is exactly the constraint
    duality compatibility imposes.
    """
    if model.case != "self_dual":
        raise ValueError("model is not a self-dual splitting")
    lifts = model.lift_array()
    n = model.n
    sign = -1 if model.k % 2 else 1
    c = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i < j:
                c[i, j] = lifts[i, j]
            elif i > j:
                c[i, j] = sign * lifts[j, i]
        c[i, i] = 0.0 if model.k % 2 else lifts[i, i]
    comps = np.mod(-0.5 * c, 1.0)
    return CorrectionResult("self_dual", tuple(tuple(float(x) for x in row) for row in comps))


def corrected_pairing_duality(model: SplittingModel, corr: CorrectionResult) -> float:
    """Max mod-1 residual of lifts[i][j] + u_j^(i) + (-1)^k u_i^(j)."""
    lifts = model.lift_array()
    comps = corr.component_array()
    sign = -1 if model.k % 2 else 1
    worst = 0.0
    for i in range(model.n):
        for j in range(model.n):
            val = torus_from_real(lifts[i, j] + comps[i, j] + sign * comps[j, i])
            worst = max(worst, torus_distance(val, TORUS_ZERO))
    return worst


@dataclass(frozen=True)
class SectorCorrection:
    """Torus shifts cancelling the pairings of one off-sector image."""

    delta_primal: tuple
    delta_dual: tuple


def _negate_mod1(values) -> tuple:
    return tuple(torus_from_real(-float(v)).rep for v in values)


def correct_a(pair_primal, pair_dual) -> SectorCorrection:
    """Correction of the field-strength splitting against the free generators.

    Inputs are the circle pairings of the uncorrected image with the primal
    and dual generator families; the correcting homomorphism is their
    componentwise negation mod 1.
    """
    return SectorCorrection(_negate_mod1(pair_primal), _negate_mod1(pair_dual))


def correct_b(pair_primal, pair_dual) -> SectorCorrection:
    """Correction of the torsion splitting; same contract as ``correct_a``."""
    return SectorCorrection(_negate_mod1(pair_primal), _negate_mod1(pair_dual))


def sector_orthogonality_residual(
    pair_primal, pair_dual, corr: SectorCorrection, k: int, m: int
) -> float:
    """Re-evaluate the cross-sector product with the corrected functional.

    Per primal generator the product contributes pairing + delta; per dual
    generator the graded sign multiplies the analogous sum.  Both must vanish
    mod 1.
    """
    eps_sign = -1 if (k * (m - k)) % 2 else 1
    worst = 0.0
    for p, dlt in zip(pair_primal, corr.delta_primal):
        worst = max(
            worst, torus_distance(torus_from_real(float(p) + dlt), TORUS_ZERO)
        )
    for p, dlt in zip(pair_dual, corr.delta_dual):
        worst = max(
            worst,
            torus_distance(torus_from_real(eps_sign * (float(p) + dlt)), TORUS_ZERO),
        )
    return worst


# -- JSON encoding -----------------------------------------------------------


def model_to_dict(model: SplittingModel) -> dict:
    return {
        "n": model.n,
        "n_tilde": model.n_tilde,
        "k": model.k,
        "m": model.m,
        "case": model.case,
        "lifts": [list(row) for row in model.lifts],
    }


def model_from_dict(d: dict) -> SplittingModel:
    return SplittingModel(
        n=int(d["n"]),
        n_tilde=int(d["n_tilde"]),
        k=int(d["k"]),
        m=int(d["m"]),
        case=str(d["case"]),
        lifts=tuple(tuple(float(x) for x in row) for row in d["lifts"]),
    )

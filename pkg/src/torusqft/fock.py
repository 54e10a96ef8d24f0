"""Truncated symmetrized Fock space over a finite one-particle space.

States are stored in occupation-number coordinates, which keeps the
symmetrizer implicit; the raw-tensor picture is exposed only as a test
utility.  A hard particle cutoff N bounds every sector, and any creation
amplitude that would overflow it is dropped with an explicit flag on the
result rather than silently.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .numerics import DEFAULT_TOLERANCES


def occupations(dim: int, p: int) -> list[tuple[int, ...]]:
    """All occupation vectors of dim modes with total particle number p."""
    out = []
    for combo in itertools.combinations_with_replacement(range(dim), p):
        occ = [0] * dim
        for i in combo:
            occ[i] += 1
        out.append(tuple(occ))
    return out


@dataclass
class FockVector:
    """Finite vector with sectors p = 0..cutoff in occupation coordinates.

    ``truncated`` records that some creation amplitude was discarded at the
    cutoff boundary; inner products with such vectors are still meaningful
    on the retained sectors.
    """

    dim: int
    cutoff: int
    sectors: dict = field(default_factory=dict)
    truncated: bool = False

    def __post_init__(self):
        clean: dict[int, dict[tuple, complex]] = {}
        for p, table in self.sectors.items():
            if not 0 <= p <= self.cutoff:
                raise ValueError(f"sector {p} outside cutoff {self.cutoff}")
            entries = {occ: complex(z) for occ, z in table.items() if z != 0}
            for occ in entries:
                if len(occ) != self.dim or sum(occ) != p:
                    raise ValueError(f"occupation {occ} invalid in sector {p}")
            if entries:
                clean[p] = entries
        self.sectors = clean

    def copy(self) -> "FockVector":
        return FockVector(
            self.dim,
            self.cutoff,
            {p: dict(t) for p, t in self.sectors.items()},
            self.truncated,
        )

    def __add__(self, other: "FockVector") -> "FockVector":
        self._check(other)
        out = {p: dict(t) for p, t in self.sectors.items()}
        for p, table in other.sectors.items():
            dst = out.setdefault(p, {})
            for occ, z in table.items():
                dst[occ] = dst.get(occ, 0j) + z
        return FockVector(self.dim, self.cutoff, out, self.truncated or other.truncated)

    def scaled(self, c: complex) -> "FockVector":
        return FockVector(
            self.dim,
            self.cutoff,
            {p: {occ: c * z for occ, z in t.items()} for p, t in self.sectors.items()},
            self.truncated,
        )

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scaled(-1.0)

    def norm(self) -> float:
        return math.sqrt(
            sum(abs(z) ** 2 for t in self.sectors.values() for z in t.values())
        )

    def _check(self, other: "FockVector"):
        if self.dim != other.dim or self.cutoff != other.cutoff:
            raise ValueError("Fock vectors live on different truncated spaces")


def vacuum(dim: int, cutoff: int) -> FockVector:
    return FockVector(dim, cutoff, {0: {(0,) * dim: 1.0 + 0.0j}})


def inner(x: FockVector, y: FockVector) -> complex:
    x._check(y)
    total = 0j
    for p, table in x.sectors.items():
        other = y.sectors.get(p)
        if not other:
            continue
        for occ, z in table.items():
            w = other.get(occ)
            if w is not None:
                total += z.conjugate() * w
    return total


def create(phi, psi: FockVector) -> FockVector:
    """Creation by the one-particle vector phi, linear in phi.

    a+(e_i)|.., n_i, ..> = sqrt(n_i + 1) |.., n_i + 1, ..>; content that would
    land beyond the cutoff is dropped and flagged.
    """
    phi = np.asarray(phi, dtype=complex)
    if phi.shape != (psi.dim,):
        raise ValueError(f"one-particle vector must have dim {psi.dim}")
    out: dict[int, dict[tuple, complex]] = {}
    truncated = psi.truncated
    for p, table in psi.sectors.items():
        if p + 1 > psi.cutoff:
            if any(z != 0 for z in table.values()) and np.any(phi != 0):
                truncated = True
            continue
        dst = out.setdefault(p + 1, {})
        for occ, z in table.items():
            for i in range(psi.dim):
                if phi[i] == 0:
                    continue
                new = list(occ)
                new[i] += 1
                key = tuple(new)
                dst[key] = dst.get(key, 0j) + z * phi[i] * math.sqrt(occ[i] + 1)
    return FockVector(psi.dim, psi.cutoff, out, truncated)


def annihilate(phi, psi: FockVector) -> FockVector:
    """Annihilation by phi, antilinear in phi: a(phi) = sum conj(phi_i) a(e_i)."""
    phi = np.asarray(phi, dtype=complex)
    if phi.shape != (psi.dim,):
        raise ValueError(f"one-particle vector must have dim {psi.dim}")
    out: dict[int, dict[tuple, complex]] = {}
    for p, table in psi.sectors.items():
        if p == 0:
            continue
        dst = out.setdefault(p - 1, {})
        for occ, z in table.items():
            for i in range(psi.dim):
                if phi[i] == 0 or occ[i] == 0:
                    continue
                new = list(occ)
                new[i] -= 1
                key = tuple(new)
                dst[key] = dst.get(key, 0j) + z * phi[i].conjugate() * math.sqrt(occ[i])
    return FockVector(psi.dim, psi.cutoff, out, psi.truncated)


def number(psi: FockVector) -> FockVector:
    """Sector-diagonal particle-number operator {psi_p} -> {p psi_p}."""
    return FockVector(
        psi.dim,
        psi.cutoff,
        {p: {occ: p * z for occ, z in t.items()} for p, t in psi.sectors.items()},
        psi.truncated,
    )


# -- symmetric tensors and second quantization ---------------------------------


def occupation_tensor(occ: tuple[int, ...], dim: int) -> np.ndarray:
    """Flattened normalized symmetric tensor of an occupation state.

    Test utility realizing the symmetrizer explicitly: the sum over the
    distinct arrangements of the mode word, weighted 1/sqrt(p!/prod n_i!).
    """
    p = sum(occ)
    if p == 0:
        return np.array([1.0 + 0.0j])
    word = tuple(i for i, n in enumerate(occ) for _ in range(n))
    arrangements = set(itertools.permutations(word))
    tensor = np.zeros(dim**p, dtype=complex)
    for arr in arrangements:
        idx = 0
        for a in arr:
            idx = idx * dim + a
        tensor[idx] += 1.0
    tensor /= math.sqrt(len(arrangements))
    return tensor


def tensor_to_occupation(tensor: np.ndarray, dim: int, p: int) -> dict[tuple, complex]:
    """Project a raw p-fold tensor onto occupation coordinates."""
    out = {}
    for occ in occupations(dim, p):
        amp = complex(np.vdot(occupation_tensor(occ, dim), tensor))
        if amp != 0:
            out[occ] = amp
    return out


def second_quantize(U, psi: FockVector, eps: float = DEFAULT_TOLERANCES.eps_linear) -> FockVector:
    """Sector-wise symmetric tensor power of a unitary one-particle map."""
    U = np.asarray(U, dtype=complex)
    if U.shape != (psi.dim, psi.dim):
        raise ValueError(f"one-particle map must be {psi.dim}x{psi.dim}")
    defect = np.max(np.abs(U.conj().T @ U - np.eye(psi.dim)))
    if defect > 100 * eps:
        raise ValueError(f"one-particle map is not unitary (defect {defect:.3e})")
    out: dict[int, dict[tuple, complex]] = {}
    for p, table in psi.sectors.items():
        if p == 0:
            out[0] = dict(table)
            continue
        basis = occupations(psi.dim, p)
        T = np.array([occupation_tensor(occ, psi.dim) for occ in basis])
        coeffs = np.array([table.get(occ, 0j) for occ in basis])
        Up = U
        for _ in range(p - 1):
            Up = np.kron(Up, U)
        new_coeffs = T.conj() @ (Up @ (T.T @ coeffs))
        out[p] = {
            occ: z for occ, z in zip(basis, new_coeffs) if z != 0
        }
    return FockVector(psi.dim, psi.cutoff, out, psi.truncated)


def duality_one_particle(dim: int, k: int) -> np.ndarray:
    """Block swap implementing the field exchange on a paired mode basis.

    The basis is ordered (primal modes, dual modes) in equal halves; the
    primal block receives -(-1)^(k^2) times the dual one, the dual block
    receives the primal one.  A signed permutation, hence exactly unitary;
    its sector-wise tensor powers implement the duality on the Fock model.
    """
    if dim % 2:
        raise ValueError("paired-mode dimension must be even")
    h = dim // 2
    sign = 1 if k % 2 else -1  # -(-1)^(k^2)
    M = np.zeros((dim, dim), dtype=complex)
    for i in range(h):
        M[i, i + h] = sign
        M[i + h, i] = 1.0
    return M


def field_operator_matrix(phi, dim: int, cutoff: int) -> np.ndarray:
    """Dense matrix of (a+(phi) + a(phi))/sqrt(2) on the truncated space.

    Used to probe the exponentiated-field bridge; the truncation makes the
    top sector leak, so unitarity of the exponential is only expected on low
    sectors.
    """
    basis = [occ for p in range(cutoff + 1) for occ in occupations(dim, p)]
    index = {occ: i for i, occ in enumerate(basis)}
    size = len(basis)
    M = np.zeros((size, size), dtype=complex)
    for occ in basis:
        start = FockVector(dim, cutoff, {sum(occ): {occ: 1.0}})
        image = create(phi, start) + annihilate(phi, start)
        for p, table in image.sectors.items():
            for occ2, z in table.items():
                M[index[occ2], index[occ]] += z / math.sqrt(2.0)
    return M


def basis_labels(dim: int, cutoff: int) -> list[tuple[int, ...]]:
    return [occ for p in range(cutoff + 1) for occ in occupations(dim, p)]

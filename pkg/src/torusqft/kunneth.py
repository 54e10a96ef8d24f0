"""Free cohomology ranks of sphere/torus products via Betti-sequence convolution.

All catalogue factors (circles and spheres) have torsion-free integer
cohomology, so the product formula carries no torsion correction terms and
reduces to polynomial multiplication of Betti sequences.  Spaces with
torsion are rejected at construction rather than silently mishandled.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


def _sphere_betti(d: int) -> tuple[int, ...]:
    if d < 1:
        raise ValueError("sphere dimension must be >= 1")
    if d == 1:
        return (1, 1)
    return (1,) + (0,) * (d - 1) + (1,)


@dataclass(frozen=True)
class Space:
    """A product of circles and spheres, known through factor Betti sequences."""

    name: str
    factors: tuple[tuple[int, ...], ...]

    def dimension(self) -> int:
        return sum(len(f) - 1 for f in self.factors)

    def betti_sequence(self) -> tuple[int, ...]:
        seq = (1,)
        for f in self.factors:
            seq = _convolve(seq, f)
        return seq


def _convolve(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


_FACTOR_RE = re.compile(r"^(S|T)(\d+)$")


def space_from_name(name: str) -> Space:
    """Parse names like "S1xS2", "T3", "S3" into catalogue spaces.

    T<n> abbreviates the n-fold circle product; unknown factors are rejected.
    """
    factors: list[tuple[int, ...]] = []
    for token in name.split("x"):
        m = _FACTOR_RE.match(token.strip())
        if not m:
            raise ValueError(f"unknown factor {token!r} in space name {name!r}")
        kind, dim = m.group(1), int(m.group(2))
        if kind == "S":
            factors.append(_sphere_betti(dim))
        else:
            factors.extend(_sphere_betti(1) for _ in range(dim))
    if not factors:
        raise ValueError("empty space name")
    return Space(name=name, factors=tuple(factors))


def betti(space: Space, degree: int) -> int:
    """Rank of the degree-d integer cohomology of the product."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    seq = space.betti_sequence()
    return seq[degree] if degree < len(seq) else 0


def torsion_free(space: Space, degree: int) -> bool:
    """True for every catalogue space: sphere/torus products carry no torsion."""
    del degree
    return all(all(b >= 0 for b in f) for f in space.factors)


def topological_ranks(space: Space, k: int) -> tuple[int, int]:
    """(n, nt) = free ranks in degrees (k, dim - k), the lattice sizes of the
    topological sector over this Cauchy surface."""
    return betti(space, k), betti(space, space.dimension() - k)

"""CCR algebra of finite Weyl combinations over a pre-symplectic Abelian group.

A group model packages the Abelian operations together with a circle-valued
antisymmetric bilinear map; generators multiply through the cocycle

    W(g) W(g') = e^(2 pi i s(g, g')) W(g + g')

with involution W(g)* = W(-g) and the summable norm ||sum a_i W(g_i)|| =
sum |a_i|.  Only finite combinations are materialized; completions are out
of scope.  Group elements act as map keys through a canonical encoding that
quantizes floating-point components to a fixed grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .numerics import DEFAULT_TOLERANCES, TORUS_ZERO, torus_distance

TWO_PI = 2.0 * math.pi

KEY_GRID = 1e-12
_TORUS_CELLS = round(1.0 / KEY_GRID)


def quantize(x: float, grid: float = KEY_GRID) -> int:
    """Snap a float to the key grid; decides equality of group elements."""
    return round(x / grid)


def quantize_torus(rep: float) -> int:
    """Snap a circle representative to the grid, identifying the endpoints.

    Sums like 0.3 + 0.7 land a rounding error below 1.0; folding the grid
    cyclically keeps them on the key of 0.
    """
    return round(rep / KEY_GRID) % _TORUS_CELLS


class MixedModelError(ValueError):
    pass


class PositivityError(ValueError):
    pass


@dataclass(frozen=True)
class GroupModel:
    """A pre-symplectic Abelian group presented operationally.

    ``encode`` decides exact key identity inside algebra elements; ``close``
    is the tolerant comparison used for measuring distances between algebra
    elements, where rounding can land equal group elements in adjacent key
    cells.
    """

    name: str
    zero: object
    add: Callable
    neg: Callable
    presymplectic: Callable  # (g, h) -> TorusValue
    encode: Callable  # g -> hashable canonical key
    close: Callable | None = None  # (g, h, tol) -> bool

    def check_samples(self, samples, eps: float = DEFAULT_TOLERANCES.eps_torus) -> float:
        """Spot-check antisymmetry and vanishing diagonal on sample elements.

        Returns the worst residual; raises if it exceeds the tolerance.
        """
        worst = 0.0
        for g in samples:
            worst = max(worst, torus_distance(self.presymplectic(g, g), TORUS_ZERO))
        for g in samples:
            for h in samples:
                s = self.presymplectic(g, h)
                t = self.presymplectic(h, g)
                worst = max(worst, torus_distance(s + t, TORUS_ZERO))
        if worst >= eps:
            raise ValueError(
                f"model {self.name}: pre-symplectic sanity check failed ({worst:.3e})"
            )
        return worst


class WeylElement:
    """A finite formal combination sum_i alpha_i W(g_i) over one group model."""

    __slots__ = ("model", "_table")

    def __init__(self, model: GroupModel, table: dict | None = None):
        self.model = model
        self._table = {}
        if table:
            for key, (g, alpha) in table.items():
                if alpha != 0:
                    self._table[key] = (g, complex(alpha))

    @property
    def terms(self) -> dict:
        """Mapping group element -> coefficient (canonical representatives)."""
        return {g: alpha for (g, alpha) in self._table.values()}

    def _insert(self, g, alpha: complex):
        key = self.model.encode(g)
        if key in self._table:
            old_g, old = self._table[key]
            new = old + alpha
            if new == 0:
                del self._table[key]
            else:
                self._table[key] = (old_g, new)
        elif alpha != 0:
            self._table[key] = (g, complex(alpha))

    def __add__(self, other: "WeylElement") -> "WeylElement":
        self._require_same_model(other)
        out = WeylElement(self.model, dict(self._table))
        for g, alpha in other._table.values():
            out._insert(g, alpha)
        return out

    def __sub__(self, other: "WeylElement") -> "WeylElement":
        return self + other.scaled(-1.0)

    def scaled(self, c: complex) -> "WeylElement":
        out = WeylElement(self.model)
        if c != 0:
            for key, (g, alpha) in self._table.items():
                out._table[key] = (g, c * alpha)
        return out

    def __rmul__(self, c) -> "WeylElement":
        if isinstance(c, (int, float, complex)):
            return self.scaled(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, WeylElement):
            return multiply(self, other)
        if isinstance(other, (int, float, complex)):
            return self.scaled(other)
        return NotImplemented

    def __len__(self) -> int:
        return len(self._table)

    def _require_same_model(self, other: "WeylElement"):
        if self.model is not other.model:
            raise MixedModelError(
                f"cannot combine elements over {self.model.name} and {other.model.name}"
            )

    def __repr__(self):
        inner = " + ".join(f"({alpha:.4g})W({g!r})" for g, alpha in self.terms.items())
        return f"WeylElement[{self.model.name}]({inner or '0'})"


def generator(model: GroupModel, g) -> WeylElement:
    """The single symbol W(g) with coefficient one."""
    out = WeylElement(model)
    out._insert(g, 1.0 + 0.0j)
    return out


def unit(model: GroupModel) -> WeylElement:
    return generator(model, model.zero)


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    """Bilinear extension of the twisted product of generators."""
    a._require_same_model(b)
    model = a.model
    out = WeylElement(model)
    for g, alpha in a._table.values():
        for h, beta in b._table.values():
            twist = model.presymplectic(g, h).rep
            phase = complex(math.cos(TWO_PI * twist), math.sin(TWO_PI * twist))
            out._insert(model.add(g, h), alpha * beta * phase)
    return out


def adjoint(a: WeylElement) -> WeylElement:
    """Involution: keys negated, coefficients conjugated."""
    out = WeylElement(a.model)
    for g, alpha in a._table.values():
        out._insert(a.model.neg(g), alpha.conjugate())
    return out


def banach_norm(a: WeylElement) -> float:
    """Sum of coefficient moduli; submultiplicative since the cocycle is unimodular."""
    return sum(abs(alpha) for _, alpha in a._table.values())


def evaluate_state(s: Callable, a: WeylElement, eps: float = DEFAULT_TOLERANCES.eps_linear) -> complex:
    """Linear extension of a generator-state function s to the combination a.

    s must be normalized: s(0) = 1.
    """
    norm = complex(s(a.model.zero))
    if abs(norm - 1.0) > eps:
        raise ValueError(f"state function is not normalized: s(0) = {norm}")
    return sum(alpha * complex(s(g)) for g, alpha in a._table.values())


def positivity_check(
    s: Callable, a: WeylElement, eps: float = DEFAULT_TOLERANCES.eps_linear
) -> float:
    """Evaluate s on a* a; the result must be (numerically) a nonnegative real.

    Returns the real part; raises PositivityError naming the offending
    element when the imaginary part or a negative real part exceeds eps.
    """
    val = evaluate_state(s, multiply(adjoint(a), a), eps=eps)
    if abs(val.imag) > eps:
        raise PositivityError(f"s(a* a) = {val} is not real for a = {a!r}")
    if val.real < -eps:
        raise PositivityError(f"s(a* a) = {val.real} < 0 for a = {a!r}")
    return val.real


def _consolidated_terms(a: WeylElement, tol: float) -> list:
    """Cluster terms whose group elements are tolerantly equal."""
    close = a.model.close
    items = list(a._table.values())
    if close is None:
        return items
    merged: list[list] = []
    for g, alpha in items:
        for entry in merged:
            if close(entry[0], g, tol):
                entry[1] += alpha
                break
        else:
            merged.append([g, alpha])
    return [(g, alpha) for g, alpha in merged]


def residual_norm(a: WeylElement, b: WeylElement, tol: float = 1e-9) -> float:
    """Summable-norm distance between elements, robust to key-cell rounding.

    Terms are matched through the model's tolerant comparison; matched pairs
    contribute the coefficient difference, unmatched terms their modulus.
    Falls back to exact key matching when the model supplies no comparison.
    """
    a._require_same_model(b)
    left = _consolidated_terms(a, tol)
    right = list(_consolidated_terms(b, tol))
    close = a.model.close
    total = 0.0
    for g, alpha in left:
        for idx, (h, beta) in enumerate(right):
            same = (
                close(g, h, tol)
                if close is not None
                else a.model.encode(g) == a.model.encode(h)
            )
            if same:
                total += abs(alpha - beta)
                right.pop(idx)
                break
        else:
            total += abs(alpha)
    total += sum(abs(beta) for _, beta in right)
    return total


def vacuum_state_function(model: GroupModel) -> Callable:
    """The counting functional: 1 on the unit generator, 0 on every other one."""
    zero_key = model.encode(model.zero)

    def s(g):
        return 1.0 if model.encode(g) == zero_key else 0.0

    return s

"""
Dipole chronons: operators on topon space, and the topon generators lifted to
act on them.

A chronon ``|χ⟩`` is the unitization of an operator ``χ`` on ℕ⁴.  Translations
and Lorentz generators act on it by commutator, coordinates act
barycentrically, and the orbital part ``L̃ = X_[μ P̃_λ]`` splits off a spin part
``S̃ = J̃ - L̃`` that commutes with the barycentric coordinates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exterior import GradedExtensor, GeneratorId, unit_expand, unitize
from .lattice import (
    AXES, DIM, METRIC, CoeffFn, ShiftPolyOperator, WindowPolynomial, commutator,
    compose, coordinate_operator, lorentz_generator, mixed_generator,
    translation_generator, window_sum,
)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ArrowChronon:
    op: ShiftPolyOperator

    @property
    def gen(self) -> tuple[int, GeneratorId]:
        """``(sign, generator)`` of the unitized operator."""
        return unitize(self.op)

    def extensor(self) -> GradedExtensor:
        """``|χ⟩`` expanded linearly over unitized basis chronons."""
        return unit_expand(self.op)

    def __add__(self, other):
        return ArrowChronon(self.op + other.op)

    def __sub__(self, other):
        return ArrowChronon(self.op - other.op)

    def scale(self, c):
        return ArrowChronon(self.op.scale(c))

    def is_zero(self):
        return self.op.is_zero()


def _as_op(chi):
    return chi.op if isinstance(chi, ArrowChronon) else chi


@dataclass(frozen=True)
class LiftedGenerator:
    """A linear map on chronons, labeled for reports."""

    kind: str
    indices: tuple
    action: Callable[[ShiftPolyOperator], ShiftPolyOperator]

    def __call__(self, chi):
        out = self.action(_as_op(chi))
        return ArrowChronon(out) if isinstance(chi, ArrowChronon) else out

    def __add__(self, other):
        return LiftedGenerator(f"({self.kind}+{other.kind})", self.indices + other.indices,
                               lambda op: self.action(op) + other.action(op))

    def __sub__(self, other):
        return LiftedGenerator(f"({self.kind}-{other.kind})", self.indices + other.indices,
                               lambda op: self.action(op) - other.action(op))

    def scale(self, c):
        return LiftedGenerator(self.kind, self.indices, lambda op: self.action(op).scale(c))

    def then(self, first: "LiftedGenerator") -> "LiftedGenerator":
        """Composition ``self ∘ first``."""
        return LiftedGenerator(f"{self.kind}{first.kind}", self.indices + first.indices,
                               lambda op: self.action(first.action(op)))

    def on_generator(self, g: GeneratorId) -> GradedExtensor:
        """Image of a unitized chronon generator, re-expanded over atoms."""
        if not isinstance(g.content, ShiftPolyOperator):
            raise KeyError(g)
        image = self.action(g.content)
        if image.is_zero():
            return GradedExtensor.zero()
        return unit_expand(image)


def bracket(a: LiftedGenerator, b: LiftedGenerator, chi):
    """``[a, b]`` evaluated on one chronon."""
    return a(b(chi)) - b(a(chi))


def lift_translation(mu: int, chi=None):
    """``P̃_μ|χ⟩ = |[p̃_μ, χ]⟩``; returns the map, or its value on ``chi``."""
    p = translation_generator(mu)
    g = LiftedGenerator("P", (mu,), lambda op: commutator(p, op))
    return g if chi is None else g(chi)


def lift_coordinate(mu: int, chi=None):
    """``X^μ|χ⟩ = ½|x^μ χ + χ x^μ⟩``."""
    x = coordinate_operator(mu)
    g = LiftedGenerator("X", (mu,), lambda op: (compose(x, op) + compose(op, x)).scale(HALF))
    return g if chi is None else g(chi)


def lift_lorentz(mu: int, lam: int, chi=None):
    """``J̃_{μλ}|χ⟩ = |[l̃_{μλ}, χ]⟩``."""
    l = lorentz_generator(mu, lam)
    g = LiftedGenerator("J", (mu, lam), lambda op: commutator(l, op))
    return g if chi is None else g(chi)


def lift_mixed(lam: int, nu: int, chi=None):
    """Commutator lift of ``x^λ p̃_ν`` (an sl(4) generator when λ ≠ ν)."""
    m = mixed_generator(lam, nu)
    g = LiftedGenerator("G", (lam, nu), lambda op: commutator(m, op))
    return g if chi is None else g(chi)


def lowered_lift_coordinate(mu: int) -> LiftedGenerator:
    """``X_μ = χ_{μν} X^ν`` as a lifted map."""
    parts = [(METRIC.low(mu, nu), lift_coordinate(nu)) for nu in AXES]
    return LiftedGenerator("X_", (mu,), lambda op: sum(
        (g.action(op).scale(c) for c, g in parts if c), ShiftPolyOperator.zero()))


def spin_split(mu: int, lam: int) -> tuple[LiftedGenerator, LiftedGenerator]:
    """``(L̃_{μλ}, S̃_{μλ})`` with ``L̃ = X_μ P̃_λ - X_λ P̃_μ`` and ``S̃ = J̃ - L̃``."""
    if mu == lam:
        raise ValueError("spin_split needs two distinct axes")
    orbital = (lowered_lift_coordinate(mu).then(lift_translation(lam))
               - lowered_lift_coordinate(lam).then(lift_translation(mu)))
    orbital = LiftedGenerator("L", (mu, lam), orbital.action)
    spin = lift_lorentz(mu, lam) - orbital
    return orbital, LiftedGenerator("S", (mu, lam), spin.action)


# ----------------------------------------------------------------------------

def adjoint(chi):
    """Arrow reversal ``|n←m⟩ -> ⟨m←n|``.

    Over the rationals this is the transpose; the result is the operator whose
    components are the components of the dual chronon in the reciprocal basis.
    """
    op = _as_op(chi).transpose()
    return ArrowChronon(op) if isinstance(chi, ArrowChronon) else op


def adjoint_conventions(chi, window: int) -> dict:
    """Compare two readings of arrow reversal on a finite window.

    ``symbolic``: transpose of the canonical form (``U^u M_f T^d -> U^d M_f T^u``).
    ``truncated``: transpose of the operator's matrix cut down to the window.
    Returns both matrices and the set of entries where they differ.
    """
    op = _as_op(chi)
    symbolic = op.transpose().matrix(window)
    mat = op.matrix(window)
    truncated = [list(r) for r in zip(*mat)]
    diff = {(i, j) for i, row in enumerate(symbolic) for j, v in enumerate(row) if v != truncated[i][j]}
    return {"symbolic": symbolic, "truncated": truncated, "discrepancies": diff}


def trace_metric(chi) -> WindowPolynomial:
    """``|χ|² = tr χ²`` summed over states in ``[0, W)⁴`` as a polynomial in W.

    Only the zero-shift part of ``χ²`` reaches the diagonal.  A constant
    polynomial means the trace converges.
    """
    op = _as_op(chi)
    return window_sum(compose(op, op).zero_shift_part())


def dual_pairing(bra, ket, window: int) -> Fraction:
    """``⟨φ|χ⟩ = Σ φ(n←m) χ(n←m)`` over arrows with both ends in the window."""
    a = _as_op(bra).matrix(window)
    b = _as_op(ket).matrix(window)
    return sum((x * y for ra, rb in zip(a, b) for x, y in zip(ra, rb)), Fraction(0))


def random_chronon(rng: random.Random, n_terms: int = 3, max_shift: int = 2,
                   max_degree: int = 2) -> ArrowChronon:
    """Random rational combination of ``U^a M_poly T^b`` terms.

    Small shifts and degrees keep windows small while still exercising the
    boundary indicators produced by composition.
    """
    op = ShiftPolyOperator.zero()
    for _ in range(n_terms):
        up = [0] * DIM
        down = [0] * DIM
        for _ in range(rng.randint(0, max_shift)):
            up[rng.randrange(DIM)] += 1
        for _ in range(rng.randint(0, max_shift)):
            down[rng.randrange(DIM)] += 1
        exps = [0] * DIM
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(DIM)] += 1
        c = Fraction(rng.randint(-5, 5) or 1, rng.randint(1, 4))
        f = CoeffFn.monomial(exps).scale(c)
        if rng.random() < 0.3:
            f = f + CoeffFn.point([rng.randint(0, 1) for _ in range(DIM)])
        op = op + ShiftPolyOperator.term(up, down, f)
    if op.is_zero():
        op = ShiftPolyOperator.identity()
    return ArrowChronon(op)


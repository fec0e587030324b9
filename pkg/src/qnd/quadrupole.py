"""
Quadrupole chronons ``χ^n_m_k^l``: four-index arrays with a serial and a
parallel product and the two matching contractions.

Serial:    (a·b)^n_m_k^l = a^n_m_r^s b^r_s_k^l
Parallel:  (a∘b)^n_m_k^l = a^n_s_r^l b^r_m_k^s
tr_o χ = χ^n_m_n^m      tr χ = χ^n_n_k^k

Small chronons (d ≤ 4) are dense numpy object arrays of Fractions; larger ones
are sparse ``{(n, m, k, l): value}`` maps.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import rational
from .lattice import AXES, METRIC, ShiftPolyOperator, translation_generator

DENSE_MAX = 4


class DimensionMismatch(ValueError):
    pass


class QuadChronon:
    __slots__ = ("dim", "_dense", "_sparse")

    def __init__(self, dim: int, data=None):
        self.dim = dim
        self._dense = None
        self._sparse = None
        if dim <= DENSE_MAX:
            arr = np.full((dim,) * 4, Fraction(0), dtype=object)
            if isinstance(data, np.ndarray):
                if data.shape != (dim,) * 4:
                    raise DimensionMismatch(f"expected shape {(dim,) * 4}, got {data.shape}")
                arr = np.vectorize(Fraction, otypes=[object])(data)
            elif data:
                for idx, v in data.items():
                    arr[idx] = Fraction(v)
            self._dense = arr
        else:
            if isinstance(data, np.ndarray):
                data = {tuple(i): v for i, v in np.ndenumerate(data) if v != 0}
            self._sparse = {tuple(k): Fraction(v) for k, v in (data or {}).items() if v != 0}

    @property
    def is_dense(self):
        return self._dense is not None

    def items(self):
        if self._dense is not None:
            return ((idx, v) for idx, v in np.ndenumerate(self._dense) if v != 0)
        return iter(self._sparse.items())

    def to_dict(self) -> dict:
        return {tuple(int(i) for i in k): v for k, v in self.items()}

    def __getitem__(self, idx):
        if self._dense is not None:
            return self._dense[idx]
        return self._sparse.get(tuple(idx), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, QuadChronon):
            return NotImplemented
        return self.dim == other.dim and self.to_dict() == other.to_dict()

    def __add__(self, other):
        _same_dim(self, other)
        out = self.to_dict()
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return QuadChronon(self.dim, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return QuadChronon(self.dim, {k: c * v for k, v in self.items()})

    def is_zero(self):
        return next(iter(self.items()), None) is None

    def __repr__(self):
        return f"QuadChronon(dim={self.dim}, nnz={len(self.to_dict())})"


def _same_dim(a, b):
    if a.dim != b.dim:
        raise DimensionMismatch(f"dims {a.dim} and {b.dim}")


def zero(d):
    return QuadChronon(d)


def serial_unit(d: int) -> QuadChronon:
    """``e^n_m_k^l = δ^n_k δ_m^l``: the identity of the serial product."""
    return QuadChronon(d, {(n, m, n, m): 1 for n in range(d) for m in range(d)})


def serial_product(a: QuadChronon, b: QuadChronon) -> QuadChronon:
    _same_dim(a, b)
    d = a.dim
    if a.is_dense and b.is_dense:
        out = a._dense.reshape(d * d, d * d) @ b._dense.reshape(d * d, d * d)
        return QuadChronon(d, out.reshape((d,) * 4))
    by_row = {}
    for (r, s, k, l), v in b.items():
        by_row.setdefault((r, s), []).append((k, l, v))
    out = {}
    for (n, m, r, s), u in a.items():
        for k, l, v in by_row.get((r, s), ()):
            out[(n, m, k, l)] = out.get((n, m, k, l), 0) + u * v
    return QuadChronon(d, out)


def parallel_product(a: QuadChronon, b: QuadChronon) -> QuadChronon:
    _same_dim(a, b)
    d = a.dim
    if a.is_dense and b.is_dense:
        left = a._dense.transpose(0, 3, 1, 2).reshape(d * d, d * d)     # [(n,l),(s,r)]
        right = b._dense.transpose(3, 0, 1, 2).reshape(d * d, d * d)    # [(s,r),(m,k)]
        out = (left @ right).reshape((d,) * 4)                          # [n,l,m,k]
        return QuadChronon(d, out.transpose(0, 2, 3, 1))
    by_sr = {}
    for (r, m, k, s), v in b.items():
        by_sr.setdefault((s, r), []).append((m, k, v))
    out = {}
    for (n, s, r, l), u in a.items():
        for m, k, v in by_sr.get((s, r), ()):
            out[(n, m, k, l)] = out.get((n, m, k, l), 0) + u * v
    return QuadChronon(d, out)


def trace_serial(a: QuadChronon) -> Fraction:
    """``tr_o χ = χ^n_m_n^m``."""
    return sum((v for (n, m, k, l), v in a.items() if n == k and m == l), Fraction(0))


def trace_parallel(a: QuadChronon) -> Fraction:
    """``tr χ = χ^n_n_k^k``."""
    return sum((v for (n, m, k, l), v in a.items() if n == m and k == l), Fraction(0))


def serial_matrix(a: QuadChronon):
    """``χ`` as a d²×d² Fraction matrix with rows (n,m) and columns (k,l)."""
    d = a.dim
    mat = [[Fraction(0)] * (d * d) for _ in range(d * d)]
    for (n, m, k, l), v in a.items():
        mat[n * d + m][k * d + l] = v
    return mat


def from_serial_matrix(mat, d) -> QuadChronon:
    return QuadChronon(d, {(i // d, i % d, j // d, j % d): v
                           for i, row in enumerate(mat) for j, v in enumerate(row) if v != 0})


def serial_inverse(a: QuadChronon) -> QuadChronon:
    return from_serial_matrix(rational.inverse(serial_matrix(a)), a.dim)


def gl_transport(g, a: QuadChronon) -> QuadChronon:
    """Induced action of ``g ∈ GL(T)``: upper indices n, l by g, lower m, k by g⁻¹."""
    d = a.dim
    g = rational.as_fractions(g)
    gi = rational.inverse(g)
    out = {}
    for (n, m, k, l), v in a.items():
        for n2 in range(d):
            if not g[n2][n]:
                continue
            for l2 in range(d):
                if not g[l2][l]:
                    continue
                for m2 in range(d):
                    if not gi[m][m2]:
                        continue
                    for k2 in range(d):
                        c = gi[k][k2]
                        if c:
                            key = (n2, m2, k2, l2)
                            out[key] = out.get(key, 0) + g[n2][n] * gi[m][m2] * c * g[l2][l] * v
    return QuadChronon(d, out)


def random_quad(rng: random.Random, d: int, density: float = 1.0, span: int = 4) -> QuadChronon:
    data = {}
    for idx in itertools.product(range(d), repeat=4):
        if rng.random() < density:
            data[idx] = Fraction(rng.randint(-span, span), rng.randint(1, 3))
    return QuadChronon(d, data)


# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class VacuumII:
    """``χ^{νμ} |p̃_ν⟩ ⊗ |p̃_μ⟩`` with the p̃'s cut down to a window.

    The left factor is the head arrow of the double arrow, the right factor the
    tail arrow.
    """

    window: int
    coefficients: tuple
    factors: tuple
    orientation: dict = field(default_factory=lambda: {"left": "head arrow", "right": "tail arrow"})

    @property
    def topon_dim(self):
        return self.window ** 4

    def coefficient(self, nu, mu):
        return self.coefficients[nu - 1][mu - 1]

    def to_quad(self) -> QuadChronon:
        """The four-index chronon ``Σ χ^{νμ} (p̃_ν)^n_m (p̃_μ)^k_l``."""
        out = {}
        for nu in AXES:
            for mu in AXES:
                c = self.coefficient(nu, mu)
                if not c:
                    continue
                for (n, m), u in self.factors[nu - 1].items():
                    for (k, l), v in self.factors[mu - 1].items():
                        out[(n, m, k, l)] = out.get((n, m, k, l), 0) + c * u * v
        return QuadChronon(self.topon_dim, out)

    def recovered_coefficient(self, nu, mu) -> Fraction:
        """Project the assembled tensor back onto ``|p̃_ν⟩⊗|p̃_μ⟩``.

        The truncated p̃'s have disjoint supports, so the projection is a
        Frobenius pairing divided by the squared norms.
        """
        q = self.to_quad().to_dict()
        a, b = self.factors[nu - 1], self.factors[mu - 1]
        num = sum((q.get((n, m, k, l), 0) * u * v for (n, m), u in a.items() for (k, l), v in b.items()),
                  Fraction(0))
        norm = sum(u * u for u in a.values()) * sum(v * v for v in b.values())
        return num / norm


def window_matrix(op: ShiftPolyOperator, window: int) -> dict:
    """Sparse ``{(row, col): value}`` for ``op`` on ``[0, window)⁴``."""
    pts = list(itertools.product(range(window), repeat=4))
    index = {p: i for i, p in enumerate(pts)}
    out = {}
    for j, p in enumerate(pts):
        for tgt, c in op.apply(p).items():
            i = index.get(tgt)
            if i is not None:
                out[(i, j)] = c
    return out


def build_vacuum_II(window: int = 2) -> VacuumII:
    if window < 2:
        raise ValueError("vacuum II needs a window of at least 2 per axis")
    coeffs = tuple(tuple(row) for row in METRIC.upper)
    factors = tuple(window_matrix(translation_generator(mu), window) for mu in AXES)
    return VacuumII(window, coeffs, factors)

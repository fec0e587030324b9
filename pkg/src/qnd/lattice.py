"""
Exact operators on the topon lattice ℕ⁴.

Every operator is kept in the canonical form

    Σ  U^up ∘ M_f ∘ T^down ,     min(up_μ, down_μ) = 0 on every axis,

where ``T_μ`` lowers ``n_μ`` by one (killing states that would leave ℕ⁴),
``U_μ`` raises it, and ``M_f`` multiplies by a coefficient function ``f(n)``.

Coefficient functions are expanded in a per-axis basis that is linearly
independent on ℕ: the powers ``n^a`` and the point masses ``δ(n = k)``.  Any
function that is polynomial above some threshold has a unique expansion in
this basis, so canonical forms are unique and structural equality is exact.
:func:`operators_equal` decides equality independently, by evaluation on a
finite window large enough to be a proof.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import rational

AXES = (1, 2, 3, 4)
DIM = 4

POW, DELTA = 0, 1
ZERO4 = (0, 0, 0, 0)


LatticePoint = tuple  # 4-tuple of non-negative ints


def lattice_point(m) -> LatticePoint:
    """Validate and normalize a point of ℕ⁴."""
    m = tuple(m)
    if len(m) != DIM or any(not isinstance(x, int) or x < 0 for x in m):
        raise ValueError(f"lattice points are 4-tuples of non-negative ints, got {m!r}")
    return m


def unit_vector(mu: int) -> tuple:
    _check_axis(mu)
    return tuple(int(i == mu - 1) for i in range(DIM))


def _check_axis(mu):
    if mu not in AXES:
        raise ValueError(f"axis must be one of {AXES}, got {mu!r}")


# ----------------------------------------------------------------------------
# one-axis basis functions: (POW, a) -> n**a, (DELTA, k) -> [n == k]

@lru_cache(maxsize=None)
def _mul1(p, q):
    (kp, vp), (kq, vq) = p, q
    if kp == POW and kq == POW:
        return {(POW, vp + vq): 1}
    if kp == POW:
        return {q: vq ** vp}
    if kq == POW:
        return {p: vp ** vq}
    return {p: 1} if vp == vq else {}


@lru_cache(maxsize=None)
def _shift1(p, s):
    """Expansion of ``f(n + s)`` for one basis function ``f``."""
    kind, v = p
    if kind == POW:
        out = {(POW, j): comb(v, j) * s ** (v - j) for j in range(v + 1)}
        return {k: c for k, c in out.items() if c}
    k = v - s
    return {(DELTA, k): 1} if k >= 0 else {}


def _eval1(p, n):
    kind, v = p
    if kind == POW:
        return n ** v
    return 1 if n == v else 0


def _indicator1(c):
    """``[n >= c]`` in the basis."""
    out = {(POW, 0): 1}
    for k in range(c):
        out[(DELTA, k)] = -1
    return out


def _accumulate(out, axes, c):
    # per-axis weights are integers; multiply them out before touching c
    for combo in itertools.product(*(ax.items() for ax in axes)):
        w = 1
        for _, x in combo:
            w *= x
        key = tuple(lab for lab, _ in combo)
        out[key] = out.get(key, 0) + c * w


class CoeffFn:
    """Rational function on ℕ⁴ expanded in the tensor power/point-mass basis.

    ``terms`` maps a 4-tuple of per-axis basis labels to a nonzero Fraction.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        self._terms = {}
        for k, c in (terms or {}).items():
            c = Fraction(c)
            if c != 0:
                self._terms[tuple(k)] = self._terms.get(tuple(k), 0) + c
        self._terms = {k: c for k, c in self._terms.items() if c != 0}

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def constant(cls, c=1):
        return cls({((POW, 0),) * DIM: c})

    @classmethod
    def power(cls, mu: int, a: int = 1):
        """``n_μ ** a``."""
        labels = [(POW, 0)] * DIM
        labels[mu - 1] = (POW, a)
        return cls({tuple(labels): 1})

    @classmethod
    def point(cls, m):
        """``[n == m]`` for a lattice point ``m``."""
        return cls({tuple((DELTA, k) for k in m): 1})

    @classmethod
    def monomial(cls, exponents):
        return cls({tuple((POW, a) for a in exponents): 1})

    @classmethod
    def indicator(cls, thresholds):
        """``Π_μ [n_μ >= c_μ]``."""
        out = cls.constant(1)
        for mu, c in enumerate(thresholds):
            if c:
                f = {}
                for lab, v in _indicator1(c).items():
                    key = [(POW, 0)] * DIM
                    key[mu] = lab
                    f[tuple(key)] = v
                out = out * CoeffFn(f)
        return out

    def items(self):
        return self._terms.items()

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, CoeffFn) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return CoeffFn._raw(out)

    def __neg__(self):
        return CoeffFn._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return CoeffFn()
        return CoeffFn._raw({k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, CoeffFn):
            return self.scale(other)
        out = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                axes = [_mul1(p, q) for p, q in zip(ka, kb)]
                if not all(axes):
                    continue
                c = ca * cb
                _accumulate(out, axes, c)
        return CoeffFn._raw({k: v for k, v in out.items() if v != 0})

    __rmul__ = scale

    def shift(self, s) -> "CoeffFn":
        """The function ``n -> f(n + s)`` (``s`` may be negative)."""
        if not any(s):
            return self
        out = {}
        for key, c in self._terms.items():
            axes = [_shift1(p, si) for p, si in zip(key, s)]
            if not all(axes):
                continue
            _accumulate(out, axes, c)
        return CoeffFn._raw({k: v for k, v in out.items() if v != 0})

    def __call__(self, n) -> Fraction:
        total = Fraction(0)
        for key, c in self._terms.items():
            v = c
            for p, ni in zip(key, n):
                v *= _eval1(p, ni)
                if not v:
                    break
            total += v
        return total

    def degree(self) -> int:
        """Largest per-axis power present."""
        return max((v for key in self._terms for kind, v in key if kind == POW), default=0)

    def threshold(self) -> int:
        """One past the largest point-mass position on any axis."""
        return max((v + 1 for key in self._terms for kind, v in key if kind == DELTA), default=0)

    def canonical_key(self):
        return tuple(sorted(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for key, c in sorted(self._terms.items()):
            fac = []
            for mu, (kind, v) in enumerate(key, 1):
                if kind == POW and v:
                    fac.append(f"n{mu}" + (f"^{v}" if v > 1 else ""))
                elif kind == DELTA:
                    fac.append(f"[n{mu}={v}]")
            parts.append(f"{c}" + ("·" + "·".join(fac) if fac else ""))
        return " + ".join(parts)


# ----------------------------------------------------------------------------

class WindowPolynomial:
    """Exact polynomial in the window size ``W`` (valid for ``W >= valid_from``).

    Used for sums over ``[0, W)⁴`` that need not converge as ``W`` grows.
    """

    def __init__(self, coeffs, valid_from=0):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.valid_from = valid_from

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def converges(self) -> bool:
        return self.degree <= 0

    @property
    def value(self) -> Fraction:
        """The limit; only defined for a constant polynomial."""
        if not self.converges:
            raise ValueError(f"window sum diverges: {self}")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __call__(self, W):
        return sum((c * Fraction(W) ** i for i, c in enumerate(self.coeffs)), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, WindowPolynomial):
            return self.coeffs == other.coeffs
        return self.converges and self.value == other

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return WindowPolynomial([x + y for x, y in zip(a, b)], max(self.valid_from, other.valid_from))

    def __mul__(self, other):
        if not isinstance(other, WindowPolynomial):
            return WindowPolynomial([c * other for c in self.coeffs], self.valid_from)
        out = [Fraction(0)] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return WindowPolynomial(out, max(self.valid_from, other.valid_from))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}·W^{i}" if i else f"{c}" for i, c in enumerate(self.coeffs) if c)


@lru_cache(maxsize=None)
def _power_sum(a):
    """Coefficients of ``Σ_{n<W} n**a`` as a polynomial in W (Lagrange fit)."""
    pts = list(range(a + 2))
    vals = [sum(Fraction(n) ** a for n in range(W)) for W in pts]
    coeffs = [Fraction(0)] * (a + 2)
    for i, xi in enumerate(pts):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(pts):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += vals[i] * b / denom
    return tuple(coeffs)


def window_sum(f: CoeffFn) -> WindowPolynomial:
    """``Σ_{n ∈ [0,W)⁴} f(n)`` as a polynomial in W."""
    total = WindowPolynomial([])
    for key, c in f.items():
        term = WindowPolynomial([c])
        for kind, v in key:
            if kind == POW:
                term = term * WindowPolynomial(_power_sum(v))
            else:
                term = term * WindowPolynomial([1], valid_from=v + 1)
        total = total + term
    total.valid_from = max(total.valid_from, f.threshold())
    return total


# ----------------------------------------------------------------------------

def _vmax(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class ShiftPolyOperator:
    """Canonical shift-polynomial operator ``Σ U^up M_f T^down``.

    ``terms`` maps ``(up, down)`` pairs of 4-tuples to :class:`CoeffFn`.
    Instances are immutable; arithmetic returns new operators.
    """

    __slots__ = ("_terms",)
    unit_level = 2

    def __init__(self, terms=None):
        acc = ShiftPolyOperator._raw({})
        for (up, down), f in (terms or {}).items():
            acc = acc + ShiftPolyOperator.term(up, down, f)
        self._terms = acc._terms

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def _pure(cls, up, down, f):
        if not f:
            return cls._raw({})
        return cls._raw({(tuple(up), tuple(down)): f})

    @classmethod
    def term(cls, up, down, f=None) -> "ShiftPolyOperator":
        """``U^up ∘ M_f ∘ T^down`` for arbitrary (not yet canonical) shifts."""
        if f is None:
            f = CoeffFn.constant(1)
        elif not isinstance(f, CoeffFn):
            f = CoeffFn.constant(f)
        up, down = tuple(up), tuple(down)
        if any(x < 0 for x in up + down):
            raise ValueError("shift exponents must be non-negative")
        if all(min(u, d) == 0 for u, d in zip(up, down)):
            return cls._pure(up, down, f)
        one = CoeffFn.constant(1)
        return cls._pure(up, ZERO4, one) @ cls._pure(ZERO4, ZERO4, f) @ cls._pure(ZERO4, down, one)

    @classmethod
    def identity(cls):
        return cls._pure(ZERO4, ZERO4, CoeffFn.constant(1))

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def multiplication(cls, f: CoeffFn):
        return cls._pure(ZERO4, ZERO4, f)

    @classmethod
    def down(cls, mu: int, k: int = 1):
        e = unit_vector(mu)
        return cls._pure(ZERO4, tuple(k * x for x in e), CoeffFn.constant(1))

    @classmethod
    def up(cls, mu: int, k: int = 1):
        e = unit_vector(mu)
        return cls._pure(tuple(k * x for x in e), ZERO4, CoeffFn.constant(1))

    @classmethod
    def arrow(cls, head, tail):
        """The rank-one operator ``|head⟩⟨tail|``."""
        head, tail = tuple(head), tuple(tail)
        up = tuple(max(h - t, 0) for h, t in zip(head, tail))
        down = tuple(max(t - h, 0) for h, t in zip(head, tail))
        base = tuple(t - d for t, d in zip(tail, down))
        return cls._pure(up, down, CoeffFn.point(base))

    # ------------------------------------------------------------------

    def items(self):
        return self._terms.items()

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def __add__(self, other):
        if not isinstance(other, ShiftPolyOperator):
            return NotImplemented
        out = dict(self._terms)
        for k, f in other._terms.items():
            g = out[k] + f if k in out else f
            if g:
                out[k] = g
            else:
                out.pop(k, None)
        return ShiftPolyOperator._raw(out)

    def __neg__(self):
        return ShiftPolyOperator._raw({k: -f for k, f in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return ShiftPolyOperator.zero()
        return ShiftPolyOperator._raw({k: f.scale(c) for k, f in self._terms.items()})

    def __mul__(self, c):
        if isinstance(c, ShiftPolyOperator):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, ShiftPolyOperator):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # ------------------------------------------------------------------

    def apply(self, m) -> dict:
        """Action on the basis state ``|m⟩``: ``{lattice point: coefficient}``."""
        m = lattice_point(m)
        out = {}
        for (up, down), f in self._terms.items():
            if any(mi < di for mi, di in zip(m, down)):
                continue
            base = tuple(mi - di for mi, di in zip(m, down))
            c = f(base)
            if c:
                tgt = tuple(b + u for b, u in zip(base, up))
                v = out.get(tgt, 0) + c
                if v:
                    out[tgt] = v
                else:
                    out.pop(tgt)
        return out

    def apply_state(self, state: dict) -> dict:
        out = {}
        for m, c in state.items():
            for tgt, v in self.apply(m).items():
                w = out.get(tgt, 0) + c * v
                if w:
                    out[tgt] = w
                else:
                    out.pop(tgt, None)
        return out

    def transpose(self) -> "ShiftPolyOperator":
        """Matrix transpose on ℕ⁴: ``U^u M_f T^d  ->  U^d M_f T^u``."""
        return ShiftPolyOperator._raw({(d, u): f for (u, d), f in self._terms.items()})

    def sufficient_window(self) -> int:
        """Per-axis window size that decides identities involving this operator."""
        shift = max((max(d) for (u, d) in self._terms), default=0)
        thr = max((max((d[i] + f.threshold()) for i in range(DIM)) for (u, d), f in self._terms.items()),
                  default=0)
        deg = max((f.degree() for f in self._terms.values()), default=0)
        return max(shift, thr) + deg + 1

    def max_shift(self) -> int:
        return max((max(u + d) for (u, d) in self._terms), default=0)

    def zero_shift_part(self) -> CoeffFn:
        return self._terms.get((ZERO4, ZERO4), CoeffFn())

    def canonical_key(self):
        return tuple(sorted(((k, f.canonical_key()) for k, f in self._terms.items()),
                            key=lambda kv: kv[0]))

    def atoms(self):
        """``(coefficient, atom)`` pairs, each atom a single-basis-function term."""
        for (up, down), f in sorted(self._terms.items()):
            for key, c in sorted(f.items()):
                yield c, ShiftPolyOperator._raw({(up, down): CoeffFn._raw({key: Fraction(1)})})

    def matrix(self, window: int):
        """Dense Fraction matrix on ``[0, window)⁴`` (row = target, col = source)."""
        pts = list(itertools.product(range(window), repeat=DIM))
        index = {p: i for i, p in enumerate(pts)}
        mat = [[Fraction(0)] * len(pts) for _ in pts]
        for j, p in enumerate(pts):
            for tgt, c in self.apply(p).items():
                i = index.get(tgt)
                if i is not None:
                    mat[i][j] = c
        return mat

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for (up, down), f in sorted(self._terms.items()):
            s = ""
            if any(up):
                s += "U" + "".join(str(x) for x in up)
            s += f"[{f}]"
            if any(down):
                s += "T" + "".join(str(x) for x in down)
            parts.append(s)
        return " + ".join(parts)

    __str__ = __repr__


def compose(a: ShiftPolyOperator, b: ShiftPolyOperator) -> ShiftPolyOperator:
    """``a ∘ b`` in canonical form.

    For single terms, ``U^u1 M_f1 T^d1 ∘ U^u2 M_f2 T^d2`` sends ``|m⟩`` to
    ``m + net`` with coefficient ``f2(m-d2) f1(m-d2+u2-d1)``, provided
    ``m >= L = max(d2, d1+d2-u2)``.  Writing ``n = m - D`` with ``D`` the
    canonical down-shift gives coefficient ``[n >= L-D] f2(n+D-d2) f1(n+D-d2+u2-d1)``.
    """
    out = {}
    for (u1, d1), f1 in a.items():
        for (u2, d2), f2 in b.items():
            net = tuple(x + y - z - w for x, y, z, w in zip(u1, u2, d1, d2))
            D = tuple(max(0, -v) for v in net)
            U = tuple(max(0, v) for v in net)
            L = _vmax(d2, tuple(x + y - z for x, y, z in zip(d1, d2, u2)))
            thr = tuple(l - dd for l, dd in zip(L, D))
            s2 = tuple(dd - y for dd, y in zip(D, d2))
            s1 = tuple(x + z - w for x, z, w in zip(s2, u2, d1))
            g = f2.shift(s2) * f1.shift(s1)
            if any(thr):
                g = g * CoeffFn.indicator(thr)
            if not g:
                continue
            k = (U, D)
            h = out[k] + g if k in out else g
            if h:
                out[k] = h
            else:
                out.pop(k)
    return ShiftPolyOperator._raw(out)


def commutator(a: ShiftPolyOperator, b: ShiftPolyOperator) -> ShiftPolyOperator:
    return compose(a, b) - compose(b, a)


def sufficient_window(*ops: ShiftPolyOperator) -> int:
    """Window size W such that agreement on ``[0,W)⁴`` proves agreement on ℕ⁴.

    Per axis, each term's coefficient (as a function of the source state) is
    arbitrary below ``down + threshold`` and a polynomial of bounded degree
    above it; the window covers every breakpoint plus ``degree + 1`` points.
    """
    return max((op.sufficient_window() for op in ops), default=1)


def operators_equal(a: ShiftPolyOperator, b: ShiftPolyOperator, window: int | None = None) -> bool:
    """Decide ``a == b`` on all of ℕ⁴ by evaluation on a sufficient window."""
    W = window if window is not None else sufficient_window(a, b)
    for m in itertools.product(range(W), repeat=DIM):
        if a.apply(m) != b.apply(m):
            return False
    return True


# ----------------------------------------------------------------------------
# the anti-Euclidean metric and the topon generators

class AntiEuclideanMetric:
    """``χ^{νμ} = 1 - δ^{νμ}`` and its exact inverse ``χ_{μν}``."""

    def __init__(self):
        self.upper = [[Fraction(int(i != j)) for j in range(DIM)] for i in range(DIM)]
        self.lower = rational.inverse(self.upper)

    def up(self, nu, mu):
        return self.upper[nu - 1][mu - 1]

    def low(self, mu, nu):
        return self.lower[mu - 1][nu - 1]


METRIC = AntiEuclideanMetric()


@lru_cache(maxsize=None)
def translation_generator(mu: int) -> ShiftPolyOperator:
    """``p̃_μ |m + 1_μ⟩ = |m⟩``, zero when the result would leave ℕ⁴."""
    _check_axis(mu)
    return ShiftPolyOperator.down(mu)


@lru_cache(maxsize=None)
def coordinate_operator(mu: int) -> ShiftPolyOperator:
    """``x^μ |n⟩ = (n_μ + 1) |n + 1_μ⟩``."""
    _check_axis(mu)
    f = CoeffFn.power(mu, 1) + CoeffFn.constant(1)
    return ShiftPolyOperator._pure(unit_vector(mu), ZERO4, f)


@lru_cache(maxsize=None)
def lowered_coordinate(mu: int) -> ShiftPolyOperator:
    """``x_μ = χ_{μν} x^ν``."""
    _check_axis(mu)
    out = ShiftPolyOperator.zero()
    for nu in AXES:
        out = out + coordinate_operator(nu).scale(METRIC.low(mu, nu))
    return out


@lru_cache(maxsize=None)
def lorentz_generator(mu: int, lam: int) -> ShiftPolyOperator:
    """``l̃_{μλ} = x_μ p̃_λ - x_λ p̃_μ`` (antisymmetrized without a factor ½)."""
    _check_axis(mu)
    _check_axis(lam)
    if mu == lam:
        raise ValueError("Lorentz generator needs two distinct axes")
    return (compose(lowered_coordinate(mu), translation_generator(lam))
            - compose(lowered_coordinate(lam), translation_generator(mu)))


@lru_cache(maxsize=None)
def mixed_generator(lam: int, nu: int) -> ShiftPolyOperator:
    """``x^λ p̃_ν``; for λ ≠ ν these span the traceless part of gl(4)."""
    return compose(coordinate_operator(lam), translation_generator(nu))


def lorentz_pairs():
    return [(m, l) for m in AXES for l in AXES if m < l]


def lorentz_structure_constants() -> dict:
    """Solve ``[l̃_{μλ}, l̃_{ρσ}] = Σ c · l̃_{αβ}`` (α<β) for every pair of pairs.

    Coefficients come from exact evaluation on basis states and are then
    checked as an operator identity.
    """
    pairs = lorentz_pairs()
    basis = [lorentz_generator(*p) for p in pairs]

    def coords(op):
        # canonical forms are unique, so atom coefficients are coordinates
        return {atom.canonical_key(): c for c, atom in op.atoms()}

    cols = [coords(b) for b in basis]
    keys = sorted(set().union(*cols))
    rows = [[col.get(k, Fraction(0)) for col in cols] for k in keys]
    table = {}
    for i, p in enumerate(pairs):
        for j, q in enumerate(pairs):
            target = commutator(basis[i], basis[j])
            rhs = coords(target)
            if not set(rhs) <= set(keys):
                raise ArithmeticError(f"[l{p}, l{q}] leaves the span of the Lorentz generators")
            coeffs = _least_solve(rows, [rhs.get(k, Fraction(0)) for k in keys])
            recon = ShiftPolyOperator.zero()
            for c, b in zip(coeffs, basis):
                recon = recon + b.scale(c)
            if recon != target:
                raise ArithmeticError(f"[l{p}, l{q}] does not close on the Lorentz generators")
            table[(p, q)] = {pairs[k]: c for k, c in enumerate(coeffs) if c}
    return table


def _least_solve(rows, rhs):
    """Exact solve of an overdetermined consistent system by row reduction."""
    n = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs) if any(r) or b]
    piv_cols = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][c]
        aug[r] = [x / p for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, len(aug)):
        if aug[i][n] != 0:
            raise ArithmeticError("inconsistent system")
    sol = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][n]
    return sol

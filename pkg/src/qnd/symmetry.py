"""
S(4) as the symmetry group of the directed hypercube: Galois factorization
``S(4) = 2 ⋊ (3 ⋊ 4₂)``, Lorentz classification through a null tetrad, the
serial/parallel double algebra, and the arrow algebra ``††[S←S]``.

Permutations act on ``{1, 2, 3, 4}``; products compose right to left,
``(g·h)(i) = g(h(i))``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .lattice import AXES, METRIC
from .report import Check, SuiteReport


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        if sorted(self.images) != list(AXES):
            raise ValueError(f"{self.images} is not a bijection on {{1,2,3,4}}")

    @classmethod
    def identity(cls):
        return cls(AXES)

    @classmethod
    def cycles(cls, *cycles):
        img = list(AXES)
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(tuple(img))

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other):
        return Permutation(tuple(self(other(i)) for i in AXES))

    def inverse(self):
        img = [0] * 4
        for i in AXES:
            img[self(i) - 1] = i
        return Permutation(tuple(img))

    def cycle_decomposition(self):
        seen, out = set(), []
        for i in AXES:
            if i in seen:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self):
        lengths = sorted((len(c) for c in self.cycle_decomposition()), reverse=True)
        return tuple(lengths + [1] * (4 - sum(lengths)))

    def sign(self):
        return (-1) ** sum(len(c) - 1 for c in self.cycle_decomposition())

    def order(self):
        return math.lcm(*(len(c) for c in self.cycle_decomposition())) if self.cycle_decomposition() else 1

    def __str__(self):
        cyc = self.cycle_decomposition()
        return "".join("(" + "".join(map(str, c)) + ")" for c in cyc) or "id"


ID = Permutation.identity()


def all_permutations():
    return [Permutation(p) for p in itertools.permutations(AXES)]


def klein_group():
    return [ID, Permutation.cycles((1, 2), (3, 4)), Permutation.cycles((1, 3), (2, 4)),
            Permutation.cycles((1, 4), (2, 3))]


def cyclic(gen):
    out, g = [ID], gen
    while g != ID:
        out.append(g)
        g = g * gen
    return out


@dataclass(frozen=True)
class SubgroupChoice:
    transposition: tuple
    three_cycle: tuple

    @property
    def two(self):
        return cyclic(Permutation.cycles(self.transposition))

    @property
    def three(self):
        return cyclic(Permutation.cycles(self.three_cycle))

    def describe(self):
        return {"2": "".join(map(str, self.transposition)), "3": "".join(map(str, self.three_cycle)),
                "4_2": "Klein"}


DEFAULT_CHOICE = SubgroupChoice((1, 2), (1, 2, 3))
ALTERNATIVE_CHOICES = (SubgroupChoice((2, 3), (2, 3, 4)), SubgroupChoice((1, 3), (1, 3, 4)),
                       SubgroupChoice((1, 4), (1, 2, 4)))


@dataclass(frozen=True)
class GaloisCoordinates:
    a: Permutation
    b: Permutation
    c: Permutation

    def product(self):
        return self.a * self.b * self.c


def factorization_table(choice: SubgroupChoice = DEFAULT_CHOICE) -> dict:
    """``{a·b·c: [(a, b, c), …]}`` over the whole product set."""
    table = {}
    for a in choice.two:
        for b in choice.three:
            for c in klein_group():
                table.setdefault(a * b * c, []).append(GaloisCoordinates(a, b, c))
    return table


def galois_factorize(g: Permutation, choice: SubgroupChoice = DEFAULT_CHOICE) -> GaloisCoordinates:
    hits = factorization_table(choice).get(g, [])
    if len(hits) != 1:
        raise ValueError(f"{g} has {len(hits)} factorizations under {choice.describe()}")
    return hits[0]


def is_bijection(choice: SubgroupChoice = DEFAULT_CHOICE) -> bool:
    table = factorization_table(choice)
    return len(table) == 24 and all(len(v) == 1 for v in table.values())


# ----------------------------------------------------------------------------

MINKOWSKI = np.diag([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True)
class NullTetradEmbedding:
    vectors: np.ndarray        # rows k_1..k_4
    scale: float

    def gram(self):
        return self.vectors @ MINKOWSKI @ self.vectors.T


def tetrahedron():
    s = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float)
    return s / np.sqrt(3)


def null_tetrad(tol: float = 1e-12) -> NullTetradEmbedding:
    """``k_a = λ(1, s_a)`` with unit tetrahedron vertices ``s_a``.

    ``k_a·k_b = λ²(1 - s_a·s_b)``; the scale is solved from the requirement
    that this equal 1 for ``a ≠ b``.
    """
    s = tetrahedron()
    dot = s[0] @ s[1]
    lam = 1.0 / np.sqrt(1.0 - dot)
    k = lam * np.hstack([np.ones((4, 1)), s])
    emb = NullTetradEmbedding(k, float(lam))
    target = np.ones((4, 4)) - np.eye(4)
    if np.max(np.abs(emb.gram() - target)) > tol:
        raise EmbeddingError("tetrad Gram matrix is not 1 - δ")
    return emb


@dataclass(frozen=True)
class LorentzClass:
    perm: Permutation
    matrix: np.ndarray
    det: float
    proper: bool
    metric_error: float


def classify_lorentz(g: Permutation, emb: NullTetradEmbedding | None = None, tol: float = 1e-10) -> LorentzClass:
    """The linear map ``k_a -> k_{g(a)}`` in the Minkowski frame."""
    emb = emb or null_tetrad()
    K = emb.vectors.T                                  # columns k_a
    L = K[:, [g(a) - 1 for a in AXES]] @ np.linalg.inv(K)
    err = float(np.max(np.abs(L.T @ MINKOWSKI @ L - MINKOWSKI)))
    if err > tol:
        raise EmbeddingError(f"{g}: metric preserved only to {err:.3g}")
    det = float(np.linalg.det(L))
    return LorentzClass(g, L, det, det > 0, err)


def gram_invariant(g: Permutation) -> bool:
    """``χ^{g(a) g(b)} = χ^{ab}`` exactly."""
    chi = METRIC.upper
    return all(chi[g(a) - 1][g(b) - 1] == chi[a - 1][b - 1] for a in AXES for b in AXES)


# ----------------------------------------------------------------------------
# group algebra

@dataclass(frozen=True)
class GroupAlgebraElement:
    coeffs: dict

    @classmethod
    def delta(cls, g):
        return cls({g: Fraction(1)})

    def convolve(self, other):
        out = {}
        for g, u in self.coeffs.items():
            for h, v in other.coeffs.items():
                out[g * h] = out.get(g * h, 0) + u * v
        return GroupAlgebraElement({k: v for k, v in out.items() if v})

    __matmul__ = convolve

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))


def random_element(rng: random.Random, support: int = 5, span: int = 4):
    perms = all_permutations()
    return GroupAlgebraElement({g: Fraction(rng.randint(-span, span) or 1, rng.randint(1, 3))
                                for g in rng.sample(perms, support)})


def serial_operator(axis: str, element: Permutation):
    """Left translation acting on one Galois coordinate only."""
    idx = "abc".index(axis)

    def act(coords: GaloisCoordinates):
        parts = [coords.a, coords.b, coords.c]
        parts[idx] = element * parts[idx]
        return GaloisCoordinates(*parts)

    return act


def double_algebra_check(choice: SubgroupChoice = DEFAULT_CHOICE, seed: int = 0, samples: int = 20) -> SuiteReport:
    rep = SuiteReport("s4/double-algebra", meta={"subgroups": choice.describe(), "seed": seed})
    basis = [v[0] for v in factorization_table(choice).values()]
    groups = {"a": choice.two, "b": choice.three, "c": klein_group()}
    for x, y in (("a", "b"), ("b", "c"), ("a", "c")):
        ok, count = True, 0
        for gx in groups[x]:
            for gy in groups[y]:
                sx, sy = serial_operator(x, gx), serial_operator(y, gy)
                for e in basis:
                    count += 1
                    ok &= sx(sy(e)) == sy(sx(e))
        rep.add(Check.expect(f"serial operators on {x} and {y} commute", ok, f"{count} cases"))
    r, k = Permutation.cycles((1, 2, 3)), Permutation.cycles((1, 2), (3, 4))
    left = GroupAlgebraElement.delta(r) @ GroupAlgebraElement.delta(k)
    right = GroupAlgebraElement.delta(k) @ GroupAlgebraElement.delta(r)
    rep.add(Check.expect("parallel product does not commute", left != right,
                         f"(123)*(12)(34) = {next(iter(left.coeffs))}, (12)(34)*(123) = {next(iter(right.coeffs))}"))
    rng = random.Random(seed)
    ok = True
    for _ in range(samples):
        x, y, z = (random_element(rng) for _ in range(3))
        ok &= (x @ y) @ z == x @ (y @ z)
    rep.add(Check.expect("convolution associative", ok, f"{samples} random triples"))
    return rep


# ----------------------------------------------------------------------------
# arrow algebra

@dataclass(frozen=True)
class Arrow:
    head: int
    tail: int

    def compose(self, other: "Arrow"):
        """``(i←j)∘(k←l)``; ``None`` (zero) when the middle labels differ."""
        if self.tail != other.head:
            return None
        return Arrow(self.head, other.tail)


def arrow_basis(n: int):
    return [Arrow(i, j) for i in range(n) for j in range(n)]


def matrix_unit(i, j, n):
    e = np.zeros((n, n), dtype=np.int64)
    e[i, j] = 1
    return e


def formal_quantization_check(n: int) -> SuiteReport:
    """``††[S←S] ≅ Mat(n)`` by structure constants."""
    if n < 1:
        raise ValueError("state space must be nonempty")
    rep = SuiteReport(f"s4/arrow-algebra-{n}")
    basis = arrow_basis(n)
    rep.add(Check.expect(f"dimension {n * n}", len(set(basis)) == n * n, f"{len(basis)} arrows"))
    index = {b: i for i, b in enumerate(basis)}
    ok = True
    for x in basis:
        for y in basis:
            prod = x.compose(y)
            arrow_sc = np.zeros(len(basis), dtype=np.int64)
            if prod is not None:
                arrow_sc[index[prod]] = 1
            m = matrix_unit(x.head, x.tail, n) @ matrix_unit(y.head, y.tail, n)
            matrix_sc = np.array([m[b.head, b.tail] for b in basis])
            ok &= np.array_equal(arrow_sc, matrix_sc)
    rep.add(Check.expect("structure constants match matrix units", bool(ok), f"{len(basis) ** 2} products"))
    images = np.array([matrix_unit(b.head, b.tail, n).ravel() for b in basis])
    rank = int(np.linalg.matrix_rank(images))
    rep.add(Check.expect("matrix-unit images independent", rank == n * n, f"rank {rank}"))
    return rep


# ----------------------------------------------------------------------------

def permutation_rows(choice: SubgroupChoice = DEFAULT_CHOICE, emb=None):
    emb = emb or null_tetrad()
    rows = []
    for g in all_permutations():
        gc = galois_factorize(g, choice)
        lc = classify_lorentz(g, emb)
        rows.append({"perm": str(g), "cycle_type": list(g.cycle_type()),
                     "galois": [str(gc.a), str(gc.b), str(gc.c)],
                     "det_sign": 1 if lc.proper else -1, "metric_error": lc.metric_error})
    return rows


def verify_s4(seed: int = 0) -> SuiteReport:
    emb = null_tetrad()
    rep = SuiteReport("s4", meta={"subgroups": DEFAULT_CHOICE.describe(), "tetrad_scale": emb.scale,
                                  "seed": seed})
    K = klein_group()
    closed = all(x * y in K for x in K for y in K) and all(x * y == y * x for x in K for y in K)
    rep.add(Check.expect("Klein group closed and abelian", closed))
    for choice in (DEFAULT_CHOICE, *ALTERNATIVE_CHOICES):
        rep.add(Check.expect(f"Galois factorization bijective, choice {choice.describe()}",
                             is_bijection(choice), "24/24"))
    rows = permutation_rows(DEFAULT_CHOICE, emb)
    proper = sum(r["det_sign"] == 1 for r in rows)
    worst = max(r["metric_error"] for r in rows)
    rep.add(Check.expect("12 proper / 12 improper", proper == 12 and len(rows) == 24,
                         f"{proper} proper, {len(rows) - proper} improper", [["proper", proper]]))
    rep.add(Check.expect("metric preserved < 1e-10", worst < 1e-10, f"max error {worst:.3g}",
                         [["max_metric_error", worst]]))
    parity = all((r["det_sign"] == 1) == (g.sign() == 1) for r, g in zip(rows, all_permutations()))
    rep.add(Check.expect("even <-> proper", parity))
    rep.add(Check.expect("anti-Euclidean Gram matrix permutation invariant (exact)",
                         all(gram_invariant(g) for g in all_permutations())))
    for sub in (double_algebra_check(seed=seed), formal_quantization_check(2), formal_quantization_check(3)):
        for c in sub.checks:
            rep.add(Check(f"{sub.suite.split('/')[-1]}: {c.name}", c.status, c.detail, c.numeric))
    rep.meta["rows"] = rows
    return rep

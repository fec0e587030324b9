"""
Arrow creators and annihilators on the plecton, the chronon-number and path
invariants ``N(n) = tr cⁿ aⁿ``, closed loop invariants, GL(T) transport, and
the parastatistics exchange tests on nested Grassmann levels.

Topon indices are ``0..N-1``.  The arrow generator ``|n←m⟩`` has tail ``m`` and
head ``n``; ``c(n←m)`` wedges it on the left and ``a(m←n)`` is the left
derivative with respect to it.  As matrices in the topon indices,
``C[i][j] = c(i←j)`` and ``A[i][j] = a(i←j)``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import rational
from .exterior import (
    GeneratorId, GradedExtensor, dual_pair, generator, grassmann_derivative, relabel,
    substitute, unitize, wedge,
)


class ShapeError(ValueError):
    pass


PlectonState = GradedExtensor  # extensor over arrow generators of a net


def arrow(head: int, tail: int) -> GeneratorId:
    """Generator ``|head←tail⟩``."""
    return generator("arrow", head, tail)


def arrow_ext(head: int, tail: int) -> GradedExtensor:
    return GradedExtensor.from_generator(arrow(head, tail))


@dataclass(frozen=True)
class FiniteNet:
    num_nodes: int
    arrows: tuple

    def __post_init__(self):
        if self.num_nodes < 1:
            raise ValueError("a net needs at least one node")
        for t, h in self.arrows:
            if not (0 <= t < self.num_nodes and 0 <= h < self.num_nodes):
                raise ValueError(f"arrow ({t}, {h}) out of range for {self.num_nodes} nodes")

    @classmethod
    def from_dict(cls, d) -> "FiniteNet":
        return cls(int(d["num_nodes"]), tuple((int(t), int(h)) for t, h in d["arrows"]))

    @classmethod
    def load(cls, path) -> "FiniteNet":
        return cls.from_dict(json.loads(Path(path).read_text()))

    def to_dict(self):
        return {"num_nodes": self.num_nodes, "arrows": [list(a) for a in self.arrows]}

    def generators(self) -> list[GeneratorId]:
        """Distinct arrow generators; duplicates collapse (exclusion)."""
        return sorted({arrow(h, t) for t, h in self.arrows})

    def state(self) -> GradedExtensor:
        """Wedge of every arrow of the net, in canonical generator order."""
        return GradedExtensor.monomial(self.generators())


def _nodes(state: GradedExtensor, num_nodes: int | None):
    if num_nodes is not None:
        return num_nodes
    idx = [max(g.key[1], g.key[2]) for g in state.generators() if g.key[0] == "arrow"]
    return max(idx, default=-1) + 1


# ----------------------------------------------------------------------------

def creator(n: int, m: int):
    """``c(n←m)``: left wedge multiplication by ``|n←m⟩``."""
    g = arrow_ext(n, m)
    return lambda state: g.wedge(state)


def annihilator(m: int, n: int):
    """``a(m←n) = ∂/∂|n←m⟩``."""
    g = arrow(n, m)
    return lambda state: grassmann_derivative(g, state)


def chronon_number(state: GradedExtensor, num_nodes: int | None = None) -> GradedExtensor:
    """``N(1) = Σ_{n,m} c(n←m) a(m←n)``."""
    N = _nodes(state, num_nodes)
    out = GradedExtensor.zero(state.backend)
    for n in range(N):
        for m in range(N):
            out = out + creator(n, m)(annihilator(m, n)(state))
    return out


def path_invariant(order: int, state: GradedExtensor, num_nodes: int | None = None) -> GradedExtensor:
    """``N(n) = tr cⁿ aⁿ`` applied to ``state``.

    Expanded, ``tr cⁿaⁿ = Σ c(i0←i1)…c(i_{n-1}←i_n) a(i_n←i_{n+1})…a(i_{2n-1}←i0)``.
    The annihilators remove the chain ``i0 ← i_{2n-1} ← … ← i_n`` from a
    monomial, the creators lay down every chain ``i0 ← i1 ← … ← i_n``.  Only
    chains actually present in a monomial are enumerated.
    """
    if order < 1:
        raise ValueError("path invariant order must be >= 1")
    N = _nodes(state, num_nodes)
    if all(g.level == 1 and g.key[0] == "arrow" for g in state.generators()):
        return _path_invariant_bits(order, state, N)
    out = GradedExtensor.zero(state.backend)
    for mono, coeff in state.items():
        tails = {}
        for g in mono:
            if g.key[0] == "arrow":     # anything else is a spectator
                _, head, tail = g.key
                tails.setdefault(head, []).append(tail)
        for chain in _chains(tails, order):
            out = out + _replace_chain(chain, order, N, GradedExtensor._raw({mono: coeff}, state.backend))
    return out


def _path_invariant_bits(order, state, N):
    # arrow (h, t) is bit h*N + t, which is also its rank in canonical order,
    # so the sign of inserting or removing it is the parity of lower set bits
    out = {}
    for mono, coeff in state.items():
        mask = 0
        tails = {}
        for g in mono:
            _, head, tail = g.key
            mask |= 1 << (head * N + tail)
            tails.setdefault(head, []).append(tail)
        for path in _chains(tails, order):
            m, sign = mask, 1
            for head, tail in zip(path, path[1:]):
                b = 1 << (head * N + tail)
                if not m & b:
                    break
                m ^= b
                if (m & (b - 1)).bit_count() & 1:
                    sign = -sign
            else:
                for mids in itertools.product(range(N), repeat=order - 1):
                    chain = (path[0], *mids, path[-1])
                    m2, s2 = m, sign
                    for head, tail in reversed(list(zip(chain, chain[1:]))):
                        b = 1 << (head * N + tail)
                        if m2 & b:
                            break
                        if (m2 & (b - 1)).bit_count() & 1:
                            s2 = -s2
                        m2 |= b
                    else:
                        out[m2] = out.get(m2, 0) + s2 * coeff
    gens = [arrow(h, t) for h in range(N) for t in range(N)]
    terms = {tuple(g for i, g in enumerate(gens) if m >> i & 1): c for m, c in out.items() if c}
    return GradedExtensor._raw(terms, state.backend)


def _chains(tails, order):
    """Node sequences ``head → … → tail`` of ``order`` arrows present in a monomial."""
    stack = [[h] for h in sorted(tails)]
    while stack:
        path = stack.pop()
        if len(path) == order + 1:
            yield path
            continue
        for t in tails.get(path[-1], ()):
            stack.append(path + [t])


def _replace_chain(path, order, N, term) -> GradedExtensor:
    # path = [i0, i_{2n-1}, ..., i_n]; the annihilator a(i_{2n-1}←i0) acts first
    for head, tail in zip(path, path[1:]):
        term = grassmann_derivative(arrow(head, tail), term)
        if term.is_zero():
            return term
    i0, i_n = path[0], path[-1]
    out = GradedExtensor.zero(term.backend)
    for mids in itertools.product(range(N), repeat=order - 1):
        chain = (i0, *mids, i_n)
        t = term
        # c(i_{n-1}←i_n) acts first, c(i0←i1) last
        for head, tail in reversed(list(zip(chain, chain[1:]))):
            t = arrow_ext(head, tail).wedge(t)
            if t.is_zero():
                break
        out = out + t
    return out


def path_invariant_oracle(order: int, state: GradedExtensor, num_nodes: int | None = None) -> GradedExtensor:
    """Literal expansion of ``tr cⁿ aⁿ`` over index tuples ``(i0, …, i_{2n-1})``.

    Operators are applied right to left exactly as written; a branch of the
    index enumeration is dropped once the partial product vanishes, which
    removes only zero terms.  Reference implementation.
    """
    if order < 1:
        raise ValueError("path invariant order must be >= 1")
    N = _nodes(state, num_nodes)
    out = [GradedExtensor.zero(state.backend)]

    # slot j (0-based, applied for j = 2n-1 down to 0) links i_j <- i_{j+1}
    def step(j, idx, term):
        if j < 0:
            out[0] = out[0] + term
            return
        for left in ([idx[0]] if j == 0 else range(N)):
            right = idx[j + 1] if j + 1 < 2 * order else idx[0]
            op = creator(left, right) if j < order else annihilator(left, right)
            t = op(term)
            if not t.is_zero():
                step(j - 1, {**idx, j: left}, t)

    for i0 in range(N):
        step(2 * order - 1, {0: i0}, state)
    return out[0]


def all_nets(num_nodes: int, max_grade: int | None = None):
    """Every labelled net on ``num_nodes`` nodes (self-loops allowed)."""
    pairs = [(t, h) for t in range(num_nodes) for h in range(num_nodes)]
    top = len(pairs) if max_grade is None else min(max_grade, len(pairs))
    for k in range(top + 1):
        for arrows in itertools.combinations(pairs, k):
            yield FiniteNet(num_nodes, arrows)


def net_classes(num_nodes: int):
    """One representative per relabelling class of nets on ``num_nodes`` nodes."""
    perms = list(itertools.permutations(range(num_nodes)))
    seen = set()
    for net in all_nets(num_nodes):
        key = min(tuple(sorted((p[t], p[h]) for t, h in net.arrows)) for p in perms)
        if key not in seen:
            seen.add(key)
            yield FiniteNet(num_nodes, key)


# ----------------------------------------------------------------------------

def _parse_loop(spec):
    """Normalize a loop spec into ``[(kind, left, right), ...]``.

    ``spec`` is either a word like ``"ccaa"`` (indices chained automatically) or
    explicit slots ``(kind, left_label, right_label)`` that must chain and close.
    """
    if isinstance(spec, str):
        k = len(spec)
        slots = [(ch, j, (j + 1) % k) for j, ch in enumerate(spec)]
    else:
        slots = [tuple(s) for s in spec]
    for kind, *_ in slots:
        if kind not in ("c", "a"):
            raise ShapeError(f"slot kind must be 'c' or 'a', got {kind!r}")
    for (k1, _, r), (k2, l, _) in zip(slots, slots[1:]):
        if r != l:
            raise ShapeError(f"slot index {r!r} does not chain into {l!r}")
    if slots and slots[-1][2] != slots[0][1]:
        raise ShapeError(f"loop does not close: {slots[-1][2]!r} vs {slots[0][1]!r}")
    return slots


def loop_operator(spec, state: GradedExtensor, num_nodes: int | None = None) -> GradedExtensor:
    """Apply the fully contracted loop ``Σ S1[i0][i1] S2[i1][i2] … Sk[i_{k-1}][i0]``."""
    slots = _parse_loop(spec)
    if not slots:
        return state
    N = _nodes(state, num_nodes)
    labels = []
    for _, l, _ in slots:
        if l not in labels:
            labels.append(l)
    out = GradedExtensor.zero(state.backend)
    for values in itertools.product(range(N), repeat=len(labels)):
        env = dict(zip(labels, values))
        term = state
        for kind, l, r in reversed(slots):
            op = creator(env[l], env[r]) if kind == "c" else annihilator(env[l], env[r])
            term = op(term)
            if term.is_zero():
                break
        out = out + term
    return out


def loop_invariant(spec, state: GradedExtensor, num_nodes: int | None = None):
    """Scalar ``⟨state|L|state⟩`` with the state's own coefficients as the bra."""
    return dual_pair(state, loop_operator(spec, state, num_nodes))


# ----------------------------------------------------------------------------

def gl_transport(g, state: GradedExtensor) -> GradedExtensor:
    """Transport arrows by ``χ -> g χ g⁻¹`` and extend multiplicatively."""
    g = rational.as_fractions(g)
    N = len(g)
    if rational.det(g) == 0:
        raise rational.SingularMatrix("gl_transport needs an invertible matrix")
    gi = rational.inverse(g)

    def image(gen):
        tag, n, m = gen.key
        if tag != "arrow":
            return GradedExtensor.from_generator(gen)
        terms = {}
        for i in range(N):
            if not g[i][n]:
                continue
            for j in range(N):
                if gi[m][j]:
                    terms[(arrow(i, j),)] = g[i][n] * gi[m][j]
        return GradedExtensor(terms)

    return substitute(state, image)


def random_invertible(rng, n: int, span: int = 3):
    while True:
        g = [[Fraction(rng.randint(-span, span), rng.randint(1, 2)) for _ in range(n)] for _ in range(n)]
        if rational.det(g) != 0:
            return g


def permutation_matrix(perm):
    """Matrix sending ``|i⟩`` to ``|perm[i]⟩``."""
    n = len(perm)
    return [[Fraction(int(perm[j] == i)) for j in range(n)] for i in range(n)]


# ----------------------------------------------------------------------------
# parastatistics

@dataclass
class ExchangeReport:
    level: str
    swapped: tuple
    kind: str            # "eigen" or "permutation"
    eigenvalue: object
    overlap: object
    image: GradedExtensor
    note: str = ""


def topon(label) -> GeneratorId:
    return generator("tau", label)


def nested_unit(*labels) -> GradedExtensor:
    """``||τ_a ∨ τ_b ∨ …⟩⟩``: a level-2 generator wrapping a wedge of topons."""
    from .exterior import unit
    return unit(wedge(*(GradedExtensor.from_generator(topon(l)) for l in labels)))


def _units_containing(state, t):
    found = set()
    for mono, _ in state.items():
        for g in mono:
            if isinstance(g.content, GradedExtensor) and t in g.content.generators():
                found.add(g)
    return found


def exchange_test(level: str, state: GradedExtensor, pair) -> ExchangeReport:
    """Swap two constituents of ``state`` and classify the result.

    ``level="within"``: two topons living in one unit; ``"across"``: two topons in
    different units; ``"factor"``: two whole level-2 units of a monomial.
    """
    a, b = pair
    if level in ("within", "across"):
        ta, tb = topon(a), topon(b)
        ua, ub = _units_containing(state, ta), _units_containing(state, tb)
        shared = ua & ub
        if level == "within" and not shared:
            raise ValueError(f"τ{a} and τ{b} share no unit")
        if level == "across" and (shared or not ua or not ub):
            raise ValueError(f"τ{a} and τ{b} are not in distinct units")
        image = relabel(state, {ta: tb, tb: ta})
    elif level == "factor":
        ga, gb = a, b
        image = substitute(state, {ga: GradedExtensor.from_generator(gb),
                                   gb: GradedExtensor.from_generator(ga)})
    else:
        raise ValueError(f"unknown exchange level {level!r}")

    overlap = dual_pair(state, image)
    norm = dual_pair(state, state)
    eigen = None
    if norm and image == state.scale(overlap / norm):
        eigen = overlap / norm
    kind = "eigen" if eigen is not None else "permutation"
    note = ""
    if level == "across":
        note = ("image is a different basis monomial, not the original with sign +1"
                if kind == "permutation" else "image proportional to the original")
    return ExchangeReport(level, tuple(pair), kind, eigen, overlap, image, note)


def unit_generator(content: GradedExtensor) -> GeneratorId:
    return unitize(content)[1]

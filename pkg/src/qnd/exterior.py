"""
Sparse iterated Grassmann algebra.

An extensor is a finite linear combination of wedge monomials.  Each monomial
is a strictly increasing tuple of generators; generators are ordered by
``(level, key)``.  A generator of level ``k+1`` is the unitization of some
level-``k`` content (an extensor, or a lattice operator), so the same engine
carries topons, chronons and plectons.

Two scalar backends exist: exact rationals (``Fraction``) for every identity
check and complex floats for the toy propagator model.  They are never mixed.
"""

from __future__ import annotations

import bisect

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Any, Callable, Iterable, Mapping

RATIONAL = "rational"
COMPLEX = "complex"


class BackendMismatch(TypeError):
    """Raised when extensors over different scalar backends are combined."""


class CanonicalizationError(ValueError):
    pass


class DomainError(KeyError):
    pass


def _coerce(c, backend):
    if backend == RATIONAL:
        if isinstance(c, bool) or not isinstance(c, Rational):
            raise TypeError(f"rational backend needs an exact scalar, got {c!r}")
        return Fraction(c)
    return complex(c)


@dataclass(frozen=True, order=True)
class GeneratorId:
    """Identity of one grade-1 generator.

    Equality and order look only at ``(level, key)``.  For unitized content the
    normalized content object rides along in ``content`` so that lifted maps can
    act on it.
    """

    level: int
    key: tuple
    content: Any = field(default=None, compare=False, hash=False, repr=False)

    def __str__(self):
        if self.level == 1:
            tag, *rest = self.key
            return f"{tag}{''.join(str(r) for r in rest)}"
        return f"|{self.content}|"


def generator(tag: str, *label) -> GeneratorId:
    """A named level-1 generator, e.g. ``generator("e", 1)``."""
    return GeneratorId(1, (tag, *label))


def _merge_sign(a: tuple, b: tuple, strict: bool = True):
    """Merge two sorted generator tuples.

    Returns ``(sign, merged)`` or ``None`` when a generator repeats and
    ``strict`` is set.  With ``strict=False`` repeats are kept (diagnostic use).
    """
    out = []
    sign = 1
    i = j = 0
    na = len(a)
    while i < na and j < len(b):
        x, y = a[i], b[j]
        if x == y:
            if strict:
                return None
            out.append(x)
            i += 1
        elif y < x:
            # y jumps over the remaining na - i elements of a
            if (na - i) & 1:
                sign = -sign
            out.append(y)
            j += 1
        else:
            out.append(x)
            i += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return sign, tuple(out)


def sort_sign(gens: Iterable[GeneratorId], strict: bool = True):
    """Sort a generator sequence, returning ``(sign, sorted_tuple)`` or None."""
    gens = list(gens)
    sign = 1
    # insertion sort keeps the parity bookkeeping obvious; words are short
    for i in range(1, len(gens)):
        j = i
        while j > 0 and gens[j] < gens[j - 1]:
            gens[j], gens[j - 1] = gens[j - 1], gens[j]
            sign = -sign
            j -= 1
    if strict:
        for i in range(1, len(gens)):
            if gens[i] == gens[i - 1]:
                return None
    return sign, tuple(gens)


class GradedExtensor:
    """Immutable sparse extensor ``{monomial: coefficient}``.

    Monomials are tuples of :class:`GeneratorId` in increasing order; zero
    coefficients are never stored.
    """

    __slots__ = ("_terms", "backend", "_hash")

    def __init__(self, terms: Mapping[tuple, Any] | None = None, backend: str = RATIONAL):
        if backend not in (RATIONAL, COMPLEX):
            raise ValueError(f"unknown backend {backend!r}")
        self.backend = backend
        clean = {}
        for mono, c in (terms or {}).items():
            c = _coerce(c, backend)
            if c != 0:
                clean[tuple(mono)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms, backend):
        obj = cls.__new__(cls)
        obj.backend = backend
        obj._terms = terms
        obj._hash = None
        return obj

    # construction helpers

    @classmethod
    def scalar(cls, c=1, backend: str = RATIONAL) -> "GradedExtensor":
        return cls({(): c}, backend)

    @classmethod
    def zero(cls, backend: str = RATIONAL) -> "GradedExtensor":
        return cls({}, backend)

    @classmethod
    def from_generator(cls, g: GeneratorId, c=1, backend: str = RATIONAL) -> "GradedExtensor":
        return cls({(g,): c}, backend)

    @classmethod
    def monomial(cls, gens: Iterable[GeneratorId], c=1, backend: str = RATIONAL) -> "GradedExtensor":
        """Wedge of the given generators in the given order, times ``c``."""
        res = sort_sign(gens)
        if res is None:
            return cls.zero(backend)
        sign, mono = res
        return cls({mono: sign * _coerce(c, backend)}, backend)

    # inspection

    @property
    def terms(self) -> Mapping[tuple, Any]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, gens: Iterable[GeneratorId]):
        res = sort_sign(gens)
        if res is None:
            return _coerce(0, self.backend)
        sign, mono = res
        return sign * self._terms.get(mono, 0)

    def grades(self) -> set[int]:
        return {len(m) for m in self._terms}

    @property
    def grade(self) -> int:
        """Grade of a homogeneous extensor (ValueError otherwise)."""
        gs = self.grades()
        if len(gs) != 1:
            raise ValueError(f"extensor is not homogeneous: grades {sorted(gs)}")
        return gs.pop()

    def generators(self) -> set[GeneratorId]:
        return {g for m in self._terms for g in m}

    # linear structure

    def _check(self, other):
        if not isinstance(other, GradedExtensor):
            return NotImplemented
        if other.backend != self.backend:
            raise BackendMismatch(f"{self.backend} vs {other.backend}")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v == 0:
                out.pop(m, None)
            else:
                out[m] = v
        return GradedExtensor._raw(out, self.backend)

    def __neg__(self):
        return GradedExtensor._raw({m: -c for m, c in self._terms.items()}, self.backend)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "GradedExtensor":
        c = _coerce(c, self.backend)
        if c == 0:
            return GradedExtensor.zero(self.backend)
        return GradedExtensor._raw({m: c * v for m, v in self._terms.items()}, self.backend)

    def __mul__(self, c):
        if isinstance(c, GradedExtensor):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GradedExtensor):
            return NotImplemented
        return self.backend == other.backend and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.backend, frozenset(self._terms.items())))
        return self._hash

    # products

    def wedge(self, other: "GradedExtensor", kill_repeats: bool = True) -> "GradedExtensor":
        """Progressive (exterior) product ``self ∨ other``.

        ``kill_repeats=False`` keeps monomials with repeated generators; it
        exists only to mutation-test identities whose truth relies on the
        exclusion rule.
        """
        if self._check(other) is NotImplemented:
            raise TypeError("wedge needs two extensors")
        if kill_repeats and len(self._terms) == 1:
            (m, c), = self._terms.items()
            if len(m) == 1:
                return other._insert(m[0], c, left=True)
        if kill_repeats and len(other._terms) == 1:
            (m, c), = other._terms.items()
            if len(m) == 1:
                return self._insert(m[0], c, left=False)
        out: dict = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                r = _merge_sign(ma, mb, strict=kill_repeats)
                if r is None:
                    continue
                sign, m = r
                v = out.get(m, 0) + sign * ca * cb
                if v == 0:
                    out.pop(m, None)
                else:
                    out[m] = v
        return GradedExtensor._raw(out, self.backend)

    def _insert(self, g, c, left):
        # single-generator product: g passes k (left) or len-k (right) generators
        out = {}
        for m, v in self._terms.items():
            k = bisect.bisect_left(m, g)
            if k < len(m) and m[k] == g:
                continue
            hops = k if left else len(m) - k
            out[m[:k] + (g,) + m[k:]] = -c * v if hops & 1 else c * v
        return GradedExtensor._raw(out, self.backend)

    def __xor__(self, other):
        return self.wedge(other)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m in sorted(self._terms):
            c = self._terms[m]
            body = "∨".join(str(g) for g in m) or "1"
            parts.append(f"{c}·{body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"GradedExtensor({self})"

    def canonical_key(self) -> tuple:
        if self.backend != RATIONAL:
            raise CanonicalizationError("only rational extensors have canonical keys")
        return tuple(sorted(
            (tuple((g.level, g.key) for g in m), c) for m, c in self._terms.items()
        ))

    def atoms(self):
        """Yield ``(coefficient, monomial extensor)`` pairs."""
        for m, c in sorted(self._terms.items()):
            yield c, GradedExtensor._raw({m: _coerce(1, self.backend)}, self.backend)


def wedge(*xs: GradedExtensor, kill_repeats: bool = True) -> GradedExtensor:
    if not xs:
        return GradedExtensor.scalar(1)
    out = xs[0]
    for x in xs[1:]:
        out = out.wedge(x, kill_repeats=kill_repeats)
    return out


def grassmann_derivative(gen: GeneratorId, a: GradedExtensor) -> GradedExtensor:
    """Left derivative ``∂/∂gen``: remove ``gen`` with sign ``(-1)**position``."""
    out = {}
    for m, c in a.items():
        try:
            k = m.index(gen)
        except ValueError:
            continue
        out[m[:k] + m[k + 1:]] = -c if k & 1 else c
    return GradedExtensor._raw(out, a.backend)


def dual_pair(bra: GradedExtensor, ket: GradedExtensor):
    """Pair a reciprocal extensor with an extensor.

    Reciprocal monomials pair by the determinant rule; with both sides stored in
    canonical order this reduces to matching monomials.  Unequal grades give 0.
    """
    if bra.backend != ket.backend:
        raise BackendMismatch(f"{bra.backend} vs {ket.backend}")
    small, big = (bra, ket) if len(bra) <= len(ket) else (ket, bra)
    total = _coerce(0, bra.backend)
    for m, c in small.items():
        d = big._terms.get(m)
        if d is not None:
            total += c * d
    return total


def substitute(a: GradedExtensor,
               images: Mapping[GeneratorId, GradedExtensor] | Callable[[GeneratorId], GradedExtensor],
               kill_repeats: bool = True) -> GradedExtensor:
    """Apply the algebra homomorphism fixed by generator images.

    Generators absent from a mapping are left alone; a callable must handle
    every generator.
    """
    if callable(images):
        image = images
    else:
        def image(g):
            return images.get(g) or GradedExtensor.from_generator(g, backend=a.backend)
    cache = {}
    out = GradedExtensor.zero(a.backend)
    for m, c in a.items():
        term = GradedExtensor.scalar(c, a.backend)
        for g in m:
            if g not in cache:
                cache[g] = image(g)
            term = term.wedge(cache[g], kill_repeats=kill_repeats)
            if term.is_zero():
                break
        out = out + term
    return out


def extend_as_derivation(f, a: GradedExtensor, kill_repeats: bool = True) -> GradedExtensor:
    """Extend a map on generators to an even derivation of ``∨``.

    ``f`` is a mapping or callable ``GeneratorId -> GradedExtensor``.  On a
    monomial ``x1∨…∨xn`` the result is ``Σ_k x1∨…∨f(xk)∨…∨xn``.
    """
    def image(g):
        try:
            v = f[g] if isinstance(f, Mapping) else f(g)
        except KeyError as exc:
            raise DomainError(f"map undefined on generator {g}") from exc
        if v is None:
            raise DomainError(f"map undefined on generator {g}")
        return v

    out = GradedExtensor.zero(a.backend)
    for m, c in a.items():
        for k, g in enumerate(m):
            left = GradedExtensor._raw({m[:k]: _coerce(c, a.backend)}, a.backend)
            right = GradedExtensor._raw({m[k + 1:]: _coerce(1, a.backend)}, a.backend)
            out = out + left.wedge(image(g), kill_repeats).wedge(right, kill_repeats)
    return out


def unitize(content) -> tuple[int, GeneratorId]:
    """Wrap ``content`` as a single generator of the next level.

    The content is sign-normalized (its first coefficient in canonical atom
    order made positive) before keying.  Returns ``(sign, generator)`` with
    ``content == sign * generator.content``.
    """
    if isinstance(content, GradedExtensor):
        tag = "ext"
        level = 1 + max((g.level for g in content.generators()), default=0)
    elif hasattr(content, "canonical_key"):
        tag = "op"
        level = getattr(content, "unit_level", 2)
    else:
        raise CanonicalizationError(f"cannot canonicalize {type(content).__name__}")
    lead = next(iter(content.atoms()), None)
    if lead is None:
        raise CanonicalizationError("the zero element has no unitization")
    sign = 1
    if lead[0] < 0:
        sign = -1
        content = -content
    return sign, GeneratorId(level, (tag, content.canonical_key()), content)


def unit(content, backend: str = RATIONAL) -> GradedExtensor:
    """Unitized content as a grade-1 extensor (sign folded into the coefficient)."""
    sign, g = unitize(content)
    return GradedExtensor.from_generator(g, sign, backend)


def unit_expand(content, backend: str = RATIONAL) -> GradedExtensor:
    """Linear unitization: expand ``|content|`` over unitized basis atoms.

    Unitization is linear, so ``|Σ c_i a_i| = Σ c_i |a_i|``.  Expanding over
    canonical atoms makes linear relations between chronons visible to the
    Grassmann engine (repeats cancel, equal chronons coincide).
    """
    out = {}
    for c, atom in content.atoms():
        sign, g = unitize(atom)
        out[(g,)] = out.get((g,), 0) + sign * c
    return GradedExtensor(out, backend)


def relabel(a: GradedExtensor, mapping: Mapping[GeneratorId, GeneratorId]) -> GradedExtensor:
    """Rename generators at every nesting level.

    Level-1 generators are renamed through ``mapping``; higher generators with
    extensor content are rebuilt from their relabeled content, so a swap inside
    a unit shows up as that unit's sign.
    """
    def image(g: GeneratorId) -> GradedExtensor:
        if g in mapping:
            return GradedExtensor.from_generator(mapping[g], backend=a.backend)
        if isinstance(g.content, GradedExtensor):
            new = relabel(g.content, mapping)
            if new.is_zero():
                return GradedExtensor.zero(a.backend)
            return unit(new, a.backend)
        return GradedExtensor.from_generator(g, backend=a.backend)

    return substitute(a, image)

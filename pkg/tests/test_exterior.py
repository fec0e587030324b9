import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qnd.exterior import (
    COMPLEX, BackendMismatch, CanonicalizationError, DomainError, GradedExtensor, dual_pair,
    extend_as_derivation, generator, grassmann_derivative, relabel, sort_sign, substitute, unit,
    unit_expand, unitize, wedge,
)

E = [generator("e", i) for i in range(6)]


def ext(*idx, c=1):
    return GradedExtensor.monomial([E[i] for i in idx], c)


def parity(seq):
    """Inversion-count parity, independent of the merge sort in the engine."""
    inv = sum(1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] > seq[j])
    return -1 if inv & 1 else 1


coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
monos = st.lists(st.integers(0, 5), unique=True, max_size=4)
extensors = st.dictionaries(monos.map(tuple), coeffs, max_size=4).map(
    lambda d: sum((ext(*m, c=c) for m, c in d.items()), GradedExtensor.zero()))


def test_generators_anticommute():
    a, b = ext(0), ext(1)
    assert a ^ b == -(b ^ a)
    assert (a ^ a).is_zero()


@given(st.permutations(range(5)))
def test_monomial_sign_is_permutation_parity(perm):
    m = ext(*perm)
    assert m.coefficient([E[i] for i in range(5)]) == parity(perm)


@given(extensors, extensors, extensors)
def test_wedge_associative(a, b, c):
    assert (a ^ b) ^ c == a ^ (b ^ c)


@given(extensors, extensors, extensors)
def test_wedge_distributes(a, b, c):
    assert a ^ (b + c) == (a ^ b) + (a ^ c)


@given(monos, monos)
def test_graded_commutativity(p, q):
    a, b = ext(*p), ext(*q)
    assert a ^ b == (b ^ a).scale((-1) ** (len(p) * len(q)))


@given(monos, monos, st.integers(0, 5))
def test_derivative_is_antiderivation(p, q, k):
    a, b = ext(*p), ext(*q)
    g = E[k]
    lhs = grassmann_derivative(g, a ^ b)
    rhs = (grassmann_derivative(g, a) ^ b) + (a ^ grassmann_derivative(g, b)).scale((-1) ** len(p))
    assert lhs == rhs


def test_derivative_inverts_left_wedge():
    a = ext(1, 3)
    assert grassmann_derivative(E[0], ext(0) ^ a) == a
    assert grassmann_derivative(E[2], a).is_zero()


def test_single_generator_fast_path_matches_merge():
    # right multiplication by a generator goes through the insertion fast path
    a = ext(0, 2, 4) + ext(1, 3, c=Fraction(2, 3))
    g = ext(3)
    want = GradedExtensor.zero()
    for m, c in a.items():
        r = sort_sign(list(m) + [E[3]])
        if r:
            want = want + GradedExtensor({r[1]: r[0] * c})
    assert a ^ g == want
    kept = a.wedge(g, kill_repeats=False)
    assert (E[1], E[3], E[3]) in kept.terms and kept.grades() == {3, 4}


def test_kill_repeats_off_keeps_square():
    sq = ext(2).wedge(ext(2), kill_repeats=False)
    assert not sq.is_zero()
    assert sq.grade == 2


@given(extensors)
def test_dual_pair_with_self_is_sum_of_squares(a):
    assert dual_pair(a, a) == sum((c * c for _, c in a.items()), Fraction(0))


def test_dual_pair_grade_mismatch_is_zero():
    assert dual_pair(ext(0, 1), ext(0)) == 0


def test_rational_backend_rejects_floats():
    with pytest.raises(TypeError):
        GradedExtensor.scalar(0.5)


def test_backend_mismatch():
    z = GradedExtensor.from_generator(E[0], 1j, COMPLEX)
    with pytest.raises(BackendMismatch):
        ext(0) + z


def test_substitute_is_homomorphism():
    images = {E[0]: ext(1) + ext(2), E[1]: ext(3)}
    a = ext(0, 1)
    assert substitute(a, images) == (ext(1) + ext(2)) ^ ext(3)


def test_derivation_extension_and_domain_error():
    f = {E[0]: ext(4), E[1]: ext(5)}
    assert extend_as_derivation(f, ext(0, 1)) == ext(4, 1) + ext(0, 5)
    with pytest.raises(DomainError):
        extend_as_derivation(f, ext(2))


def test_unitize_normalizes_sign():
    s1, g1 = unitize(ext(0, 1))
    s2, g2 = unitize(ext(0, 1, c=-1))
    assert g1 == g2 and s1 == -s2
    assert g1.level == 2
    assert unit(ext(0, 1, c=-1)) == -unit(ext(0, 1))


def test_unitize_zero_raises():
    with pytest.raises(CanonicalizationError):
        unitize(GradedExtensor.zero())


def test_unit_expand_is_linear():
    a, b = ext(0, 1), ext(2, 3)
    assert unit_expand(a + b.scale(3)) == unit_expand(a) + unit_expand(b).scale(3)
    # a linear relation becomes visible: |a + b| ∨ |a| ∨ |b| = 0
    assert wedge(unit_expand(a + b), unit_expand(a), unit_expand(b)).is_zero()


def test_relabel_inside_unit_flips_sign():
    u = unit(ext(0, 1))
    assert relabel(u, {E[0]: E[1], E[1]: E[0]}) == -u

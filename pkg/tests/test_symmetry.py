import itertools
import random

import numpy as np
import pytest

from qnd import symmetry as s
from qnd.symmetry import Permutation as P


def test_klein_products():
    a, b, c = P.cycles((1, 2), (3, 4)), P.cycles((1, 3), (2, 4)), P.cycles((1, 4), (2, 3))
    assert a * b == c
    K = s.klein_group()
    assert len(K) == 4 and s.ID in K
    assert all(g.order() == 2 for g in K if g != s.ID)
    assert all(x * y == y * x and x * y in K for x in K for y in K)


def test_composition_convention():
    g, h = P.cycles((1, 2)), P.cycles((2, 3))
    # (g·h)(i) = g(h(i)): 2 -> 3 -> 3
    assert (g * h)(2) == 3
    assert (g * h)(1) == 2


def test_factorization_examples():
    assert s.galois_factorize(s.ID) == s.GaloisCoordinates(s.ID, s.ID, s.ID)
    for k in s.klein_group():
        assert s.galois_factorize(k) == s.GaloisCoordinates(s.ID, s.ID, k)


@pytest.mark.parametrize("choice", [s.DEFAULT_CHOICE, *s.ALTERNATIVE_CHOICES])
def test_factorization_bijective(choice):
    assert s.is_bijection(choice)
    for g in s.all_permutations():
        assert s.galois_factorize(g, choice).product() == g


def test_every_subgroup_choice_factors():
    # the Klein group is normal with quotient S3, so any transposition and
    # 3-cycle pick distinct cosets; the bijection does not hinge on the choice
    transpositions = list(itertools.combinations(range(1, 5), 2))
    three_cycles = [c for c in itertools.permutations(range(1, 5), 3) if c[0] == min(c)]
    for t in transpositions:
        for c in three_cycles:
            assert s.is_bijection(s.SubgroupChoice(t, c))


def test_tetrad_gram():
    emb = s.null_tetrad()
    np.testing.assert_allclose(emb.gram(), np.ones((4, 4)) - np.eye(4), atol=1e-12)
    assert abs(emb.scale ** 2 - 0.75) < 1e-12
    assert all(v[0] > 0 for v in emb.vectors)


def test_lorentz_classification():
    rows = [s.classify_lorentz(g) for g in s.all_permutations()]
    assert sum(r.proper for r in rows) == 12
    assert all(r.metric_error < 1e-10 for r in rows)
    for r in rows:
        assert r.proper == (r.perm.sign() == 1)
        assert abs(abs(r.det) - 1) < 1e-10
    assert s.classify_lorentz(s.ID).proper


def test_lorentz_maps_permute_tetrad():
    emb = s.null_tetrad()
    g = P.cycles((1, 2, 3, 4))
    L = s.classify_lorentz(g, emb).matrix
    for a in range(1, 5):
        np.testing.assert_allclose(L @ emb.vectors[a - 1], emb.vectors[g(a) - 1], atol=1e-12)


def test_gram_matrix_permutation_invariant():
    assert all(s.gram_invariant(g) for g in s.all_permutations())


def test_convolution_witness_and_associativity():
    r, k = P.cycles((1, 2, 3)), P.cycles((1, 2), (3, 4))
    d = s.GroupAlgebraElement.delta
    assert d(r) @ d(k) != d(k) @ d(r)
    rng = random.Random(7)
    for _ in range(10):
        x, y, z = (s.random_element(rng) for _ in range(3))
        assert (x @ y) @ z == x @ (y @ z)


def test_double_algebra_report():
    rep = s.double_algebra_check()
    assert rep.ok, rep.summary()


@pytest.mark.parametrize("n", [2, 3])
def test_formal_quantization(n):
    rep = s.formal_quantization_check(n)
    assert rep.ok, rep.summary()
    assert len(s.arrow_basis(n)) == n * n


def test_arrow_composition():
    A = s.Arrow
    assert A(0, 1).compose(A(1, 2)) == A(0, 2)
    assert A(0, 1).compose(A(2, 2)) is None


def test_permutation_validation():
    with pytest.raises(ValueError):
        P((1, 1, 2, 3))


def test_cycle_types_cover_s4():
    types = {}
    for g in s.all_permutations():
        types[g.cycle_type()] = types.get(g.cycle_type(), 0) + 1
    assert types == {(1, 1, 1, 1): 1, (2, 1, 1): 6, (2, 2): 3, (3, 1): 8, (4,): 6}

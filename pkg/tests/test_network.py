import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qnd import network as nw
from qnd.exterior import GradedExtensor
from qnd.rational import SingularMatrix

nets3 = st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), unique=True, max_size=5).map(
    lambda arrows: nw.FiniteNet(3, tuple(arrows)))


@given(nets3)
def test_chronon_number_counts_grade(net):
    st_ = net.state()
    assert nw.chronon_number(st_, 3) == st_.scale(st_.grade)
    assert nw.path_invariant(1, st_, 3) == nw.chronon_number(st_, 3)


@given(nets3, st.integers(1, 3))
def test_path_invariant_matches_oracle(net, k):
    st_ = net.state()
    assert nw.path_invariant(k, st_, 3) == nw.path_invariant_oracle(k, st_, 3)


def test_generic_path_matches_bitmask_path():
    # a state carrying a non-arrow generator takes the generic route
    net = nw.FiniteNet(3, ((0, 1), (1, 2), (2, 2)))
    st_ = net.state()
    extra = GradedExtensor.from_generator(nw.topon(9))
    mixed = nw.path_invariant(2, st_ ^ extra, 3)
    assert mixed == nw.path_invariant(2, st_, 3) ^ extra


def test_path3_fixture(fixtures):
    net = nw.FiniteNet.load(fixtures / "path3.json")
    n2 = nw.path_invariant(2, net.state(), net.num_nodes)
    want = (nw.arrow_ext(0, 0) ^ nw.arrow_ext(2, 0)) + (nw.arrow_ext(1, 0) ^ nw.arrow_ext(2, 1)) \
        + (nw.arrow_ext(2, 0) ^ nw.arrow_ext(2, 2))
    assert n2 == want
    assert n2 == nw.path_invariant_oracle(2, net.state(), 3)


def test_two_disjoint_arrows_have_no_two_paths():
    net = nw.FiniteNet(4, ((0, 1), (2, 3)))
    assert nw.path_invariant(2, net.state(), 4).is_zero()


def test_duplicate_arrows_collapse():
    assert nw.FiniteNet(2, ((0, 1), (0, 1))).state().grade == 1


def test_net_validation():
    with pytest.raises(ValueError):
        nw.FiniteNet(2, ((0, 2),))
    with pytest.raises(ValueError):
        nw.path_invariant(0, nw.FiniteNet(2, ()).state())


def test_net_roundtrip(tmp_path):
    net = nw.FiniteNet(3, ((0, 1), (2, 0)))
    p = tmp_path / "n.json"
    import json
    p.write_text(json.dumps(net.to_dict()))
    assert nw.FiniteNet.load(p) == net


def test_net_classes_count():
    # directed graphs with loops on 2 and 3 unlabelled nodes
    assert sum(1 for _ in nw.net_classes(2)) == 10
    assert sum(1 for _ in nw.net_classes(3)) == 104


def test_loops():
    two = nw.FiniteNet(3, ((0, 1), (1, 2))).state()
    assert nw.loop_invariant("ca", two, 3) == 2
    assert nw.loop_invariant("", two, 3) == 1
    one = nw.FiniteNet(2, ((0, 1),)).state()
    assert nw.loop_invariant("ca", one, 2) == 1
    assert nw.loop_invariant("ccaa", two, 3) == nw.loop_invariant(
        [("c", "i", "j"), ("c", "j", "k"), ("a", "k", "l"), ("a", "l", "i")], two, 3)


def test_loop_shape_errors():
    st_ = nw.FiniteNet(2, ((0, 1),)).state()
    with pytest.raises(nw.ShapeError):
        nw.loop_operator([("c", 0, 1), ("a", 2, 0)], st_)
    with pytest.raises(nw.ShapeError):
        nw.loop_operator([("c", 0, 1), ("a", 1, 2)], st_)
    with pytest.raises(nw.ShapeError):
        nw.loop_operator([("x", 0, 0)], st_)


@given(nets3, st.integers(0, 10 ** 6))
def test_number_commutes_with_transport(net, seed):
    g = nw.random_invertible(random.Random(seed), 3)
    st_ = net.state()
    assert nw.chronon_number(nw.gl_transport(g, st_), 3) == nw.gl_transport(g, nw.chronon_number(st_, 3))


def test_transport_is_representation():
    rng = random.Random(5)
    g, h = nw.random_invertible(rng, 3), nw.random_invertible(rng, 3)
    from qnd.rational import matmul
    st_ = nw.FiniteNet(3, ((0, 1), (1, 2))).state()
    assert nw.gl_transport(g, nw.gl_transport(h, st_)) == nw.gl_transport(matmul(g, h), st_)


def test_permutation_transport_relabels():
    st_ = nw.FiniteNet(3, ((0, 1),)).state()
    moved = nw.gl_transport(nw.permutation_matrix((1, 2, 0)), st_)
    assert moved == nw.FiniteNet(3, ((1, 2),)).state()


def test_singular_transport_rejected():
    with pytest.raises(SingularMatrix):
        nw.gl_transport([[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]], nw.FiniteNet(2, ()).state())


def test_exchange_levels():
    state = nw.nested_unit(1, 2) ^ nw.nested_unit(3, 4)
    r = nw.exchange_test("within", state, (1, 2))
    assert (r.kind, r.eigenvalue) == ("eigen", -1)
    r = nw.exchange_test("across", state, (2, 3))
    assert r.kind == "permutation" and r.overlap == 0
    # a different basis monomial, not a signed copy of the original
    assert r.image == nw.nested_unit(1, 3) ^ nw.nested_unit(2, 4)
    (mono,), = [tuple(state.terms)]
    r = nw.exchange_test("factor", state, mono)
    assert (r.kind, r.eigenvalue) == ("eigen", -1)


def test_exchange_errors():
    state = nw.nested_unit(1, 2) ^ nw.nested_unit(3, 4)
    with pytest.raises(ValueError):
        nw.exchange_test("within", state, (1, 3))
    with pytest.raises(ValueError):
        nw.exchange_test("across", state, (1, 2))
    with pytest.raises(ValueError):
        nw.exchange_test("sideways", state, (1, 2))

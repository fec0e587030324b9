import itertools

import numpy as np
import pytest
import scipy.linalg
import scipy.stats
from hypothesis import given, strategies as st

from qnd import toy


def parity(perm):
    inv = sum(perm[i] > perm[j] for i in range(len(perm)) for j in range(i + 1, len(perm)))
    return -1 if inv & 1 else 1


def test_hamiltonian_hermitian_and_propagator_unitary():
    cfg = toy.ToyConfig(dim=12)
    H = cfg.hamiltonian()
    np.testing.assert_allclose(H, H.conj().T, atol=1e-14)
    U = toy.propagator(H, 0.7)
    np.testing.assert_allclose(U @ U.conj().T, np.eye(12), atol=1e-12)
    np.testing.assert_allclose(U, scipy.linalg.expm(-0.7j * H), atol=1e-12)


def test_momentum_is_spectral_derivative():
    cfg = toy.ToyConfig(dim=16, dx=0.5)
    x = 2 * np.pi * np.arange(16) * 0.5 / 8.0           # one period of the grid
    f = np.sin(x)
    np.testing.assert_allclose(cfg.momentum() @ f, -1j * (2 * np.pi / 8.0) * np.cos(x), atol=1e-10)


@pytest.mark.parametrize("dim,steps,pot", [(4, 1, "free"), (8, 4, "harmonic"), (32, 8, "harmonic"),
                                           (16, 2, "free")])
def test_local_equals_remote(dim, steps, pot):
    cfg = toy.ToyConfig(dim=dim, steps=steps, potential=pot, seed=dim + steps)
    E, D = toy.build_experiment_and_dynamics(cfg)
    assert abs(toy.local_amplitude(E, D) - toy.remote_amplitude(cfg)) < 1e-10


def test_zero_steps_is_overlap():
    cfg = toy.ToyConfig(dim=6, steps=0)
    E, D = toy.build_experiment_and_dynamics(cfg)
    want = np.vdot(cfg.omega, cfg.alpha)
    assert abs(toy.local_amplitude(E, D) - want) < 1e-14
    assert abs(toy.remote_amplitude(cfg) - want) < 1e-14


def test_ground_state_amplitude_is_pure_phase():
    cfg0 = toy.ToyConfig(dim=10, potential="free")
    w, V = np.linalg.eigh(cfg0.hamiltonian())
    ground = V[:, 0]
    cfg = toy.ToyConfig(dim=10, steps=5, potential="free", alpha=ground, omega=ground)
    assert abs(abs(toy.remote_amplitude(cfg)) - 1) < 1e-12
    assert abs(abs(toy.local_amplitude(*toy.build_experiment_and_dynamics(cfg))) - 1) < 1e-12


@given(st.integers(0, 1000), st.integers(0, 6))
def test_unitarity_bound(seed, steps):
    cfg = toy.ToyConfig(dim=6, steps=steps, seed=seed)
    cfg.omega = cfg.alpha
    assert abs(toy.remote_amplitude(cfg)) <= 1 + 1e-12


def test_grades_and_content():
    cfg = toy.ToyConfig(dim=4, steps=3)
    E, D = toy.build_experiment_and_dynamics(cfg)
    assert D.grade == 3
    assert E.grade == 2
    kinds = sorted(g.content.kind for g in E.generators())
    assert kinds == ["input", "output"]
    _, D1 = toy.build_experiment_and_dynamics(toy.ToyConfig(dim=4, steps=1))
    (g,), = [tuple(D1.generators())]
    assert (g.content.head, g.content.tail) == (1, 0)


@pytest.mark.parametrize("perm", list(itertools.permutations(range(4))))
def test_reordering_tracks_permutation_sign(perm):
    cfg = toy.ToyConfig(dim=5, steps=4)
    E, D = toy.build_experiment_and_dynamics(cfg)
    _, Dp = toy.build_experiment_and_dynamics(cfg, order=perm)
    (m, c), = D.items()
    (mp, cp), = Dp.items()
    assert m == mp and cp == parity(perm) * c
    ref, moved = toy.contract(E, D), toy.contract(E, Dp)
    assert moved.sign == parity(perm) * ref.sign
    assert abs(moved.value - parity(perm) * ref.value) < 1e-14
    assert abs(moved.amplitude - ref.amplitude) < 1e-14


def test_identity_link_placements_are_reported():
    cfg = toy.ToyConfig(dim=4, steps=3)
    rows = toy.identity_link_report(cfg, [(), ((2, 1),), ((4, 3),)])
    assert [r["well_posed"] for r in rows] == [True, False, False]
    with pytest.raises(toy.ContractionError):
        toy.local_amplitude(*toy.build_experiment_and_dynamics(cfg, identity_links=((2, 1),)))


def test_mismatched_tensors_raise():
    E, _ = toy.build_experiment_and_dynamics(toy.ToyConfig(dim=4, steps=2))
    _, D = toy.build_experiment_and_dynamics(toy.ToyConfig(dim=4, steps=3))
    with pytest.raises(toy.ContractionError):
        toy.local_amplitude(E, D)


def test_basis_independence():
    U = scipy.stats.unitary_group.rvs(8, random_state=4)
    cfg = toy.ToyConfig(dim=8, steps=3, seed=2)
    rot = toy.ToyConfig(dim=8, steps=3, seed=2, basis=U)
    a = toy.remote_amplitude(cfg)
    assert abs(toy.remote_amplitude(rot) - a) < 1e-10
    assert abs(toy.local_amplitude(*toy.build_experiment_and_dynamics(rot)) - a) < 1e-10


def test_config_validation():
    with pytest.raises(ValueError):
        toy.ToyConfig(dim=1)
    with pytest.raises(ValueError):
        toy.ToyConfig(potential="cubic")
    with pytest.raises(ValueError):
        toy.ToyConfig(potential="custom").hamiltonian()


def test_schwinger_zero_perturbation():
    cfg = toy.ToyConfig(dim=6, steps=3, tav=0.1)
    assert toy.measured_variation(cfg, toy.potential_variation(cfg), 0.0) == 0


def test_schwinger_quadratic_residual():
    cfg = toy.ToyConfig(dim=8, steps=4, tav=0.05)
    rep = toy.schwinger_variation(cfg, toy.potential_variation(cfg))
    assert len(rep.ratios) == 3
    assert all(3.0 <= r <= 5.0 for r in rep.ratios), rep.ratios


def test_schwinger_commuting_perturbation_exact():
    cfg = toy.ToyConfig(dim=8, steps=4, tav=0.2)
    H = cfg.hamiltonian()
    rep = toy.schwinger_variation(cfg, H @ H)
    assert max(rep.residuals) < 1e-13


def test_per_slice_variation_scales_quadratically():
    cfg = toy.ToyConfig(dim=6, steps=3, tav=0.05)
    rng = np.random.default_rng(0)
    slices = [np.diag(rng.normal(size=6)) for _ in range(3)]
    rep = toy.schwinger_variation(cfg, slices)
    assert all(3.0 <= r <= 5.0 for r in rep.ratios), rep.ratios

"""
One-dimensional toy model: a particle on M grid points evolved through T time
jumps, described two ways.

*Remote*: ``A = ⟨ω|U^T|α⟩`` with ``U = exp(-i H tav)``.

*Local*: time-labeled topons ``|t⟩ ⊗ |h⟩``; chronons ``U[t+1←t]`` in a
dynamics tensor ``D``; input ``|α,0⟩`` and output ``⟨ω,T|`` in an experiment
tensor ``E``.  The amplitude is the unique contraction that pairs every bra
label with the one ket carrying the same time label.  Both tensors are
complex-backend Grassmann extensors whose generators carry their chronon.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .exterior import COMPLEX, GeneratorId, GradedExtensor, sort_sign
from .report import Check, SuiteReport


class ContractionError(ValueError):
    pass


POTENTIALS = ("free", "harmonic", "custom")


@dataclass
class ToyConfig:
    dim: int = 8
    steps: int = 4
    tav: float = 1.0
    mass: float = 1.0
    potential: str = "harmonic"
    spring: float = 0.05
    samples: np.ndarray | None = None
    alpha: np.ndarray | None = None
    omega: np.ndarray | None = None
    seed: int = 0
    dx: float = 1.0
    basis: np.ndarray | None = None

    def __post_init__(self):
        if self.dim < 2:
            raise ValueError("Hilbert dimension must be at least 2")
        if self.steps < 0:
            raise ValueError("number of time jumps must be non-negative")
        if self.potential not in POTENTIALS:
            raise ValueError(f"potential must be one of {POTENTIALS}")
        rng = np.random.default_rng(self.seed)
        if self.alpha is None:
            self.alpha = _random_state(rng, self.dim)
        if self.omega is None:
            self.omega = _random_state(rng, self.dim)
        self.alpha = np.asarray(self.alpha, dtype=complex)
        self.omega = np.asarray(self.omega, dtype=complex)
        if not self.alpha.any() or not self.omega.any():
            raise ValueError("alpha and omega must be nonzero")

    def positions(self):
        return (np.arange(self.dim) - (self.dim - 1) / 2) * self.dx

    def momentum(self):
        """Spectral derivative ``-i d/dx`` on the periodic grid (Hermitian)."""
        F = scipy.linalg.dft(self.dim, scale="sqrtn")
        k = 2 * np.pi * np.fft.fftfreq(self.dim, d=self.dx)
        return F.conj().T @ np.diag(k) @ F

    def potential_values(self):
        if self.potential == "free":
            return np.zeros(self.dim)
        if self.potential == "harmonic":
            return 0.5 * self.mass * self.spring ** 2 * self.positions() ** 2
        if self.samples is None or len(self.samples) != self.dim:
            raise ValueError("custom potential needs `samples` of length dim")
        return np.asarray(self.samples, dtype=float)

    def hamiltonian(self):
        p = self.momentum()
        H = p @ p / (2 * self.mass) + np.diag(self.potential_values())
        H = (H + H.conj().T) / 2
        if self.basis is not None:
            H = self.basis @ H @ self.basis.conj().T
        return H

    def states(self):
        a, w = self.alpha, self.omega
        if self.basis is not None:
            a, w = self.basis @ a, self.basis @ w
        return a, w


def _random_state(rng, n):
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    return v / np.linalg.norm(v)


def propagator(H, tav):
    """``exp(-i H tav)`` through the eigendecomposition (unitary to rounding)."""
    w, V = np.linalg.eigh(H)
    return (V * np.exp(-1j * w * tav)) @ V.conj().T


def remote_amplitude(cfg: ToyConfig) -> complex:
    U = propagator(cfg.hamiltonian(), cfg.tav)
    a, w = cfg.states()
    return complex(np.vdot(w, np.linalg.matrix_power(U, cfg.steps) @ a))


# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class ToyChronon:
    """One factor of E or D.

    ``head``/``tail`` are the time labels of the ket and bra topon factors
    (``None`` where the factor has no such side).
    """

    kind: str                    # "U-link", "identity-link", "input", "output"
    head: int | None
    tail: int | None
    data: np.ndarray = field(compare=False, repr=False)

    def generator(self) -> GeneratorId:
        tag = {"U-link": "U", "identity-link": "1", "input": "in", "output": "out"}[self.kind]
        label = tuple(x for x in (self.head, self.tail) if x is not None)
        return GeneratorId(1, (tag, *label), self)


def _wedge_listing(chronons, coeff=1.0) -> GradedExtensor:
    gens = [c.generator() for c in chronons]
    res = sort_sign(gens)
    if res is None:
        return GradedExtensor.zero(COMPLEX)
    sign, mono = res
    return GradedExtensor({mono: sign * coeff}, COMPLEX)


def dynamics_chronons(cfg: ToyConfig):
    """``[U[T←T-1], …, U[1←0]]`` in the displayed order."""
    U = propagator(cfg.hamiltonian(), cfg.tav)
    return [ToyChronon("U-link", t + 1, t, U) for t in reversed(range(cfg.steps))]


def experiment_chronons(cfg: ToyConfig, identity_links=()):
    """``[⟨ω,T|, 1[..]…, |α,0⟩]``; identity links are optional decorations."""
    a, w = cfg.states()
    eye = np.eye(cfg.dim, dtype=complex)
    links = [ToyChronon("identity-link", h, t, eye) for h, t in identity_links]
    return [ToyChronon("output", None, cfg.steps, w), *links, ToyChronon("input", 0, None, a)]


def build_experiment_and_dynamics(cfg: ToyConfig, identity_links=(), order=None):
    """``(E, D)`` as complex Grassmann extensors.

    ``order`` optionally permutes the listing of D's chronons; the wedge then
    carries the permutation's sign.
    """
    E = _wedge_listing(experiment_chronons(cfg, identity_links))
    d = dynamics_chronons(cfg)
    if order is not None:
        d = [d[i] for i in order]
    return E, _wedge_listing(d)


@dataclass
class Contraction:
    """Result of contracting E against D.

    ``value`` is the contraction of the wedges as given.  ``sign`` is the
    tracked Grassmann phase relating that listing to the reference listing
    (±1 for tensors from the builder).  ``amplitude`` removes it, so it does
    not depend on the order in which factors were listed.
    """

    amplitude: complex
    value: complex
    sign: complex
    chain: complex
    path: list


def _reference_sign(mono, ref_key):
    """Parity taking the stored (sorted) monomial to the reference listing."""
    listing = sorted(mono, key=ref_key)
    res = sort_sign(listing)
    return res[0]


def _ref_key(g: GeneratorId):
    c = g.content
    rank = {"output": 0, "identity-link": 1, "U-link": 1, "input": 2}[c.kind]
    return (rank, -(c.head if c.head is not None else -1))


def contract(E: GradedExtensor, D: GradedExtensor) -> Contraction:
    """Wick-style contraction of ``E`` against ``D``.

    Each bra label is paired with the unique ket factor carrying the same time
    label.  ``chain`` is the literal product along the chain.  Both wedges are
    re-expressed in their reference order (E: output, links, input; D: links by
    decreasing time); the coefficient picked up there is the Grassmann weight
    of the listing.
    """
    if len(E) != 1 or len(D) != 1:
        raise ContractionError("E and D must each be a single wedge monomial")
    (mE, cE), = E.items()
    (mD, cD), = D.items()
    factors = [g.content for g in mE + mD]
    if any(not isinstance(f, ToyChronon) for f in factors):
        raise ContractionError("factors must carry toy chronons")
    outputs = [f for f in factors if f.kind == "output"]
    inputs = [f for f in factors if f.kind == "input"]
    if len(outputs) != 1 or len(inputs) != 1:
        raise ContractionError("need exactly one input and one output factor")
    kets = {}
    for f in factors:
        if f.kind != "output":
            kets.setdefault(f.head, []).append(f)
    row = outputs[0].data.conj()
    label = outputs[0].tail
    used = [outputs[0]]
    while True:
        cands = kets.get(label, [])
        if len(cands) != 1:
            raise ContractionError(f"bra label {label} matches {len(cands)} ket factors")
        f = cands[0]
        used.append(f)
        if f.kind == "input":
            chain = complex(row @ f.data)
            break
        row = row @ f.data
        label = f.tail
    if len(used) != len(factors):
        raise ContractionError(f"{len(factors) - len(used)} factors left uncontracted")
    weight = cE * cD * _reference_sign(mE, _ref_key) * _reference_sign(mD, _ref_key)
    sign = weight / abs(weight)
    return Contraction(abs(weight) * chain, weight * chain, sign, chain,
                       [(f.kind, f.head, f.tail) for f in used])


def local_amplitude(E: GradedExtensor, D: GradedExtensor) -> complex:
    """Sign-corrected amplitude of the unique contraction."""
    return contract(E, D).amplitude


def identity_link_report(cfg: ToyConfig, placements) -> list:
    """Which identity-link placements in E leave a well-posed contraction."""
    rows = []
    _, D = build_experiment_and_dynamics(cfg)
    for links in placements:
        E, _ = build_experiment_and_dynamics(cfg, identity_links=links)
        try:
            amp = local_amplitude(E, D)
            rows.append({"links": list(links), "well_posed": True, "amplitude": amp})
        except ContractionError as exc:
            rows.append({"links": list(links), "well_posed": False, "reason": str(exc)})
    return rows


# ----------------------------------------------------------------------------

def chain_amplitude(cfg: ToyConfig, slices) -> complex:
    a, w = cfg.states()
    v = a
    for U in slices:
        v = U @ v
    return complex(np.vdot(w, v))


def first_order_prediction(cfg: ToyConfig, dH, eps) -> complex:
    """``Σ_t ⟨ω|U^{T-1-t} (-i eps tav δH_t) U^{t+1}|α⟩``."""
    H = cfg.hamiltonian()
    U = propagator(H, cfg.tav)
    a, w = cfg.states()
    total = 0j
    for t in range(cfg.steps):
        right = np.linalg.matrix_power(U, t + 1) @ a
        left = np.linalg.matrix_power(U, cfg.steps - 1 - t).conj().T @ w
        total += np.vdot(left, -1j * eps * cfg.tav * (_slice(dH, t) @ right))
    return complex(total)


def _slice(dH, t):
    return dH[t] if isinstance(dH, (list, tuple)) else dH


def measured_variation(cfg: ToyConfig, dH, eps) -> complex:
    """First-order change of the amplitude under ``H -> H + eps δH_t`` per slice.

    Central differences ``D(e) = (A(e) - A(-e))/2`` at ``e = eps`` and
    ``eps/2`` are Richardson-combined to cancel the cubic term.
    """
    H = cfg.hamiltonian()

    def amp(e):
        return chain_amplitude(cfg, [propagator(H + e * _slice(dH, t), cfg.tav) for t in range(cfg.steps)])

    def central(e):
        return (amp(e) - amp(-e)) / 2

    return (8 * central(eps / 2) - central(eps)) / 3


@dataclass
class SchwingerReport:
    taus: list
    residuals: list
    ratios: list
    measured: list
    predicted: list


def schwinger_variation(cfg: ToyConfig, dH, eps: float = 1e-4, halvings: int = 3) -> SchwingerReport:
    """Compare measured and first-order amplitude variations as ``tav`` halves.

    The residual of the first-order rule is second order in ``tav`` at fixed
    number of jumps, so successive residual ratios should approach 4.
    """
    taus, res, meas, pred = [], [], [], []
    for k in range(halvings + 1):
        c = ToyConfig(**{**cfg.__dict__, "tav": cfg.tav / 2 ** k})
        m = measured_variation(c, dH, eps)
        p = first_order_prediction(c, dH, eps)
        taus.append(c.tav)
        meas.append(m)
        pred.append(p)
        res.append(abs(m - p))
    ratios = [a / b for a, b in zip(res, res[1:])]
    return SchwingerReport(taus, res, ratios, meas, pred)


def potential_variation(cfg: ToyConfig, seed: int = 1):
    """A diagonal (position-space) Hermitian variation."""
    rng = np.random.default_rng(seed)
    return np.diag(rng.normal(size=cfg.dim))


# ----------------------------------------------------------------------------

GRID_DIMS = (4, 8, 16, 32)
GRID_STEPS = (1, 2, 4, 8)
GRID_POTENTIALS = ("free", "harmonic")


def equivalence_rows(dims=GRID_DIMS, steps=GRID_STEPS, potentials=GRID_POTENTIALS, seed=0, tav=1.0):
    rows = []
    for M in dims:
        for T in steps:
            for pot in potentials:
                cfg = ToyConfig(dim=M, steps=T, potential=pot, seed=seed, tav=tav)
                remote = remote_amplitude(cfg)
                local = local_amplitude(*build_experiment_and_dynamics(cfg))
                rows.append({"dim": M, "T": T, "potential": pot, "abs_remote": abs(remote),
                             "abs_local": abs(local), "error": abs(local - remote)})
    return rows


def verify_toy(cfg: ToyConfig | None = None, grid: bool = True) -> SuiteReport:
    rep = SuiteReport("toy", meta={"tolerance": 1e-10})
    if cfg is not None:
        remote = remote_amplitude(cfg)
        local = local_amplitude(*build_experiment_and_dynamics(cfg))
        rep.add(Check.expect(f"local = remote (dim={cfg.dim}, T={cfg.steps}, {cfg.potential})",
                             abs(local - remote) < 1e-10,
                             f"|A_remote|={abs(remote):.12g} |A_local|={abs(local):.12g}",
                             [["error", abs(local - remote)]]))
    if grid:
        for row in equivalence_rows(seed=cfg.seed if cfg else 0):
            rep.add(Check.expect(f"local = remote dim={row['dim']} T={row['T']} {row['potential']}",
                                 row["error"] < 1e-10, "", [["abs_remote", row["abs_remote"]],
                                                          ["abs_local", row["abs_local"]],
                                                          ["error", row["error"]]]))
    base = ToyConfig(dim=8, steps=4, tav=0.05, potential="harmonic", seed=cfg.seed if cfg else 0)
    sch = schwinger_variation(base, potential_variation(base))
    ok = len(sch.ratios) == 3 and all(3.0 <= r <= 5.0 for r in sch.ratios)
    rep.add(Check.expect("Schwinger residual ratio in [3, 5] over 3 halvings", ok,
                         "ratios=" + ", ".join(f"{r:.4f}" for r in sch.ratios),
                         [[f"residual@tav={t:g}", r] for t, r in zip(sch.taus, sch.residuals)]))
    links = identity_link_report(base, [(), ((base.steps - 1, base.steps - 2),)])
    rep.add(Check("identity-link placements", "info",
                  "; ".join(f"{r['links']}: {'well-posed' if r['well_posed'] else r['reason']}" for r in links)))
    return rep

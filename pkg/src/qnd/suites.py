"""Verification suites shared by the CLI and the acceptance tests."""

from __future__ import annotations

import random
import time
from fractions import Fraction

from . import network, quadrupole
from .dipole import (
    adjoint_conventions, bracket, lift_coordinate, lift_translation,
    random_chronon, spin_split, trace_metric,
)
from .exterior import dual_pair
from .hyperdiamond import verify_vacuum
from .lattice import (
    AXES, METRIC, ShiftPolyOperator, commutator, coordinate_operator, lorentz_pairs,
    lorentz_structure_constants, operators_equal, translation_generator,
)
from .report import INFO, Check, SuiteReport, merge
from .symmetry import verify_s4
from .toy import ToyConfig, verify_toy

DEFAULT_SEED = 20240917


def verify_ccr() -> SuiteReport:
    rep = SuiteReport("ccr")
    t0 = time.perf_counter()
    ok_all = True
    for mu in AXES:
        for lam in AXES:
            c = commutator(translation_generator(mu), coordinate_operator(lam))
            want = ShiftPolyOperator.identity() if mu == lam else ShiftPolyOperator.zero()
            ok = operators_equal(c, want)
            ok_all &= ok
            rep.add(Check.expect(f"[p{mu}, x{lam}] = {int(mu == lam)}", ok, str(c)))
    elapsed = time.perf_counter() - t0
    # elapsed time stays out of the report so output is byte-reproducible
    rep.add(Check.expect("16 pairs in < 1 s", ok_all and elapsed < 1.0))
    for mu in AXES:
        for lam in AXES:
            if mu < lam:
                pp = commutator(translation_generator(mu), translation_generator(lam))
                xx = commutator(coordinate_operator(mu), coordinate_operator(lam))
                rep.add(Check.expect(f"[p{mu}, p{lam}] = [x{mu}, x{lam}] = 0",
                                     pp.is_zero() and xx.is_zero()))
    up, low = METRIC.upper, METRIC.lower
    prod = [[sum(up[i][k] * low[k][j] for k in range(4)) for j in range(4)] for i in range(4)]
    rep.add(Check.expect("χ^{νμ} χ_{μσ} = δ", prod == [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]))
    fixture = all(low[i][j] == (Fraction(-2, 3) if i == j else Fraction(1, 3)) for i in range(4) for j in range(4))
    rep.add(Check.expect("χ_{μν}: diagonal -2/3, off-diagonal 1/3", fixture,
                         f"diag={low[0][0]} off={low[0][1]}"))
    rep.add(_structure_constant_check())
    return rep


def _expected_lorentz_bracket(p, q):
    """``χ_{νρ}L_{μσ} - χ_{μρ}L_{νσ} - χ_{νσ}L_{μρ} + χ_{μσ}L_{νρ}`` reduced to μ<λ."""
    (mu, nu), (rho, sig) = p, q
    out = {}

    def add(c, a, b):
        if a == b or not c:
            return
        key, s = ((a, b), 1) if a < b else ((b, a), -1)
        out[key] = out.get(key, 0) + s * c

    low = METRIC.low
    add(low(nu, rho), mu, sig)
    add(-low(mu, rho), nu, sig)
    add(-low(nu, sig), mu, rho)
    add(low(mu, sig), nu, rho)
    return {k: v for k, v in out.items() if v}


def _structure_constant_check() -> Check:
    table = lorentz_structure_constants()
    bad = [(p, q) for p in lorentz_pairs() for q in lorentz_pairs()
           if table[(p, q)] != _expected_lorentz_bracket(p, q)]
    sample = table[((1, 2), (2, 3))]
    return Check.expect("Lorentz generators close with lowered-metric structure constants", not bad,
                        f"[l12, l23] = {', '.join(f'{v}·l{a}{b}' for (a, b), v in sorted(sample.items()))}"
                        + (f"; mismatches {bad}" if bad else ""))


def verify_dipole(seed: int = DEFAULT_SEED, samples: int = 20) -> SuiteReport:
    rep = SuiteReport("dipole", meta={"seed": seed, "samples": samples})
    rng = random.Random(seed)
    chis = [random_chronon(rng).op for _ in range(samples)]
    bad = []
    for i, chi in enumerate(chis):
        for mu in AXES:
            for lam in AXES:
                got = bracket(lift_translation(mu), lift_coordinate(lam), chi)
                want = chi if mu == lam else ShiftPolyOperator.zero()
                if not operators_equal(got, want):
                    bad.append((i, mu, lam))
    rep.add(Check.expect(f"[P_μ, X^λ] = δ on {samples} random chronons", not bad, f"failures {bad[:5]}"))
    # linear in X, so X^ν for every ν also covers X_ν = χ_{νρ} X^ρ
    spins = {pair: spin_split(*pair)[1] for pair in lorentz_pairs()}
    coords = {nu: lift_coordinate(nu) for nu in AXES}
    bad = []
    for i, chi in enumerate(chis):
        x_chi = {nu: X(chi) for nu, X in coords.items()}
        for pair, S in spins.items():
            s_chi = S(chi)
            for nu, X in coords.items():
                if not (S(x_chi[nu]) - X(s_chi)).is_zero():
                    bad.append((i, pair, nu))
    rep.add(Check.expect(f"[S_μλ, X^ν] = 0 on {samples} random chronons", not bad,
                         f"failures {bad[:5]}"))
    disc = [adjoint_conventions(chi, 3)["discrepancies"] for chi in chis[:5]]
    rep.add(Check("adjoint: symbolic vs truncated transpose on window 3", INFO,
                  f"discrepant entries per chronon: {[len(d) for d in disc]}"))
    p1 = translation_generator(1)
    rep.add(Check.expect("|p1|² trace = 0 (off-diagonal generator)", trace_metric(p1).value == 0,
                         str(trace_metric(p1))))
    sym = p1 + p1.transpose()
    tm = trace_metric(sym)
    rep.add(Check("|p1 + p1ᵀ|² trace over [0, W)⁴", INFO, f"polynomial in W: {tm}"))
    return rep


def verify_quadrupole(seed: int = DEFAULT_SEED, samples: int = 50) -> SuiteReport:
    rep = SuiteReport("quadrupole", meta={"seed": seed, "samples": samples})
    rng = random.Random(seed)
    witnesses = {}
    for d in (2, 3):
        ser = par = True
        for _ in range(samples):
            a, b, c = (quadrupole.random_quad(rng, d, density=0.6) for _ in range(3))
            S, P = quadrupole.serial_product, quadrupole.parallel_product
            ser &= S(S(a, b), c) == S(a, S(b, c))
            par &= P(P(a, b), c) == P(a, P(b, c))
            if d not in witnesses and S(a, b) != P(a, b):
                witnesses[d] = (a, b)
        rep.add(Check.expect(f"serial associative d={d}", ser, f"{samples} triples"))
        rep.add(Check.expect(f"parallel associative d={d}", par, f"{samples} triples"))
        a, b = witnesses.get(d, (None, None))
        rep.add(Check.expect(f"serial ≠ parallel witness d={d}", a is not None,
                             "" if a is None else f"a={sorted(a.to_dict().items())[:3]}…"))
        e = quadrupole.serial_unit(d)
        x = quadrupole.random_quad(rng, d)
        rep.add(Check.expect(f"serial unit d={d}", quadrupole.serial_product(e, x) == x
                             and quadrupole.serial_product(x, e) == x,
                             f"tr_o e = {quadrupole.trace_serial(e)}"))
        g = network.random_invertible(rng, d)
        y = quadrupole.gl_transport(g, x)
        rep.add(Check.expect(f"traces invariant under GL transport d={d}",
                             quadrupole.trace_serial(y) == quadrupole.trace_serial(x)
                             and quadrupole.trace_parallel(y) == quadrupole.trace_parallel(x)))
    vac = quadrupole.build_vacuum_II(2)
    exact = all(vac.recovered_coefficient(nu, mu) == METRIC.up(nu, mu) for nu in AXES for mu in AXES)
    rep.add(Check.expect("vacuum II coefficients = χ^{νμ}", exact, f"window 2, topon dim {vac.topon_dim}"))
    rep.meta["witnesses"] = {d: [sorted(a.to_dict().items()), sorted(b.to_dict().items())]
                             for d, (a, b) in witnesses.items()}
    return rep


def verify_invariants(net: network.FiniteNet, n: int = 2, seed: int = DEFAULT_SEED,
                      transports: int = 20) -> SuiteReport:
    rep = SuiteReport("invariants", meta={"net": net.to_dict(), "n": n, "seed": seed})
    state = net.state()
    N = net.num_nodes
    grade = state.grade
    n1 = network.chronon_number(state, N)
    rep.add(Check.expect(f"N(1) eigenvalue = grade {grade}", n1 == state.scale(grade)))
    for k in range(1, n + 1):
        fast = network.path_invariant(k, state, N)
        oracle = network.path_invariant_oracle(k, state, N)
        rep.add(Check.expect(f"N({k}) = oracle", fast == oracle, str(fast),
                             [[f"N({k}) self-pairing", dual_pair(state, fast)]]))
    rng = random.Random(seed)
    ok = True
    for _ in range(transports):
        g = network.random_invertible(rng, N)
        moved = network.gl_transport(g, state)
        ok &= network.chronon_number(moved, N) == network.gl_transport(g, n1)
    rep.add(Check.expect(f"N(1) commutes with GL transport ({transports} matrices)", ok))
    return rep


def verify_invariants_exhaustive() -> SuiteReport:
    """N(1) = grade for nets ≤ 5 nodes and grade ≤ 4; N(n) = oracle, nets ≤ 4 nodes, n ≤ 3.

    Four-node nets are checked one per relabelling class: both sides are
    equivariant under relabelling, so a class agrees iff its representative does.
    """
    rep = SuiteReport("invariants/exhaustive")
    count, bad = 0, []
    for nodes in range(1, 6):
        for net in network.all_nets(nodes, max_grade=4):
            st = net.state()
            count += 1
            if network.path_invariant(1, st, nodes) != st.scale(st.grade):
                bad.append(net.to_dict())
    rep.add(Check.expect("N(1) eigenvalue = grade, nets ≤ 5 nodes, grade ≤ 4", not bad,
                         f"{count} nets", [["nets", count]]))
    count, bad = 0, []
    for nodes in range(1, 5):
        nets = network.net_classes(4) if nodes == 4 else network.all_nets(nodes)
        for net in nets:
            st = net.state()
            count += 1
            for k in (1, 2, 3):
                if network.path_invariant(k, st, nodes) != network.path_invariant_oracle(k, st, nodes):
                    bad.append((net.to_dict(), k))
    rep.add(Check.expect("N(n) = oracle, nets ≤ 4 nodes, n ≤ 3", not bad, f"{count} nets",
                         [["nets", count]]))
    return rep


def verify_exchange() -> SuiteReport:
    rep = SuiteReport("exchange")
    u12, u34 = network.nested_unit(1, 2), network.nested_unit(3, 4)
    state = u12.wedge(u34)
    r = network.exchange_test("within", state, (1, 2))
    rep.add(Check.expect("within-unit swap τ1↔τ2: eigenvalue -1", r.kind == "eigen" and r.eigenvalue == -1,
                         f"{r.kind} {r.eigenvalue}"))
    r = network.exchange_test("across", state, (2, 3))
    rep.add(Check.expect("across-unit swap τ2↔τ3: zero self-overlap", r.kind == "permutation" and r.overlap == 0,
                         f"image {r.image}; {r.note}"))
    (mono,), = [tuple(state.terms)]
    r = network.exchange_test("factor", state, mono)
    rep.add(Check.expect("unit factor swap: eigenvalue -1", r.kind == "eigen" and r.eigenvalue == -1,
                         f"{r.kind} {r.eigenvalue}"))
    return rep


SUITES = {
    "ccr": verify_ccr,
    "vacuum": verify_vacuum,
    "dipole": verify_dipole,
    "quadrupole": verify_quadrupole,
}


def run_all(seed: int = DEFAULT_SEED) -> SuiteReport:
    path3 = network.FiniteNet(3, ((0, 1), (1, 2)))
    parts = [verify_ccr(), verify_vacuum(), verify_dipole(seed), verify_quadrupole(seed),
             verify_invariants(path3, 3, seed), verify_exchange(),
             verify_toy(ToyConfig(seed=seed % 2 ** 32)), verify_s4(seed)]
    return merge("all", parts, {"seed": seed})


__all__ = ["DEFAULT_SEED", "SUITES", "run_all", "verify_ccr", "verify_dipole", "verify_exchange",
           "verify_invariants", "verify_invariants_exhaustive", "verify_quadrupole"]

"""Acceptance criteria, one test per criterion.

Each test records a single PASS/FAIL line; the lines are printed in the
pytest terminal summary and when this file is run as a script.
"""

import subprocess
import sys
import time
from fractions import Fraction

import pytest

from qnd import network, suites, toy
from qnd.hyperdiamond import (
    build_vacuum_I, verify_lorentz_invariance, verify_mutation, verify_sl4_invariance,
    verify_translation_invariance,
)
from qnd.lattice import AXES, METRIC, ShiftPolyOperator, commutator, coordinate_operator, \
    operators_equal, translation_generator
from qnd.symmetry import verify_s4

SEED = suites.DEFAULT_SEED
RESULTS = []


def record(number, title, ok, detail=""):
    RESULTS.append(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}" + (f" ({detail})" if detail else ""))
    assert ok, f"criterion {number} failed: {detail}"


def test_criterion_01_exact_ccr():
    t0 = time.perf_counter()
    ok = all(operators_equal(commutator(translation_generator(mu), coordinate_operator(lam)),
                             ShiftPolyOperator.identity() if mu == lam else ShiftPolyOperator.zero())
             for mu in AXES for lam in AXES)
    dt = time.perf_counter() - t0
    record(1, "exact CCR, 16 pairs, < 1 s", ok and dt < 1.0, f"{dt:.3f} s")


def test_criterion_02_hyperdiamond_invariance():
    t0 = time.perf_counter()
    vac = build_vacuum_I()
    reps = [verify_translation_invariance(vac), verify_lorentz_invariance(vac), verify_mutation(vac)]
    dt = time.perf_counter() - t0
    zero_checks = sum(c.name.startswith(("P", "J")) and c.ok for r in reps[:2] for c in r.checks)
    ok = all(r.ok for r in reps) and zero_checks == 10 and dt < 5.0
    record(2, "P and J annihilate vac I, mutation detected, < 5 s", ok,
           f"{zero_checks}/10 zero residuals, {len(reps[2].checks)} mutation checks, {dt:.2f} s")


def test_criterion_03_sl4():
    rep = verify_sl4_invariance()
    record(3, "12 mixed generators annihilate vac I", rep.ok and len(rep.checks) == 12,
           f"{sum(c.ok for c in rep.checks)}/12")


def test_criterion_04_metric():
    up, low = METRIC.upper, METRIC.lower
    inverse = all(sum(up[i][k] * low[k][j] for k in range(4)) == (i == j) for i in range(4) for j in range(4))
    fixture = all(low[i][j] == (Fraction(-2, 3) if i == j else Fraction(1, 3)) for i in range(4) for j in range(4))
    record(4, "metric inverse exact, lowered fixture -2/3 and 1/3", inverse and fixture)


def test_criterion_05_lifted_structure():
    rep = suites.verify_dipole(SEED, samples=20)
    core = [c for c in rep.checks if c.status != "info"][:2]
    record(5, "[P, X] = δ and [S, X] = 0 on 20 random chronons", all(c.ok for c in core) and len(core) == 2,
           "; ".join(c.name for c in core))


def test_criterion_06_quadrupole():
    rep = suites.verify_quadrupole(SEED, samples=50)
    witnesses = rep.meta.get("witnesses", {})
    ok = rep.ok and set(witnesses) == {2, 3}
    record(6, "quadrupole associativity at d=2,3 (50 triples), witnesses, vacuum II = metric", ok,
           f"{len(rep.checks)} checks")


def test_criterion_07_invariants():
    t0 = time.perf_counter()
    rep = suites.verify_invariants_exhaustive()
    net = network.FiniteNet(4, ((0, 1), (1, 2), (2, 3), (3, 0), (1, 1)))
    gl = suites.verify_invariants(net, 1, SEED, transports=20)
    dt = time.perf_counter() - t0
    counts = ", ".join(f"{c.numeric[0][1]} nets" for c in rep.checks)
    record(7, "N(1) = grade (<=5 nodes), N(n) = oracle (<=4 nodes, n<=3), GL commutation x20",
           rep.ok and gl.ok, f"{counts}; {dt:.1f} s")


def test_criterion_08_parastatistics():
    rep = suites.verify_exchange()
    record(8, "within -1, across zero overlap, factor -1", rep.ok and len(rep.checks) == 3)


def test_criterion_09_toy_equivalence():
    t0 = time.perf_counter()
    rows = toy.equivalence_rows(dims=(4, 8, 16, 32), steps=(1, 2, 4, 8), potentials=("free", "harmonic"),
                                seed=SEED % 2 ** 32)
    dt = time.perf_counter() - t0
    worst = max(r["error"] for r in rows)
    record(9, "local = remote over 32 configurations, < 30 s", len(rows) == 32 and worst < 1e-10 and dt < 30,
           f"max error {worst:.2e}, {dt:.2f} s")


def test_criterion_10_schwinger():
    cfg = toy.ToyConfig(dim=8, steps=4, tav=0.05, seed=SEED % 2 ** 32)
    rep = toy.schwinger_variation(cfg, toy.potential_variation(cfg), halvings=3)
    ok = len(rep.ratios) == 3 and all(3.0 <= r <= 5.0 for r in rep.ratios)
    record(10, "residual ratio in [3, 5] over 3 halvings", ok, ", ".join(f"{r:.3f}" for r in rep.ratios))


def test_criterion_11_s4():
    rep = verify_s4(SEED)
    rows = rep.meta["rows"]
    proper = sum(r["det_sign"] == 1 for r in rows)
    record(11, "S(4): bijection, 12/12 Lorentz split, double algebra, arrow algebra N=2,3",
           rep.ok and proper == 12 and len(rows) == 24, f"{len(rep.checks)} checks, {proper} proper")


def test_criterion_12_all_suite():
    cmd = [sys.executable, "-m", "qnd", "all", "--seed", str(SEED)]
    t0 = time.perf_counter()
    first = subprocess.run(cmd, capture_output=True, text=True)
    dt = time.perf_counter() - t0
    second = subprocess.run(cmd, capture_output=True, text=True)
    ok = first.returncode == 0 and dt < 120 and first.stdout == second.stdout
    record(12, "`all` exits 0 in < 2 min, byte-identical rerun", ok,
           f"exit {first.returncode}, {dt:.1f} s, identical={first.stdout == second.stdout}")


if __name__ == "__main__":
    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    print("\n".join(RESULTS))
    sys.exit(code)

"""
The hyperdiamond vacuum ``|vac I⟩ = ⋁_μ |p̃_μ⟩`` and its invariance checks.

The nearest-neighbour link sum ``Σ_m |m⟩⟨m+1_μ|`` along one axis is exactly the
down-shift ``p̃_μ``, so the vacuum is the wedge of four unitized translation
generators.  Lifted generators act on it as even derivations of the wedge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dipole import LiftedGenerator, lift_coordinate, lift_lorentz, lift_mixed, lift_translation
from .exterior import GradedExtensor, extend_as_derivation, unit, wedge
from .lattice import AXES, ShiftPolyOperator, operators_equal, translation_generator
from .report import Check, SuiteReport


@dataclass(frozen=True)
class VacuumExtensor:
    value: GradedExtensor
    factors: tuple

    @property
    def grade(self):
        return self.value.grade


def link_sum_operator(mu: int) -> ShiftPolyOperator:
    """``Σ_m |m⟩⟨m + 1_μ|`` written in canonical shift form."""
    # each link sends |m+1_μ⟩ to |m⟩ with weight one and nothing else
    return ShiftPolyOperator.down(mu)


def build_vacuum_I() -> VacuumExtensor:
    factors = tuple(unit(link_sum_operator(mu)) for mu in AXES)
    return VacuumExtensor(wedge(*factors), factors)


def apply_lifted(g: LiftedGenerator, state: GradedExtensor, kill_repeats: bool = True) -> GradedExtensor:
    return extend_as_derivation(g.on_generator, state, kill_repeats=kill_repeats)


def _image_detail(g: LiftedGenerator, vac: VacuumExtensor) -> str:
    parts = []
    for mu, fac in zip(AXES, vac.factors):
        (gen,), = fac.terms
        parts.append(f"{g.kind}{g.indices}|p{mu}> = |{g(gen.content)}>")
    return "; ".join(parts)


def _zero_check(name, g, vac, kill_repeats=True):
    residual = apply_lifted(g, vac.value, kill_repeats)
    return Check.expect(name, residual.is_zero(),
                        f"residual={residual}; {_image_detail(g, vac)}")


def verify_translation_invariance(vac: VacuumExtensor | None = None) -> SuiteReport:
    vac = vac or build_vacuum_I()
    rep = SuiteReport("vacuum/translation")
    for mu in AXES:
        rep.add(_zero_check(f"P{mu}|vac I> = 0", lift_translation(mu), vac))
    residual = apply_lifted(lift_coordinate(1), vac.value)
    rep.add(Check.expect("X1|vac I> != 0 (contrast)", not residual.is_zero(),
                         f"{len(residual)} monomials survive"))
    return rep


def verify_lorentz_invariance(vac: VacuumExtensor | None = None) -> SuiteReport:
    vac = vac or build_vacuum_I()
    rep = SuiteReport("vacuum/lorentz")
    for mu in AXES:
        for lam in AXES:
            if mu < lam:
                rep.add(_zero_check(f"J{mu}{lam}|vac I> = 0", lift_lorentz(mu, lam), vac))
    return rep


def verify_mutation(vac: VacuumExtensor | None = None) -> SuiteReport:
    """With the exclusion rule disabled the Lorentz residual must not vanish."""
    vac = vac or build_vacuum_I()
    rep = SuiteReport("vacuum/mutation")
    for mu in AXES:
        for lam in AXES:
            if mu < lam:
                residual = apply_lifted(lift_lorentz(mu, lam), vac.value, kill_repeats=False)
                rep.add(Check.expect(f"J{mu}{lam} without repeat-kill != 0", not residual.is_zero(),
                                     f"{len(residual)} surviving monomials"))
    return rep


def verify_sl4_invariance(vac: VacuumExtensor | None = None) -> SuiteReport:
    vac = vac or build_vacuum_I()
    rep = SuiteReport("vacuum/sl4")
    for lam in AXES:
        for nu in AXES:
            if lam != nu:
                rep.add(_zero_check(f"G{lam}{nu}|vac I> = 0", lift_mixed(lam, nu), vac))
    return rep


def verify_factors(vac: VacuumExtensor | None = None) -> SuiteReport:
    vac = vac or build_vacuum_I()
    rep = SuiteReport("vacuum/structure")
    rep.add(Check.expect("grade 4", vac.grade == 4, f"grade={vac.grade}"))
    for mu, fac in zip(AXES, vac.factors):
        (gen,), = fac.terms
        rep.add(Check.expect(f"factor {mu} is p{mu}",
                             operators_equal(gen.content, translation_generator(mu))))
    return rep


def verify_vacuum() -> SuiteReport:
    vac = build_vacuum_I()
    rep = SuiteReport("vacuum")
    for sub in (verify_factors(vac), verify_translation_invariance(vac),
                verify_lorentz_invariance(vac), verify_mutation(vac), verify_sl4_invariance(vac)):
        for c in sub.checks:
            rep.add(Check(f"{sub.suite.split('/')[-1]}: {c.name}", c.status, c.detail, c.numeric))
    return rep

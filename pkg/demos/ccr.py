"""Canonical commutators and the Lorentz algebra on the lattice."""

from qnd.lattice import ShiftPolyOperator, commutator, coordinate_operator, operators_equal, translation_generator
from qnd.suites import verify_ccr

c = commutator(translation_generator(1), coordinate_operator(1))
print("[p1, x1] =", c, "| equals identity:", operators_equal(c, ShiftPolyOperator.identity()))
c = commutator(translation_generator(1), coordinate_operator(3))
print("[p1, x3] =", c)
print(verify_ccr().summary())

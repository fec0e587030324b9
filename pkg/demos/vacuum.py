"""Build the hyperdiamond vacuum and watch the lifted generators annihilate it."""

from qnd.dipole import lift_lorentz, lift_translation
from qnd.hyperdiamond import apply_lifted, build_vacuum_I, verify_vacuum

vac = build_vacuum_I()
print("vacuum grade:", vac.grade)
for mu in range(1, 5):
    print(f"translation {mu}: residual zero ->", apply_lifted(lift_translation(mu), vac.value).is_zero())
print("Lorentz (1,2): residual zero ->", apply_lifted(lift_lorentz(1, 2), vac.value).is_zero())
print(verify_vacuum().summary())

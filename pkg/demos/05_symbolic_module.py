"""The module V(-wN) over Q(q): generator actions and the relation checks.

A deliberately wrong f_0 coefficient shows how a broken module is reported.
"""

from supercrystal import AlgebraType, SpinModule, check_relations
from supercrystal.module_realization import ModuleVector, check_crystal_lattice, polarization
from supercrystal.qfield import q

t = AlgebraType("D", 4)
module = SpinModule(t)
v = ModuleVector.basis(("-++-", 2))
print("e_0 v(-++-)_2 =", module.act("e", 0, v).render())
w = ModuleVector.basis(("+++-", 3))
print("f_0 v(+++-)_3 =", module.act("f", 0, w).render())
print("(v, v) at level 3 =", polarization(w, w, module).render())

for family in "DB":
    t = AlgebraType(family, 3)
    rel, lat = check_relations(t, 6), check_crystal_lattice(t, 6)
    print(f"{t}: relations {rel.checked} checked, passed={rel.passed}; lattice passed={lat.passed}")

t = AlgebraType("D", 2)
broken = SpinModule(t, f0_coefficient=lambda k: q(2 * k + 2))
report = check_relations(t, 4, broken)
print(f"\nwrong f_0: {len(report.failures)} failures, first:", report.failures[0])

"""Classical components of B(w0) and of a typical crystal, against their closed forms."""

from collections import Counter

from supercrystal import AlgebraType, Weight, build_omega0, omega0_formula, typical_model, typical_structure_formula
from supercrystal.super_crystal import label_super_components

t = AlgebraType("D", 4)
cap = 8

labels, _ = label_super_components(build_omega0(t, cap).vertices, t)
observed = Counter(lab for lab in labels if lab.level <= cap)
print(f"B(w0) for {t} up to level {cap}:")
for lab in sorted(observed):
    print(f"  {lab.pretty(t)} x{observed[lab]}")
print("matches closed form:", observed == Counter(omega0_formula(t, cap)))

lam = Weight.from_standard(1, (0, 0, 0, 1))
labels, _ = label_super_components(typical_model(lam, t, cap).vertices, t)
observed = Counter(lab for lab in labels if lab.level <= cap)
print(f"\nB({lam.pretty()}) has {sum(observed.values())} classical components up to level {cap}")
print("matches closed form:", observed == Counter(typical_structure_formula(lam, t, cap)))

"""Walk through the crystal of the spin module B(-w4) for D(4,1).

Each level k carries a copy of the 8-element even or odd spin crystal; the
index-0 operators move between neighbouring levels.
"""

from collections import defaultdict

from supercrystal import AlgebraType, spin_module_crystal
from supercrystal.super_crystal import label_super_components, to_dot

t = AlgebraType("D", 4)
crystal = spin_module_crystal(t, cap=2)

layers = defaultdict(list)
for (signs, level), in crystal.vertices:
    layers[level].append(signs)
for level, signs in sorted(layers.items()):
    print(f"level {level}: {' '.join(signs)}")

zero_edges = [(s, d) for s, d, i in crystal.edges() if i == 0]
print(f"\n{len(crystal)} vertices, {len(zero_edges)} index-0 edges, for example")
for s, d in zero_edges[:3]:
    print(f"  {s[0]} -> {d[0]}")

labels, _ = label_super_components(crystal.vertices, t)
print("\nclassical components:", ", ".join(lab.pretty(t) for lab in sorted(labels, key=lambda x: x.level)))

with open("spin_d4.dot", "w") as fh:
    fh.write(to_dot(crystal))
print("\nwrote spin_d4.dot (render with: dot -Tpng spin_d4.dot -o spin_d4.png)")

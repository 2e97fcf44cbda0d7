"""Decompose B(-wN) (x) B(-wN) by graph search and compare with the closed form."""

from supercrystal import AlgebraType, compare, decompose_super, spin_module_crystal, spin_spin_formula
from supercrystal.verification import with_predicted_multiplicities

cap = 6
for family, n in (("D", 4), ("D", 5), ("B", 3)):
    t = AlgebraType(family, n)
    seconds = [("plus", spin_module_crystal(t, cap))]
    if family == "D":
        seconds.append(("minus", spin_module_crystal(t, cap, odd=True)))
    for name, second in seconds:
        observed = decompose_super([spin_module_crystal(t, cap), second], cap)
        predicted = with_predicted_multiplicities(spin_spin_formula(t, name, cap), observed, t)
        status = compare(predicted, observed)["status"]
        summands = ", ".join(f"B({w.pretty()})" for w in observed.summands)
        print(f"{t} second factor {name:5}: {summands}  [{status}]")

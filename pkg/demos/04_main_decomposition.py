"""Tensor product of two typical crystals: search, closed form and the explicit family list."""

from supercrystal import compare
from supercrystal.verification import example_decomposition

for name, cap in (("D41", 8), ("D21", 10)):
    t, observed, theorem, listed = example_decomposition(name, cap)
    print(f"{t}, cap {cap}: {len(observed.summands)} summands")
    print("  closed form vs search:", compare(theorem, observed)["status"])
    print("  family list vs search:", compare(listed, observed)["status"])
    lowest = sorted(observed.summands, key=lambda w: (w.n0, w))[:6]
    print("  lowest levels:", ", ".join(f"B({w.pretty()})" for w in lowest))

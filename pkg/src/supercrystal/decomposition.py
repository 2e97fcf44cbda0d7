"""Closed-form decompositions of spin squares, B(omega_0), typical crystals and their
tensor products, plus the engine that compares them with the crystal search.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .classical_crystal import decompose_classical_tensor, realize_classical_crystal
from .roots import AlgebraType, ClassicalWeight, Weight, cartan_matrix, lift, root_expansion, xi
from .summary import DecompositionSummary
from .super_crystal import (
    SuperComponentLabel,
    build_omega0,
    component_character,
    convolve,
    word_weight,
)

__all__ = [
    "DecompositionSummary",
    "spin_spin_formula",
    "omega0_table",
    "omega0_formula",
    "a_value",
    "classical_components",
    "typical_structure_formula",
    "main_theorem",
    "compare",
    "typical_character",
    "predicted_multiplicities",
]


def _omega(i: int, t: AlgebraType, coeff: int = 1) -> Weight:
    c = [0] * (t.n + 1)
    c[i] = coeff
    return Weight(c)


def spin_spin_formula(t: AlgebraType, second: str = "plus", cap: int = 6) -> DecompositionSummary:
    """Summands of B(-omega_N) (x) B(-omega_N), or (x) B(-omega_{N-1}) when second == 'minus'."""
    if second not in ("plus", "minus"):
        raise ValueError("second factor must be 'plus' or 'minus'")
    n = t.n
    summands = []
    if t.family == "B":
        if second != "plus":
            raise ValueError("family B has a single spin module")
        summands.append(_omega(n, t, -2))
        summands.extend(_omega(j, t, -1) for j in range(1, n))
        summands.extend(_omega(0, t, m) for m in range(1, cap + 1))
    else:
        odd_pair = second == "minus"
        if odd_pair:
            summands.append(_omega(n, t, -1) + _omega(n - 1, t, -1))
        else:
            summands.append(_omega(n, t, -2))
        parity = (n + (1 if odd_pair else 0)) % 2
        summands.extend(_omega(k, t, -1) for k in range(1, n - 1) if k % 2 == parity)
        # the trivial classical piece k = 0 is present exactly when parity == 0; its
        # omega_0 series then starts at 1, otherwise at 2
        start = 1 if parity == 0 else 2
        summands.extend(_omega(0, t, m) for m in range(start, cap + 1, 2))
    return DecompositionSummary([w for w in summands if w.n0 <= cap], cap, cap)


def omega0_table(t: AlgebraType) -> list:
    """(nu, first level) pairs: B(omega_0) holds B(nu; z + 2n) for every n >= 0."""
    n = t.n
    rows = []
    if t.family == "D":
        rows += [(-xi(0, t), 1), (-xi(0, t), 2 * n + 1)]
        for k in range(1, n):
            rows += [(-xi(k, t), k), (-xi(k, t), 2 * n - k)]
        rows += [(-xi(n, t), n), (-xi(n, t, prime=True), n)]
    else:
        rows += [(-xi(0, t), 1), (-xi(0, t), 2 * n + 2)]
        for k in range(1, n + 1):
            rows += [(-xi(k, t), k), (-xi(k, t), 2 * n - k + 1)]
    return rows


def omega0_formula(t: AlgebraType, cap: int) -> list:
    out = []
    for nu, z in omega0_table(t):
        out.extend(SuperComponentLabel(nu, level) for level in range(z, cap + 1, 2))
    return sorted(out)


def a_value(mu: ClassicalWeight, first: ClassicalWeight, second: ClassicalWeight, t: AlgebraType) -> int:
    """omega_0 gain of the component mu inside B(first) (x) B(second).

    The seed is u_first (x) u_j with wt(u_j) = mu - first; the gain is the number of
    raising steps along simple roots joined to the odd node, read off from the
    simple-root expansion of wt(u_j) - second.
    """
    coeffs = root_expansion(mu - first - second, t)
    if any(c.denominator != 1 or c < 0 for c in coeffs):
        raise ValueError(f"{mu.pretty()} is not a component of the given product")
    row = cartan_matrix(t)[0]
    return int(sum(row[j + 1] * coeffs[j] for j in range(t.n)))


@lru_cache(maxsize=None)
def classical_components(first: ClassicalWeight, second: ClassicalWeight, t: AlgebraType) -> tuple:
    """Lowest weights (with repetition) of B(first) (x) B(second), by graph search."""
    comps = decompose_classical_tensor(
        [realize_classical_crystal(first, t), realize_classical_crystal(second, t)]
    )
    return tuple(sorted(c.label for c in comps))


def typical_structure_formula(lam: Weight, t: AlgebraType, cap: int) -> list:
    """Classical components B(mu; level) of the typical crystal B(lam), levels <= cap."""
    if lam.n0 < 1:
        raise ValueError("typical structure needs n_0 >= 1")
    lam_cl = lam.classical
    offset = lam.n0 - 1
    out = []
    for nu, z in omega0_table(t):
        for mu in classical_components(nu, lam_cl, t):
            start = z + a_value(mu, nu, lam_cl, t) + offset
            out.extend(SuperComponentLabel(mu, level) for level in range(start, cap + 1, 2))
    return sorted(out)


def main_theorem(lam_prime: Weight, lam: Weight, t: AlgebraType, cap: int) -> DecompositionSummary:
    """Summands of B(lam' + omega_0) (x) B(lam + omega_0) for lam, lam' with n_0 = 0."""
    if lam.n0 != 0 or lam_prime.n0 != 0:
        raise ValueError("lam and lam' must have zero omega_0 coefficient")
    lam_cl, lamp_cl = lam.classical, lam_prime.classical
    summands = []
    for nu, z in omega0_table(t):
        for mu in classical_components(nu, lam_cl, t):
            a1 = a_value(mu, nu, lam_cl, t)
            for mu_k in classical_components(lamp_cl, mu, t):
                a2 = a_value(mu_k, lamp_cl, mu, t)
                start = z + a1 + a2 + 1
                summands.extend(lift(mu_k, level) for level in range(start, cap + 1, 2))
    return DecompositionSummary(summands, cap, cap)


# --- characters ------------------------------------------------------------


@lru_cache(maxsize=None)
def _omega0_character(t: AlgebraType, cap: int) -> Counter:
    return build_omega0(t, max(cap, 1)).character(cap)


@lru_cache(maxsize=None)
def _classical_character(lam_cl: ClassicalWeight, t: AlgebraType) -> Counter:
    crystal = realize_classical_crystal(lam_cl, t)
    out: Counter = Counter()
    for u in crystal.vertices:
        out[word_weight(tuple((s, 0) for s in u), t)] += 1
    return out


def typical_character(lam: Weight, t: AlgebraType, cap: int) -> Counter:
    """Character of B(lam), lam typical, from the product model B(omega_0) (x) B(lam_cl)."""
    if lam.n0 < 1:
        raise ValueError("typical character needs n_0 >= 1")
    base = cap - (lam.n0 - 1)
    if base < 1:
        return Counter()
    prod = convolve([_omega0_character(t, base), _classical_character(lam.classical, t)], base)
    shift = Weight((lam.n0 - 1,) + (0,) * t.n)
    return Counter({w + shift: m for w, m in prod.items()})


def predicted_multiplicities(summands, t: AlgebraType, cap: int, lowest_words=None) -> Counter:
    """Sum of summand characters; atypical summands need their lowest word in ``lowest_words``."""
    lookup: dict = {}
    for w in lowest_words or ():
        lookup.setdefault(word_weight(w, t), []).append(w)
    used: Counter = Counter()
    total: Counter = Counter()
    for lam in summands:
        if lam.n0 >= 1:
            total.update(typical_character(lam, t, cap))
        else:
            words = lookup.get(lam, [])
            if used[lam] >= len(words):
                raise ValueError(f"no lowest vertex supplied for atypical summand {lam.pretty()}")
            total.update(component_character(words[used[lam]], t, cap))
            used[lam] += 1
    return total


# --- comparison ------------------------------------------------------------


def compare(predicted: DecompositionSummary, observed: DecompositionSummary) -> dict:
    """Diff two summaries below their common completeness bound."""
    if predicted.cap != observed.cap:
        raise ValueError(f"caps differ: {predicted.cap} vs {observed.cap}")
    bound = min(predicted.complete_below, observed.complete_below)
    p = Counter(w for w in predicted.summands if w.n0 <= bound)
    o = Counter(w for w in observed.summands if w.n0 <= bound)
    missing = sorted((p - o).elements())
    extra = sorted((o - p).elements())
    mismatches = []
    if predicted.multiplicities and observed.multiplicities:
        keys = set(predicted.multiplicities) | set(observed.multiplicities)
        for w in sorted(k for k in keys if k.n0 <= bound):
            a = predicted.multiplicities.get(w, 0)
            b = observed.multiplicities.get(w, 0)
            if a != b:
                mismatches.append({"weight": w.to_json(), "predicted": a, "observed": b})
    status = "match" if not (missing or extra or mismatches) else "diff"
    return {
        "status": status,
        "missing": [w.to_json() for w in missing],
        "extra": [w.to_json() for w in extra],
        "multiplicity_mismatches": mismatches,
    }


def root_coefficients(diff: ClassicalWeight, t: AlgebraType) -> tuple:
    """Integer simple-root coefficients of a classical weight difference."""
    coeffs = root_expansion(diff, t)
    if any(Fraction(c).denominator != 1 for c in coeffs):
        raise ValueError("difference is not in the root lattice")
    return tuple(int(c) for c in coeffs)

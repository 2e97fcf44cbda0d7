"""Invariant suites shared by the command line, the tests and the acceptance run.

Each suite returns a ``SuiteResult`` with a pass flag and JSON-ready details.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .classical_crystal import decompose_classical_tensor, koga_component, spin_crystal
from .decomposition import (
    compare,
    main_theorem,
    omega0_formula,
    predicted_multiplicities,
    spin_spin_formula,
)
from .fixtures import d21_example_summands, d41_example_summands
from .roots import AlgebraType, Weight, simple_root
from .super_crystal import (
    TensorCrystal,
    build_omega0,
    crystal_for_weight,
    decompose_super,
    label_super_components,
    spin_module_crystal,
    zero_arrow_relations,
    zero_arrow_violations,
)
from .summary import DecompositionSummary

SUITES = ("axioms", "koga", "zero_arrows", "omega0", "spin_spin", "examples")


@dataclass
class SuiteResult:
    suite: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "details": self.details}


# --- axioms ----------------------------------------------------------------


def axiom_violations(crystal, vertices=None) -> list:
    """B4 and the weight step for indices 0..N, plus n_0 >= 0 on every vertex.

    ``vertices`` overrides the crystal's own vertex list, e.g. with a random sample.
    """
    t = crystal.type
    bad = []
    for w in crystal.vertices if vertices is None else vertices:
        wt = crystal.weight(w)
        if wt.n0 < 0:
            bad.append(("nonnegative_n0", w))
        for i in range(t.n + 1):
            down = crystal.f(i, w)
            if down is not None and crystal.e(i, down) != w:
                bad.append(("B4_f", w, i))
            up = crystal.e(i, w)
            if up is None:
                continue
            if crystal.f(i, up) != w:
                bad.append(("B4_e", w, i))
            if crystal.weight(up) != wt + simple_root(i, t):
                bad.append(("weight_step", w, i))
    return bad


def spin_square_factors(t: AlgebraType, cap: int) -> list:
    """The spin-square products of the family: both second-factor classes for D."""
    first = spin_module_crystal(t, cap)
    if t.family == "B":
        return [("plus", [first, spin_module_crystal(t, cap)])]
    return [
        ("plus", [first, spin_module_crystal(t, cap)]),
        ("minus", [first, spin_module_crystal(t, cap, odd=True)]),
    ]


def axioms_suite(t: AlgebraType, cap: int) -> SuiteResult:
    crystals = [spin_module_crystal(t, cap)]
    if t.family == "D":
        crystals.append(spin_module_crystal(t, cap, odd=True))
    if cap >= 1:
        crystals.append(build_omega0(t, cap))
    for _, factors in spin_square_factors(t, cap):
        crystals.append(TensorCrystal(factors, cap))
    details = {}
    ok = True
    for c in crystals:
        bad = axiom_violations(c)
        details[c.name] = {"vertices": len(c), "violations": len(bad)}
        ok = ok and not bad
    return SuiteResult("axioms", ok, details)


# --- classical suites -------------------------------------------------------


def koga_mismatches(t: AlgebraType, second: str | None) -> tuple:
    first = spin_crystal(t, "+" if t.family == "D" else None)
    other = spin_crystal(t, second)
    comps = decompose_classical_tensor([first, other])
    bad = []
    total = 0
    for c in comps:
        for w in c.vertices:
            total += 1
            if koga_component(w[0], w[1], t) != c.label:
                bad.append(w)
    return total, bad


def koga_suite(t: AlgebraType) -> SuiteResult:
    cases = ["+", "-"] if t.family == "D" else [None]
    details = {}
    ok = True
    for case in cases:
        total, bad = koga_mismatches(t, case)
        details[f"second={case or 'spin'}"] = {"pairs": total, "mismatches": len(bad)}
        ok = ok and not bad
    return SuiteResult("koga", ok, details)


# --- super suites ----------------------------------------------------------


def zero_arrow_suite(t: AlgebraType, cap: int) -> SuiteResult:
    details = {}
    ok = True
    for name, factors in spin_square_factors(t, cap):
        arrows = zero_arrow_relations(TensorCrystal(factors, cap).vertices, t)
        bad = zero_arrow_violations(arrows, t)
        details[name] = {
            "arrows": len(arrows),
            "violations": [
                {"source": a.source.pretty(t), "target": a.target.pretty(t), "side": a.side, "why": why}
                for a, why in bad
            ],
        }
        ok = ok and not bad
    return SuiteResult("zero_arrows", ok, details)


def omega0_labels(t: AlgebraType, cap: int) -> list:
    labels, _ = label_super_components(build_omega0(t, cap).vertices, t)
    return sorted(lab for lab in labels if lab.level <= cap)


def omega0_suite(t: AlgebraType, cap: int) -> SuiteResult:
    observed = Counter(omega0_labels(t, cap))
    predicted = Counter(omega0_formula(t, cap))
    missing = sorted((predicted - observed).elements())
    extra = sorted((observed - predicted).elements())
    details = {
        "labels": sum(observed.values()),
        "missing": [lab.pretty(t) for lab in missing],
        "extra": [lab.pretty(t) for lab in extra],
    }
    return SuiteResult("omega0", not missing and not extra, details)


def with_predicted_multiplicities(pred: DecompositionSummary, obs: DecompositionSummary, t) -> DecompositionSummary:
    """Fill in the formula's per-weight table from summand characters.

    Atypical summands have no product model, so their characters are read from
    the components found by the search.
    """
    mults = predicted_multiplicities(pred.summands, t, pred.cap, getattr(obs, "lowest_words", ()))
    pred.multiplicities = dict(mults)
    return pred


def spin_spin_reports(t: AlgebraType, cap: int) -> dict:
    out = {}
    for name, factors in spin_square_factors(t, cap):
        obs = decompose_super(factors, cap)
        pred = with_predicted_multiplicities(spin_spin_formula(t, name, cap), obs, t)
        out[name] = compare(pred, obs)
    return out


def spin_spin_suite(t: AlgebraType, cap: int) -> SuiteResult:
    reports = spin_spin_reports(t, cap)
    return SuiteResult("spin_spin", all(r["status"] == "match" for r in reports.values()), reports)


def example_decomposition(name: str, cap: int) -> tuple:
    """(observed, theorem, explicit list) for the two worked examples."""
    if name == "D21":
        t = AlgebraType("D", 2)
        lam, lam_p = Weight.from_standard(0, (3, 3)), Weight.from_standard(0, (1, 1))
        listed = d21_example_summands((3, 3), (1, 1), cap)
    elif name == "D41":
        t = AlgebraType("D", 4)
        lam, lam_p = Weight.zero(4), Weight.from_standard(0, (0, 0, 0, 1))
        listed = d41_example_summands(cap)
    else:
        raise ValueError(f"unknown example {name!r}")
    w0 = Weight((1,) + (0,) * t.n)
    factors = [crystal_for_weight(lam_p + w0, t, cap), crystal_for_weight(lam + w0, t, cap)]
    obs = decompose_super(factors, cap)
    theorem = with_predicted_multiplicities(main_theorem(lam_p, lam, t, cap), obs, t)
    listed = with_predicted_multiplicities(DecompositionSummary(listed, cap, cap), obs, t)
    return t, obs, theorem, listed


def examples_suite(cap_d21: int = 12, cap_d41: int = 8) -> SuiteResult:
    details = {}
    ok = True
    for name, cap in (("D21", cap_d21), ("D41", cap_d41)):
        _, obs, theorem, listed = example_decomposition(name, cap)
        r1, r2 = compare(theorem, obs), compare(listed, obs)
        details[name] = {"cap": cap, "theorem": r1, "listed": r2}
        ok = ok and r1["status"] == "match" and r2["status"] == "match"
    return SuiteResult("examples", ok, details)


def truncation_stable(build, cap: int, step: int = 2) -> list:
    """Weights with n_0 <= cap whose multiplicity changes when the cap grows by ``step``."""
    low = build(cap).multiplicities
    high = build(cap + step).multiplicities
    return [w for w in set(low) | set(high) if w.n0 <= cap and low.get(w, 0) != high.get(w, 0)]


def run_suite(suite: str, t: AlgebraType, cap: int) -> SuiteResult:
    if suite == "axioms":
        return axioms_suite(t, cap)
    if suite == "koga":
        return koga_suite(t)
    if suite == "zero_arrows":
        return zero_arrow_suite(t, cap)
    if suite == "omega0":
        return omega0_suite(t, max(cap, 1))
    if suite == "spin_spin":
        return spin_spin_suite(t, cap)
    if suite == "examples":
        return examples_suite()
    raise ValueError(f"unknown suite {suite!r}")

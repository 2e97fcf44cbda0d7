from collections import Counter, deque

import pytest

from supercrystal.classical_crystal import decompose_classical_tensor, realize_classical_crystal
from supercrystal.decomposition import (
    a_value,
    classical_components,
    compare,
    main_theorem,
    omega0_formula,
    predicted_multiplicities,
    root_coefficients,
    spin_spin_formula,
    typical_structure_formula,
)
from supercrystal.fixtures import d21_example_summands, d41_example_summands
from supercrystal.roots import AlgebraType, ClassicalWeight, Weight, cartan_matrix, xi
from supercrystal.summary import DecompositionSummary
from supercrystal.super_crystal import (
    build_omega0,
    crystal_for_weight,
    decompose_super,
    label_super_components,
    spin_module_crystal,
    typical_model,
)
from supercrystal.verification import spin_square_factors, with_predicted_multiplicities

D4 = AlgebraType("D", 4)


def omega(i, t, c=1):
    w = [0] * (t.n + 1)
    w[i] = c
    return Weight(w)


def test_spin_spin_examples():
    got = spin_spin_formula(D4, "plus", 5).summands
    assert sorted(got) == sorted([-omega(4, D4, 2), -omega(2, D4), omega(0, D4), omega(0, D4, 3), omega(0, D4, 5)])
    b3 = AlgebraType("B", 3)
    got = spin_spin_formula(b3, "plus", 3).summands
    expected = [-omega(3, b3, 2), -omega(1, b3), -omega(2, b3), omega(0, b3), omega(0, b3, 2), omega(0, b3, 3)]
    assert sorted(got) == sorted(expected)


def test_spin_spin_d5_both_classes():
    # the even-parity second factor gives -2w5 with -w1, -w3 and even w0 levels;
    # the odd one gives -w5-w4 with -w2 and odd w0 levels
    d5 = AlgebraType("D", 5)
    plus = spin_spin_formula(d5, "plus", 6).summands
    minus = spin_spin_formula(d5, "minus", 6).summands
    assert sorted(plus) == sorted([-omega(5, d5, 2), -omega(1, d5), -omega(3, d5)] + [omega(0, d5, m) for m in (2, 4, 6)])
    assert sorted(minus) == sorted([-omega(5, d5) - omega(4, d5), -omega(2, d5)] + [omega(0, d5, m) for m in (1, 3, 5)])


@pytest.mark.parametrize("t", [AlgebraType(f, n) for f in "DB" for n in (2, 3, 4, 5)], ids=str)
def test_spin_spin_formula_matches_search(t):
    cap = 6 if t.n < 5 else 4
    for name, factors in spin_square_factors(t, cap):
        obs = decompose_super(factors, cap)
        pred = with_predicted_multiplicities(spin_spin_formula(t, name, cap), obs, t)
        assert compare(pred, obs)["status"] == "match"


def test_spin_spin_rejects_bad_class():
    with pytest.raises(ValueError):
        spin_spin_formula(AlgebraType("B", 3), "minus", 4)
    with pytest.raises(ValueError):
        spin_spin_formula(D4, "odd", 4)


def levels(labels, nu):
    return sorted(lab.level for lab in labels if lab.classical == nu)


def test_omega0_formula_examples():
    labels = omega0_formula(D4, 10)
    assert levels(labels, -xi(1, D4)) == [1, 3, 5, 7, 7, 9, 9]
    assert levels(labels, -xi(0, D4)) == [1, 3, 5, 7, 9, 9]
    b2 = AlgebraType("B", 2)
    assert levels(omega0_formula(b2, 7), -xi(2, b2)) == [2, 3, 4, 5, 6, 7]


@pytest.mark.parametrize("t", [AlgebraType("D", 3), D4, AlgebraType("B", 2), AlgebraType("B", 3)], ids=str)
def test_omega0_formula_matches_search(t):
    cap = 8
    labels, _ = label_super_components(build_omega0(t, cap).vertices, t)
    assert Counter(lab for lab in labels if lab.level <= cap) == Counter(omega0_formula(t, cap))


def test_a_value_examples():
    lam4 = ClassicalWeight((0, 0, 0, -1))
    assert a_value(ClassicalWeight((0, 0, -1, 0)), lam4, -xi(1, D4), D4) == 1
    assert a_value(ClassicalWeight((-1, 0, 0, -1)), lam4, -xi(1, D4), D4) == 0
    d2 = AlgebraType("D", 2)
    first, second = ClassicalWeight((-1, -1)), ClassicalWeight((-3, -3))
    for j in range(2):
        for k in range(2):
            mu = ClassicalWeight((-(4 - 2 * j), -(4 - 2 * k)))
            assert a_value(mu, first, second, d2) == j + k


def test_a_value_rejects_non_component():
    with pytest.raises(ValueError):
        a_value(ClassicalWeight((0, 0, 0, 1)), ClassicalWeight.zero(4), ClassicalWeight.zero(4), D4)


def path_counts(first, second, t):
    """(label, weighted count of odd-adjacent raising steps, a_value) per component."""
    row = cartan_matrix(t)[0]
    c1, c2 = realize_classical_crystal(first, t), realize_classical_crystal(second, t)
    cut = len(c1.lowest)
    dist = {c2.lowest: 0}
    queue = deque([c2.lowest])
    while queue:
        w = queue.popleft()
        for i in range(1, t.n + 1):
            x = c2.e(i, w)
            if x is not None and x not in dist:
                dist[x] = dist[w] + row[i]
                queue.append(x)
    out = []
    for comp in decompose_classical_tensor([c1, c2]):
        assert comp.lowest[:cut] == c1.lowest
        out.append((comp.label, dist[comp.lowest[cut:]], a_value(comp.label, first, second, t)))
    return out


@pytest.mark.parametrize(
    "t,first,second",
    [
        (D4, (0, 0, 0, -1), (-1, 0, 0, 0)),
        (D4, (0, -1, 0, 0), (0, 0, -1, 0)),
        (AlgebraType("D", 2), (-1, -1), (-3, -3)),
        (AlgebraType("D", 3), (-1, 0, -1), (0, -1, -1)),
        (AlgebraType("B", 3), (0, 0, -1), (-1, 0, -1)),
    ],
)
def test_a_value_is_path_count(t, first, second):
    for label, count, a in path_counts(ClassicalWeight(first), ClassicalWeight(second), t):
        assert count == a, label


def test_typical_structure_trivial_classical_part():
    for t in (AlgebraType("D", 3), AlgebraType("B", 2)):
        assert typical_structure_formula(omega(0, t), t, 8) == omega0_formula(t, 8)


@pytest.mark.parametrize(
    "t,lam",
    [(D4, (1, 0, 0, 0, -1)), (AlgebraType("D", 3), (2, -1, 0, 0)), (AlgebraType("B", 2), (1, 0, -1))],
    ids=str,
)
def test_typical_structure_matches_search(t, lam):
    lam = Weight(lam)
    cap = 7
    labels, _ = label_super_components(typical_model(lam, t, cap).vertices, t)
    formula = typical_structure_formula(lam, t, cap)
    assert Counter(lab for lab in labels if lab.level <= cap) == Counter(formula)
    for lab in formula:
        assert lab.level >= 0


def test_typical_structure_rejects_atypical():
    with pytest.raises(ValueError):
        typical_structure_formula(-omega(4, D4), D4, 4)


def theorem_vs_search(lam_prime, lam, t, cap):
    w0 = omega(0, t)
    factors = [crystal_for_weight(lam_prime + w0, t, cap), crystal_for_weight(lam + w0, t, cap)]
    obs = decompose_super(factors, cap)
    pred = with_predicted_multiplicities(main_theorem(lam_prime, lam, t, cap), obs, t)
    return pred, obs


def test_main_theorem_d21_list():
    t = AlgebraType("D", 2)
    cap = 9
    pred = main_theorem(Weight.from_standard(0, (1, 1)), Weight.from_standard(0, (3, 3)), t, cap)
    assert Counter(pred.summands) == Counter(d21_example_summands((3, 3), (1, 1), cap))
    with pytest.raises(ValueError):
        d21_example_summands((2, 2), (1, 1), cap)


def test_main_theorem_d41_list():
    pred = main_theorem(Weight.from_standard(0, (0, 0, 0, 1)), Weight.zero(4), D4, 8)
    assert Counter(pred.summands) == Counter(d41_example_summands(8))
    assert Weight((2, 0, 0, 0, -1)) in pred.summands
    assert Weight((5, 0, 0, 0, -3)) in pred.summands


@pytest.mark.parametrize(
    "t,lam_prime,lam,cap",
    [
        (AlgebraType("D", 2), (0, -1, -1), (0, -3, -3), 8),
        (AlgebraType("D", 3), (0, 0, 0, 0), (0, 0, 0, 0), 6),
        (AlgebraType("D", 3), (0, -1, 0, 0), (0, 0, 0, -1), 6),
        (AlgebraType("B", 2), (0, 0, -1), (0, -1, 0), 6),
        (AlgebraType("B", 3), (0, 0, 0, 0), (0, 0, 0, -1), 5),
    ],
    ids=str,
)
def test_main_theorem_matches_search(t, lam_prime, lam, cap):
    pred, obs = theorem_vs_search(Weight(lam_prime), Weight(lam), t, cap)
    assert compare(pred, obs)["status"] == "match"


def test_main_theorem_trivial_data():
    t = AlgebraType("D", 3)
    pred = main_theorem(Weight.zero(3), Weight.zero(3), t, 6)
    assert all(w.n0 >= 1 for w in pred.summands)
    with pytest.raises(ValueError):
        main_theorem(omega(0, t), Weight.zero(3), t, 6)


def test_compare_reports():
    t = AlgebraType("D", 3)
    sp = spin_module_crystal(t, 5)
    obs = decompose_super([sp, sp], 5)
    pred = with_predicted_multiplicities(spin_spin_formula(t, "plus", 5), obs, t)
    report = compare(pred, obs)
    assert report == {"status": "match", "missing": [], "extra": [], "multiplicity_mismatches": []}
    dropped = pred.summands[-1]
    smaller = DecompositionSummary(pred.summands[:-1], 5, 5)
    report = compare(smaller, obs)
    assert report["status"] == "diff"
    assert report["extra"] == [dropped.to_json()] and report["missing"] == []
    with pytest.raises(ValueError):
        compare(DecompositionSummary([], 4, 4), obs)


def test_character_identity_detects_wrong_summand():
    t = AlgebraType("D", 3)
    sp = spin_module_crystal(t, 5)
    obs = decompose_super([sp, sp], 5)
    good = spin_spin_formula(t, "plus", 5)
    assert predicted_multiplicities(good.summands, t, 5, obs.lowest_words) == obs.multiplicities
    bad = [w for w in good.summands if w != omega(0, t, 2)] + [omega(0, t, 3)]
    assert predicted_multiplicities(bad, t, 5, obs.lowest_words) != obs.multiplicities


def test_predicted_needs_atypical_words():
    with pytest.raises(ValueError):
        predicted_multiplicities([-omega(4, D4)], D4, 4, [])


def test_classical_components_and_root_coefficients():
    assert Counter(classical_components(ClassicalWeight((0, 0, 0, -1)), ClassicalWeight((0, 0, 0, -1)), D4)) == Counter(
        [-xi(0, D4), -xi(2, D4), -xi(4, D4)]
    )
    assert root_coefficients(ClassicalWeight((2, -1, 0, 0)), D4) == (1, 0, 0, 0)
    with pytest.raises(ValueError):
        root_coefficients(ClassicalWeight((0, 0, 0, 1)), D4)


def test_summary_json_round_trip():
    t = AlgebraType("D", 3)
    sp = spin_module_crystal(t, 4)
    obs = decompose_super([sp, sp], 4)
    back = DecompositionSummary.from_json(obs.to_json())
    assert back.summands == obs.summands and back.multiplicities == obs.multiplicities
    assert back.cap == obs.cap == back.complete_below

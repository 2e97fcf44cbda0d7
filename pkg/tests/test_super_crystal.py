import json
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supercrystal.roots import AlgebraType, ClassicalWeight, Weight, xi
from supercrystal.super_crystal import (
    SuperComponentLabel,
    SuperCrystal,
    TensorCrystal,
    allowed_zero_arrows,
    atom_kashiwara,
    atom_n0,
    atom_weight,
    binary_tensor_kashiwara,
    build_omega0,
    convolve,
    decompose_super,
    decompose_super_exhaustive,
    epsilon_phi,
    graph_from_json,
    graph_json,
    is_classical_lowest,
    is_lowest,
    is_valid_atom,
    label_super_components,
    shift,
    spin_module_crystal,
    tensor_kashiwara,
    to_dot,
    trivial_crystal,
    typical_model,
    typical_product_set,
    word_weight,
    zero_arrow_relations,
    zero_arrow_violations,
)
from supercrystal.verification import axiom_violations

D4 = AlgebraType("D", 4)
SMALL_TYPES = [AlgebraType(f, n) for f in "DB" for n in (2, 3)]


def omega(i, t, c=1):
    w = [0] * (t.n + 1)
    w[i] = c
    return Weight(w)


def test_atom_weights():
    assert atom_weight(("++++", 0), D4) == -omega(4, D4)
    assert atom_n0(("-++-", 0)) == 1
    for k in range(5):
        assert atom_n0(("+-+-", k + 1)) == atom_n0(("+-+-", k)) + 1


def test_atom_zero_operators():
    assert atom_kashiwara("e", 0, ("-++-", 0), D4) == ("+++-", 1)
    assert atom_kashiwara("e", 0, ("++++", 0), D4) is None
    for k in range(4):
        down = atom_kashiwara("f", 0, ("+-+-", k + 1), D4)
        assert down == ("--+-", k)
        assert atom_kashiwara("e", 0, down, D4) == ("+-+-", k + 1)
    assert atom_kashiwara("f", 0, ("+-+-", 0), D4) is None


def test_atom_validity():
    assert is_valid_atom(("++--", 0), D4) and not is_valid_atom(("++--", 1), D4)
    assert is_valid_atom(("++--", 1), D4, odd=True)
    assert is_valid_atom(("+-+", 1), AlgebraType("B", 3))


@pytest.mark.parametrize("t", SMALL_TYPES, ids=str)
def test_spin_module_atoms_are_valid(t):
    for a, in spin_module_crystal(t, 5).vertices:
        assert is_valid_atom(a, t)
    if t.family == "D":
        for a, in spin_module_crystal(t, 5, odd=True).vertices:
            assert is_valid_atom(a, t, odd=True)


def test_zero_operator_on_words():
    u, v = ("++++", 0), ("+-+-", 2)
    # <h_0, wt(u)> = 0, so f_0 passes to the right factor
    assert tensor_kashiwara("f", 0, (u, v), D4) == (u, ("--+-", 1))
    u2 = ("-+++", 0)
    assert tensor_kashiwara("f", 0, (u2, v), D4) is None
    assert tensor_kashiwara("e", 0, (u2, v), D4) == (("++++", 1), v)


def test_index_one_rule_on_words():
    left, right = ("-+++", 0), ("+-++", 0)
    # eps_1(left) = 0 <= phi_1(right), so e_1 acts on the right factor
    assert tensor_kashiwara("e", 1, (left, right), D4) == (left, ("-+++", 0))


def test_single_atom_delegates():
    for i in range(5):
        for d in "ef":
            a = ("+-+-", 2)
            expected = atom_kashiwara(d, i, a, D4)
            got = tensor_kashiwara(d, i, (a,), D4)
            assert got == (None if expected is None else (expected,))


def test_epsilon_phi_rejects_zero():
    with pytest.raises(ValueError):
        epsilon_phi(0, (("++++", 0),), D4)


def test_epsilon_phi_on_spin_atoms():
    for n in range(2, 6):
        t = AlgebraType("D", n)
        for a, in spin_module_crystal(t, 1).vertices:
            for i in range(1, n + 1):
                eps, phi = epsilon_phi(i, (a,), t)
                assert eps in (0, 1) and phi in (0, 1)


def atoms(t):
    return st.tuples(st.text("+-", min_size=t.n, max_size=t.n), st.integers(0, 3))


@given(st.sampled_from(SMALL_TYPES + [D4]), st.data())
@settings(max_examples=200, deadline=None)
def test_signature_rule_matches_binary_recursion(t, data):
    word = tuple(data.draw(st.lists(atoms(t), min_size=1, max_size=4)))
    i = data.draw(st.integers(0, t.n))
    d = data.draw(st.sampled_from("ef"))
    assert tensor_kashiwara(d, i, word, t) == binary_tensor_kashiwara(d, i, word, t)


@given(st.sampled_from(SMALL_TYPES), st.data())
@settings(max_examples=100, deadline=None)
def test_two_atom_string_lengths(t, data):
    word = (data.draw(atoms(t)), data.draw(atoms(t)))
    i = data.draw(st.integers(1, t.n))
    eps, phi = epsilon_phi(i, word, t)
    count, cur = 0, binary_tensor_kashiwara("e", i, word, t)
    while cur is not None:
        count, cur = count + 1, binary_tensor_kashiwara("e", i, cur, t)
    assert eps == count
    assert word_weight(word, t)[i] == phi - eps


def test_lowest_examples():
    assert is_lowest((("++++", 0),), D4)
    assert is_lowest((("++++", 0), ("----", 2)), D4)
    w = (("++++", 0), ("++--", 1))
    assert not is_lowest(w, D4)
    assert tensor_kashiwara("f", 0, w, D4) is not None


def test_spin_graph_layers():
    crystal = spin_module_crystal(D4, 2)
    assert len(crystal) == 24
    assert Counter(w[0][1] for w in crystal.vertices) == {0: 8, 1: 8, 2: 8}
    assert len(spin_module_crystal(D4, 0)) == 8
    assert not any(i == 0 for _, _, i in spin_module_crystal(D4, 0).edges())


@pytest.mark.parametrize("t", [AlgebraType(f, n) for f in "DB" for n in (2, 3, 4)], ids=str)
def test_axioms(t):
    cap = 4
    crystals = [spin_module_crystal(t, cap), build_omega0(t, cap), typical_model(omega(0, t) - omega(1, t), t, cap)]
    if t.family == "D":
        crystals.append(spin_module_crystal(t, cap, odd=True))
    crystals.append(TensorCrystal([spin_module_crystal(t, cap), spin_module_crystal(t, cap)], cap))
    for c in crystals:
        assert axiom_violations(c) == []


def test_axiom_checker_catches_wrong_weight():
    class Broken(SuperCrystal):
        def weight(self, w):
            return super().weight(w) + omega(1, self.type) * len(w[0][0].replace("+", ""))

    assert axiom_violations(Broken(D4, (("++++", 0),), 2))


def test_spin_square_d4():
    sp = spin_module_crystal(D4, 6)
    summary = decompose_super([sp, sp], 6)
    expected = [-omega(4, D4, 2), -omega(2, D4), omega(0, D4), omega(0, D4, 3), omega(0, D4, 5)]
    assert sorted(summary.summands) == sorted(expected)


def test_single_factor_and_trivial():
    sp = spin_module_crystal(D4, 4)
    assert decompose_super([sp], 4).summands == [-omega(4, D4)]
    triv = trivial_crystal(D4, 4)
    assert decompose_super([triv, triv], 4).summands == [Weight.zero(4)]
    with pytest.raises(ValueError):
        decompose_super([sp], -1)


@pytest.mark.parametrize("t", SMALL_TYPES, ids=str)
def test_seeded_matches_exhaustive(t):
    cap = 5
    factor_sets = [
        [spin_module_crystal(t, cap), spin_module_crystal(t, cap)],
        [build_omega0(t, cap), spin_module_crystal(t, cap)],
        [typical_model(omega(0, t) - omega(1, t), t, cap), spin_module_crystal(t, cap)],
    ]
    for factors in factor_sets:
        fast = decompose_super(factors, cap)
        slow = decompose_super_exhaustive(factors, cap)
        assert fast.summands == slow.summands
        assert fast.multiplicities == slow.multiplicities
        assert fast.lowest_words == slow.lowest_words


@pytest.mark.parametrize("t", SMALL_TYPES, ids=str)
def test_lowest_vertices_have_lowest_first_factor(t):
    cap = 5
    sp = spin_module_crystal(t, cap)
    first_lowest = {w for w in sp.vertices if is_lowest(w, t)}
    for factors in ([sp, sp], [sp, build_omega0(t, cap)]):
        for w in decompose_super_exhaustive(factors, cap).lowest_words:
            assert w[:1] in first_lowest


@pytest.mark.parametrize("t", SMALL_TYPES, ids=str)
def test_typical_first_factor_lowest_iff_classical_lowest(t):
    cap = 6
    first = typical_model(omega(0, t), t, cap)
    second = spin_module_crystal(t, cap)
    for v in second.vertices:
        w = first.seed + v
        if sum(a[1] for a in w) <= cap:
            assert is_lowest(w, t) == is_classical_lowest(w, t)


def test_component_labels_spin_d4():
    labels, membership = label_super_components(spin_module_crystal(D4, 3).vertices, D4)
    expected = [
        SuperComponentLabel(ClassicalWeight((0, 0, 0, -1)), 0),
        SuperComponentLabel(ClassicalWeight((0, 0, -1, 0)), 1),
        SuperComponentLabel(ClassicalWeight((0, 0, 0, -1)), 2),
        SuperComponentLabel(ClassicalWeight((0, 0, -1, 0)), 3),
    ]
    assert sorted(labels, key=lambda lab: lab.level) == expected
    assert len(membership) == 32


def test_one_vertex_label():
    labels, _ = label_super_components([()], D4)
    assert labels == [SuperComponentLabel(ClassicalWeight.zero(4), 0)]


def omega0_levels(t, cap, label):
    labels, _ = label_super_components(build_omega0(t, cap).vertices, t)
    return sorted(lab.level for lab in labels if lab.classical == label and lab.level <= cap)


def test_omega0_labels():
    assert omega0_levels(D4, 12, -xi(0, D4)) == [1, 3, 5, 7, 9, 9, 11, 11]
    assert omega0_levels(D4, 10, -xi(4, D4)) == [4, 6, 8, 10]
    assert omega0_levels(D4, 10, -xi(4, D4, prime=True)) == [4, 6, 8, 10]
    b3 = AlgebraType("B", 3)
    for k in range(4):
        z1, z2 = k if k else 1, 2 * 3 - k + 1 if k else 2 * 3 + 2
        expected = sorted(list(range(z1, 11, 2)) + list(range(z2, 11, 2)))
        assert omega0_levels(b3, 10, -xi(k, b3)) == expected


def test_zero_arrow_rules():
    rules = allowed_zero_arrows(D4)
    assert (-xi(3, D4), -xi(2, D4), "R", 1) in rules
    assert (-xi(0, D4), -xi(1, D4), "L", 2) in rules


@pytest.mark.parametrize("t", [AlgebraType("D", 3), D4, AlgebraType("B", 3)], ids=str)
def test_zero_arrows_allowed(t):
    cap = 5
    sp = spin_module_crystal(t, cap)
    arrows = zero_arrow_relations(TensorCrystal([sp, sp], cap).vertices, t)
    assert arrows
    assert zero_arrow_violations(arrows, t) == []
    assert all(a.first_level == 0 for a in arrows if a.side == "R")


def test_shift():
    t = AlgebraType("D", 3)
    crystal = typical_model(omega(0, t) - omega(1, t), t, 4)
    for w in crystal.vertices:
        s = shift(w, t)
        assert word_weight(s, t) == word_weight(w, t) + omega(0, t)
        for i in range(t.n + 1):
            for d in "ef":
                x = tensor_kashiwara(d, i, w, t)
                y = tensor_kashiwara(d, i, s, t)
                assert y == (None if x is None else shift(x, t))
    assert is_lowest(shift(crystal.seed, t), t)


@pytest.mark.parametrize("t", SMALL_TYPES, ids=str)
def test_typical_model_is_product(t):
    cap = 5
    for lam in (omega(0, t), omega(0, t) - omega(1, t), omega(0, t, 2) - omega(t.n, t)):
        crystal = typical_model(lam, t, cap)
        assert set(crystal.vertices) == typical_product_set(lam, t, cap)
        lows = [w for w in crystal.vertices if is_lowest(w, t)]
        assert lows == [crystal.seed]
        assert crystal.lowest_weight == lam


def test_typical_model_rejects_atypical():
    with pytest.raises(ValueError):
        typical_model(-omega(4, D4), D4, 3)


def test_convolve():
    a = Counter({Weight((0, 1)): 2, Weight((1, 0)): 1})
    b = Counter({Weight((1, 1)): 3})
    assert convolve([a, b], 5) == {Weight((1, 2)): 6, Weight((2, 1)): 3}
    assert convolve([a, b], 1) == {Weight((1, 2)): 6}


def test_truncation_stable():
    t = AlgebraType("D", 3)
    low = build_omega0(t, 5).character(5)
    high = build_omega0(t, 7).character(5)
    assert low == high


def test_dot_and_json():
    crystal = spin_module_crystal(D4, 2)
    dot = to_dot(crystal)
    assert "style=dashed" in dot and dot.startswith("digraph")
    data = json.loads(json.dumps(graph_json(crystal)))
    vertices, edges = graph_from_json(data)
    assert vertices == set(crystal.vertices)
    assert edges == set(crystal.edges())
    assert "style=dashed" not in to_dot(spin_module_crystal(D4, 0))

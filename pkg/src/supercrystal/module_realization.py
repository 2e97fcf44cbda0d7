"""Exact symbolic model of the lowest-weight module V(-omega_N) over Q(q).

Basis vectors are labelled by super spin atoms ``(signs, level)``.  With
q_0 = q^{l_0} the generators act by

    e_i, f_i (i >= 1)   coefficient-1 sign swaps,
    e_0 v(-,s)_k        = q_0^{-k} v(+,s)_{k+1},
    f_0 v(+,s)_{k+1}    = (q_0^{2k+2} - 1)/(q_0^2 - 1) v(-,s)_k,
    t_i                 = q^{l_i h_i},   sigma v(b)_k = (-1)^k v(b)_k.

The checkers below verify the defining relations, contravariance of the
polarization and stability of the crystal lattice, reporting exact defects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .classical_crystal import spin_elements, spin_kashiwara
from .qfield import ONE, ZERO, LaurentRational, evaluate_at_zero, is_in_A, q, q_binomial
from .roots import AlgebraType, cartan_matrix, root_data, simple_root
from .super_crystal import atom_kashiwara, atom_weight, is_valid_atom


class TruncationError(Exception):
    """An action produced a nonzero component above the truncation level."""


@dataclass
class ModuleVector:
    """Finite Q(q)-combination of basis labels; ``truncation`` bounds the allowed level."""

    terms: dict = field(default_factory=dict)
    truncation: int | None = None

    def __post_init__(self):
        self.terms = {b: c for b, c in self.terms.items() if not c.is_zero()}
        if self.truncation is not None:
            for b in self.terms:
                if b[1] > self.truncation:
                    raise TruncationError(f"level {b[1]} exceeds truncation {self.truncation}")

    @classmethod
    def basis(cls, label, truncation=None) -> "ModuleVector":
        return cls({label: ONE}, truncation)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for b, c in other.terms.items():
            out[b] = out.get(b, ZERO) + c
        return ModuleVector(out, _tighter(self.truncation, other.truncation))

    def __neg__(self):
        return ModuleVector({b: -c for b, c in self.terms.items()}, self.truncation)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ModuleVector":
        return ModuleVector({b: c * x for b, x in self.terms.items()}, self.truncation)

    def __eq__(self, other):
        return isinstance(other, ModuleVector) and self.terms == other.terms

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"[{c.render()}] v({b[0]})_{b[1]}" for b, c in sorted(self.terms.items()))


def _tighter(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _ratio(k: int, q0: LaurentRational) -> LaurentRational:
    """(q0^{2k} - 1)/(q0^2 - 1)."""
    return (q0 ** (2 * k) - 1) / (q0 ** 2 - 1)


class SpinModule:
    """V(-omega_N) with the action above; coefficient functions may be overridden for mutation tests."""

    def __init__(self, t: AlgebraType, e0_coefficient=None, f0_coefficient=None):
        self.type = t
        self.lvalues = root_data(t).lvalues
        self.q0 = q(self.lvalues[0])
        self.e0_coefficient = e0_coefficient or (lambda k: self.q0 ** (-k))
        self.f0_coefficient = f0_coefficient or (lambda k: _ratio(k + 1, self.q0))

    def labels(self, max_level: int) -> list:
        n = self.type.n
        out = []
        for k in range(max_level + 1):
            for s in spin_elements(self.type):
                if is_valid_atom((s, k), self.type):
                    out.append((s, k))
        assert all(len(s) == n for s, _ in out)
        return out

    def weight(self, label):
        return atom_weight(label, self.type)

    def _on_label(self, gen: str, i: int, label):
        """Image of one basis vector as a list of (label, coefficient)."""
        signs, k = label
        t = self.type
        if gen in ("e", "f") and i >= 1:
            new = spin_kashiwara(gen, i, signs, t)
            return [] if new is None else [((new, k), ONE)]
        if gen == "e":
            if signs[0] != "-":
                return []
            return [(("+" + signs[1:], k + 1), self.e0_coefficient(k))]
        if gen == "f":
            if signs[0] != "+" or k == 0:
                return []
            return [(("-" + signs[1:], k - 1), self.f0_coefficient(k - 1))]
        if gen == "t":
            return [(label, q(self.lvalues[i] * self.weight(label)[i]))]
        if gen == "tinv":
            return [(label, q(-self.lvalues[i] * self.weight(label)[i]))]
        if gen == "sigma":
            return [(label, ONE if k % 2 == 0 else -ONE)]
        raise ValueError(f"unknown generator {gen!r}")

    def act(self, gen: str, i: int, v: ModuleVector) -> ModuleVector:
        out: dict = {}
        for b, c in v.terms.items():
            for b2, c2 in self._on_label(gen, i, b):
                out[b2] = out.get(b2, ZERO) + c * c2
        return ModuleVector(out, v.truncation)

    def act_qh(self, h, v: ModuleVector) -> ModuleVector:
        """q^h for h = sum h[j] h_j in the coweight lattice."""
        out = {}
        for b, c in v.terms.items():
            wt = self.weight(b)
            out[b] = c * q(sum(h[j] * wt[j] for j in range(len(h))))
        return ModuleVector(out, v.truncation)

    def word(self, ops, v: ModuleVector) -> ModuleVector:
        """Apply a sequence of (gen, i), rightmost first."""
        for gen, i in reversed(ops):
            v = self.act(gen, i, v)
        return v

    def q_i(self, i: int) -> LaurentRational:
        return q(self.lvalues[i])


def act(module: SpinModule, gen: str, i: int, v: ModuleVector) -> ModuleVector:
    return module.act(gen, i, v)


# --- polarization ----------------------------------------------------------


def norm(label, module: SpinModule) -> LaurentRational:
    out = ONE
    for j in range(1, label[1] + 1):
        out = out * _ratio(j, module.q0)
    return out


def polarization(u: ModuleVector, v: ModuleVector, module: SpinModule) -> LaurentRational:
    out = ZERO
    small, big = (u, v) if len(u.terms) <= len(v.terms) else (v, u)
    for b, c in small.terms.items():
        d = big.terms.get(b)
        if d is not None:
            out = out + c * d * norm(b, module)
    return out


# --- checks ----------------------------------------------------------------


def _issue(relation, t, label, defect) -> dict:
    return {
        "relation": relation,
        "family": t.family,
        "N": t.n,
        "basisLabel": f"({label[0]})_{label[1]}",
        "defect": defect.render() if hasattr(defect, "render") else str(defect),
    }


@dataclass
class CheckReport:
    failures: list = field(default_factory=list)
    checked: int = 0
    boundary: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> list:
        return list(self.failures)


def _parity(i: int) -> int:
    return 1 if i == 0 else 0


def check_relations(t: AlgebraType, max_level: int, module: SpinModule | None = None) -> CheckReport:
    """Apply every defining relation to each basis vector with level <= max_level."""
    module = module or SpinModule(t)
    n = t.n
    a = cartan_matrix(t)
    report = CheckReport()

    def record(relation, label, fn):
        try:
            defect = fn()
        except TruncationError:
            report.boundary += 1
            return
        report.checked += 1
        if not defect.is_zero():
            report.failures.append(_issue(relation, t, label, defect))

    for label in module.labels(max_level):
        v = ModuleVector.basis(label, truncation=max_level)
        wt = module.weight(label)
        # q^h e_i q^{-h} = q^{<h, alpha_i>} e_i, tested on the basis h_0..h_N
        for i in range(n + 1):
            alpha = simple_root(i, t)
            for j in range(n + 1):
                h = [0] * (n + 1)
                h[j] = 1
                hneg = [-x for x in h]
                for gen, sgn in (("e", 1), ("f", -1)):
                    record(
                        "q_power_conjugation",
                        label,
                        lambda gen=gen, sgn=sgn, h=h, hneg=hneg, i=i, j=j, alpha=alpha: (
                            module.act_qh(h, module.act(gen, i, module.act_qh(hneg, v)))
                            - module.act(gen, i, v).scale(q(sgn * alpha[j]))
                        ),
                    )
        # e_i f_j - (-1)^{p(i)p(j)} f_j e_i = delta_ij [t_i]
        for i in range(n + 1):
            for j in range(n + 1):
                sign = -1 if _parity(i) * _parity(j) else 1

                def ef(i=i, j=j, sign=sign):
                    lhs = module.word([("e", i), ("f", j)], v) - module.word([("f", j), ("e", i)], v).scale(
                        LaurentRational.const(sign)
                    )
                    if i != j:
                        return lhs
                    qi = module.q_i(i)
                    ti = q(module.lvalues[i] * wt[i])
                    return lhs - v.scale((ti - ti.inverse()) / (qi - qi.inverse()))

                record("ef_commutator", label, ef)
        # Serre relations for 1 <= i <= N, j != i
        for i in range(1, n + 1):
            qi = module.q_i(i)
            for j in range(n + 1):
                if i == j:
                    continue
                m = 1 + abs(a[i][j])
                for gen, name in (("e", "serre_e"), ("f", "serre_f")):
                    def serre(i=i, j=j, m=m, gen=gen, qi=qi):
                        total = ModuleVector({}, v.truncation)
                        for nu in range(m + 1):
                            ops = [(gen, i)] * (m - nu) + [(gen, j)] + [(gen, i)] * nu
                            coeff = q_binomial(m, nu, qi) * (-1 if nu % 2 else 1)
                            total = total + module.word(ops, v).scale(coeff)
                        return total

                    record(name, label, serre)
        record("odd_square_e", label, lambda: module.word([("e", 0), ("e", 0)], v))
        record("odd_square_f", label, lambda: module.word([("f", 0), ("f", 0)], v))
        record("parity_involution", label, lambda: module.word([("sigma", 0), ("sigma", 0)], v) - v)
        for i in range(n + 1):
            for gen in ("e", "f"):
                sign = -1 if _parity(i) else 1
                record(
                    "parity_conjugation",
                    label,
                    lambda i=i, gen=gen, sign=sign: (
                        module.word([("sigma", 0), (gen, i), ("sigma", 0)], v)
                        - module.act(gen, i, v).scale(LaurentRational.const(sign))
                    ),
                )
    return report


def eta(module: SpinModule, gen: str, i: int, v: ModuleVector) -> ModuleVector:
    """The anti-automorphism eta applied to e_i or f_i, acting on v."""
    qi = module.q_i(i)
    if gen == "e":
        return module.act("f", i, module.act("tinv", i, v)).scale(qi)
    return module.act("t", i, module.act("e", i, v)).scale(qi.inverse())


def check_polarization_contravariance(t: AlgebraType, max_level: int, module: SpinModule | None = None) -> CheckReport:
    """(a u, v) = (u, eta(a) v) for a = e_i, f_i and all basis u, v up to max_level."""
    module = module or SpinModule(t)
    labels = module.labels(max_level)
    report = CheckReport()
    basis = {b: ModuleVector.basis(b) for b in labels}
    for i in range(t.n + 1):
        for gen in ("e", "f"):
            moved = {b: module.act(gen, i, basis[b]) for b in labels}
            pulled = {b: eta(module, gen, i, basis[b]) for b in labels}
            for bu, bv in product(labels, labels):
                lhs = polarization(moved[bu], basis[bv], module)
                rhs = polarization(basis[bu], pulled[bv], module)
                report.checked += 1
                if lhs != rhs:
                    report.failures.append(_issue(f"contravariance_{gen}{i}", t, bu, lhs - rhs))
    for b in labels:
        value = polarization(basis[b], basis[b], module)
        report.checked += 1
        if not is_in_A(value) or evaluate_at_zero(value) != 1:
            report.failures.append(_issue("polarization_at_zero", t, b, value))
    return report


def kashiwara_on_module(module: SpinModule, direction: str, i: int, u: ModuleVector) -> ModuleVector:
    """Kashiwara operators on the module: index 0 by q_0^{-1} t_0 e_0 and f_0, others by strings."""
    if i == 0:
        if direction == "e":
            return module.act("t", 0, module.act("e", 0, u)).scale(module.q0.inverse())
        return module.act("f", 0, u)
    upper = module.act("e", i, u)
    if not module.act("e", i, upper).is_zero():
        raise RuntimeError("i-strings longer than one step")
    lower = u - module.act("f", i, upper)
    if not module.act("e", i, lower).is_zero():
        raise RuntimeError("string decomposition failed")
    if direction == "e":
        return upper
    qi = module.q_i(i)
    second = module.act("f", i, module.act("f", i, upper)).scale((qi + qi.inverse()).inverse())
    return module.act("f", i, lower) + second


def check_crystal_lattice(t: AlgebraType, max_level: int, module: SpinModule | None = None) -> CheckReport:
    """Kashiwara operators preserve the A-lattice and reduce at q = 0 to the atom rules."""
    module = module or SpinModule(t)
    report = CheckReport()
    for label in module.labels(max_level):
        u = ModuleVector.basis(label)
        for i in range(t.n + 1):
            for direction in ("e", "f"):
                image = kashiwara_on_module(module, direction, i, u)
                report.checked += 1
                expected = atom_kashiwara(direction, i, label, t)
                for b, c in image.terms.items():
                    if not is_in_A(c):
                        report.failures.append(_issue(f"lattice_{direction}{i}", t, label, c))
                reduced = {b: evaluate_at_zero(c) for b, c in image.terms.items() if is_in_A(c)}
                reduced = {b: c for b, c in reduced.items() if c != 0}
                want = {} if expected is None else {expected: 1}
                if reduced != want:
                    report.failures.append(_issue(f"reduction_{direction}{i}", t, label, image))
    return report

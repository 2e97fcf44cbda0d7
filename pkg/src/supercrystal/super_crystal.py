"""Crystals of the superalgebras D(N,1) and B(N,1) built from super spin atoms.

An atom is a pair ``(signs, level)``: a sign string of length N and a level
k >= 0.  Vertices are words (tuples of atoms).  Every crystal here is infinite,
so it is handled through a level cap: the total level of a word never exceeds
its omega_0 coefficient, hence everything at weights with n_0 <= cap is exact.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .classical_crystal import (
    lowest_seed,
    realize_classical_crystal,
    spin_eps_phi,
    spin_kashiwara,
    spin_weight,
)
from .roots import AlgebraType, ClassicalWeight, Weight, xi, xi_names
from .summary import DecompositionSummary
from .tensor_rule import binary_apply, signature_apply


# --- atoms -----------------------------------------------------------------


def atom_n0(atom) -> int:
    signs, level = atom
    return level if signs[0] == "+" else level + 1


@lru_cache(maxsize=None)
def atom_weight(atom, t: AlgebraType) -> Weight:
    return Weight((atom_n0(atom),) + tuple(spin_weight(atom[0], t)))


def atom_kashiwara(direction: str, i: int, atom, t: AlgebraType):
    signs, level = atom
    if i == 0:
        if direction == "e":
            return ("+" + signs[1:], level + 1) if signs[0] == "-" else None
        if signs[0] == "+" and level > 0:
            return ("-" + signs[1:], level - 1)
        return None
    new = spin_kashiwara(direction, i, signs, t)
    return None if new is None else (new, level)


def is_valid_atom(atom, t: AlgebraType, odd: bool = False) -> bool:
    """Membership in B(-omega_N) (or B(-omega_{N-1}) when ``odd``, family D only)."""
    signs, level = atom
    if len(signs) != t.n or level < 0 or set(signs) - {"+", "-"}:
        return False
    if t.family == "B":
        return not odd
    return (level - signs.count("-") - (1 if odd else 0)) % 2 == 0


def atom_label(atom) -> str:
    return f"({atom[0]})_{atom[1]}"


# --- words -----------------------------------------------------------------


def word_weight(word, t: AlgebraType) -> Weight:
    total = Weight.zero(t.n)
    for a in word:
        total = total + atom_weight(a, t)
    return total


def word_level(word) -> int:
    return sum(a[1] for a in word)


def _zero_target(word) -> int:
    # left association: the 0-operator passes to the right only across factors with n_0 = 0
    for j in range(len(word) - 1):
        if atom_n0(word[j]) > 0:
            return j
    return len(word) - 1


def _ops(t):
    def op(direction, i, atom):
        return atom_kashiwara(direction, i, atom, t)
    return op


def tensor_kashiwara(direction: str, i: int, word: tuple, t: AlgebraType):
    """Kashiwara operator on a word; None stands for 0.  The empty word is B(0)."""
    if not word:
        return None
    if i == 0:
        j = _zero_target(word)
        new = atom_kashiwara(direction, 0, word[j], t)
        return None if new is None else word[:j] + (new,) + word[j + 1:]
    return signature_apply(word, direction, i, _ops(t), lambda a, k: spin_eps_phi(a[0], k, t))


def binary_tensor_kashiwara(direction: str, i: int, word: tuple, t: AlgebraType):
    """The two-factor rule applied literally to the left-associated word (cross-check)."""
    if i != 0:
        return binary_apply(word, direction, i, _ops(t))
    if len(word) == 1:
        new = atom_kashiwara(direction, 0, word[0], t)
        return None if new is None else (new,)
    left, right = word[:-1], word[-1:]
    if word_weight(left, t).n0 == 0:
        new = binary_tensor_kashiwara(direction, 0, right, t)
        return None if new is None else left + new
    new = binary_tensor_kashiwara(direction, 0, left, t)
    return None if new is None else new + right


def epsilon_phi(i: int, word: tuple, t: AlgebraType) -> tuple:
    if i == 0:
        raise ValueError("string lengths are only used for indices 1..N")
    eps = phi = 0
    cur = tensor_kashiwara("e", i, word, t)
    while cur is not None:
        eps += 1
        cur = tensor_kashiwara("e", i, cur, t)
    cur = tensor_kashiwara("f", i, word, t)
    while cur is not None:
        phi += 1
        cur = tensor_kashiwara("f", i, cur, t)
    return eps, phi


def is_lowest(word, t: AlgebraType) -> bool:
    return all(tensor_kashiwara("f", i, word, t) is None for i in range(t.n + 1))


def is_classical_lowest(word, t: AlgebraType) -> bool:
    return all(tensor_kashiwara("f", i, word, t) is None for i in range(1, t.n + 1))


def zero_side(word) -> int:
    """Position of the atom an index-0 operator acts on."""
    return _zero_target(word)


# --- truncated crystals ----------------------------------------------------


def raising_closure(seed: tuple, t: AlgebraType, cap: int) -> set:
    """All words reachable from ``seed`` by raising operators without exceeding the level cap."""
    if word_level(seed) > cap:
        return set()
    seen = {seed}
    queue = deque([seed])
    n = t.n
    while queue:
        w = queue.popleft()
        for i in range(n + 1):
            x = tensor_kashiwara("e", i, w, t)
            if x is not None and x not in seen and word_level(x) <= cap:
                seen.add(x)
                queue.append(x)
    return seen


class SuperCrystal:
    """A lowest-weight crystal generated from ``seed``, truncated at total level ``cap``."""

    def __init__(self, t: AlgebraType, seed: tuple, cap: int, name: str = ""):
        if cap < 0:
            raise ValueError("cap must be non-negative")
        self.type = t
        self.seed = seed
        self.cap = cap
        self.name = name or word_weight(seed, t).pretty()
        self.vertices = tuple(sorted(raising_closure(seed, t, cap)))
        self._vset = frozenset(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, w):
        return w in self._vset

    def __iter__(self):
        return iter(self.vertices)

    @property
    def lowest_weight(self) -> Weight:
        return word_weight(self.seed, self.type)

    def at_cap(self, cap: int) -> "SuperCrystal":
        if cap == self.cap:
            return self
        return SuperCrystal(self.type, self.seed, cap, self.name)

    def e(self, i: int, w):
        return tensor_kashiwara("e", i, w, self.type)

    def f(self, i: int, w):
        return tensor_kashiwara("f", i, w, self.type)

    def weight(self, w) -> Weight:
        return word_weight(w, self.type)

    def edges(self):
        """(source, target, i) with target = f_i(source); f never raises the level."""
        for w in self.vertices:
            for i in range(self.type.n + 1):
                x = self.f(i, w)
                if x is not None:
                    yield (w, x, i)

    def character(self, max_n0: int | None = None) -> Counter:
        limit = self.cap if max_n0 is None else max_n0
        out: Counter = Counter()
        for w in self.vertices:
            wt = self.weight(w)
            if wt.n0 <= limit:
                out[wt] += 1
        return out


def spin_module_crystal(t: AlgebraType, cap: int, odd: bool = False) -> SuperCrystal:
    """B(-omega_N), or B(-omega_{N-1}) for family D when ``odd``."""
    n = t.n
    if odd:
        if t.family != "D":
            raise ValueError("B(-omega_{N-1}) is a spin module only for family D")
        return SuperCrystal(t, (("+" * (n - 1) + "-", 0),), cap, name=f"B(-w{n - 1})")
    return SuperCrystal(t, (("+" * n, 0),), cap, name=f"B(-w{n})")


def omega0_seed(t: AlgebraType) -> tuple:
    return (("+" * t.n, 0), ("-" * t.n, 0))


def build_omega0(t: AlgebraType, cap: int) -> SuperCrystal:
    """B(omega_0) as the component of (+..+)_0 (x) (-..-)_0 inside a spin square."""
    if cap < 1:
        raise ValueError("B(omega_0) needs cap >= 1")
    return SuperCrystal(t, omega0_seed(t), cap, name="B(w0)")


def shift(word: tuple, t: AlgebraType) -> tuple:
    """b -> b (x) u_{omega_0}: adds omega_0 to the weight and commutes with all operators."""
    return word + omega0_seed(t)


def classical_atoms(lam: ClassicalWeight, t: AlgebraType) -> tuple:
    """The lowest vector of the classical crystal of weight lam, as level-0 atoms."""
    return tuple((s, 0) for s in lowest_seed(lam, t))


def typical_model(lam: Weight, t: AlgebraType, cap: int) -> SuperCrystal:
    """B(lam) for typical lam: B(omega_0) (x) B(lam_cl), shifted n_0 - 1 times."""
    if lam.n0 < 1:
        raise ValueError(f"{lam.pretty()} is atypical; typical models need n_0 >= 1")
    seed = omega0_seed(t) + classical_atoms(lam.classical, t)
    for _ in range(lam.n0 - 1):
        seed = shift(seed, t)
    return SuperCrystal(t, seed, cap, name=f"B({lam.pretty()})")


def typical_product_set(lam: Weight, t: AlgebraType, cap: int) -> set:
    """The vertex set of the typical model as a literal product of its two factors."""
    omega = build_omega0(t, cap)
    cl = realize_classical_crystal(lam.classical, t)
    tail = ()
    for _ in range(lam.n0 - 1):
        tail = tail + omega0_seed(t)
    return {b + tuple((s, 0) for s in u) + tail for b in omega.vertices for u in cl.vertices}


def crystal_for_weight(lam: Weight, t: AlgebraType, cap: int) -> SuperCrystal:
    """A model of B(lam) for the weights this package can realize."""
    n = t.n
    if lam.n0 >= 1:
        return typical_model(lam, t, cap)
    if lam == Weight.zero(n):
        return trivial_crystal(t, cap)
    if lam == Weight((0,) * n + (-1,)):
        return spin_module_crystal(t, cap)
    if t.family == "D" and lam == Weight((0,) * (n - 1) + (-1, 0)):
        return spin_module_crystal(t, cap, odd=True)
    raise ValueError(f"no crystal model for the atypical weight {lam.pretty()}")


def trivial_crystal(t: AlgebraType, cap: int) -> SuperCrystal:
    """The one-vertex crystal B(0), realized as the empty word."""
    return SuperCrystal(t, (), cap, name="B(0)")


# --- decompositions --------------------------------------------------------


def _product_lowest(factors, cap):
    """Lowest vertices of the tensor product, seeded by lowest vertices of the prefix."""
    t = factors[0].type
    lows = [factors[0].seed] if word_level(factors[0].seed) <= cap else []
    for fac in factors[1:]:
        nxt = []
        for low in lows:
            room = cap - word_level(low)
            for v in fac.vertices:
                if word_level(v) <= room:
                    w = low + v
                    if is_lowest(w, t):
                        nxt.append(w)
        lows = nxt
    return lows


def convolve(chars, limit: int) -> Counter:
    out: Counter = Counter({None: 1})
    for ch in chars:
        nxt: Counter = Counter()
        for w1, m1 in out.items():
            for w2, m2 in ch.items():
                w = w2 if w1 is None else w1 + w2
                if w.n0 <= limit:
                    nxt[w] += m1 * m2
        out = nxt
    return out


def decompose_super(factors, cap: int) -> DecompositionSummary:
    """Lowest weights of the components of a tensor product, exact at n_0 <= cap."""
    if cap < 0:
        raise ValueError("cap must be non-negative")
    if not factors:
        raise ValueError("need at least one factor")
    t = factors[0].type
    factors = [f.at_cap(cap) for f in factors]
    lows = _product_lowest(factors, cap)
    summands = [word_weight(w, t) for w in lows]
    summands = [w for w in summands if w.n0 <= cap]
    mults = convolve([f.character(cap) for f in factors], cap)
    summary = DecompositionSummary(summands, cap, cap, dict(mults))
    summary.lowest_words = sorted(w for w in lows if word_weight(w, t).n0 <= cap)
    return summary


def product_vertices(factors, cap: int) -> list:
    """Every word of the tensor product whose total level is at most cap."""
    factors = [f.at_cap(cap) for f in factors]
    out = []
    for parts in product(*(f.vertices for f in factors)):
        w = sum(parts, ())
        if word_level(w) <= cap:
            out.append(w)
    out.sort()
    return out


class TensorCrystal:
    """Tensor product of truncated crystals: every concatenated word of total level <= cap."""

    def __init__(self, factors, cap: int):
        if cap < 0:
            raise ValueError("cap must be non-negative")
        self.type = factors[0].type
        self.factors = [f.at_cap(cap) for f in factors]
        self.cap = cap
        self.name = " (x) ".join(f.name for f in self.factors)
        self.vertices = tuple(product_vertices(self.factors, cap))
        self._vset = frozenset(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, w):
        return w in self._vset

    def __iter__(self):
        return iter(self.vertices)

    def at_cap(self, cap: int) -> "TensorCrystal":
        return self if cap == self.cap else TensorCrystal(self.factors, cap)

    def e(self, i: int, w):
        return tensor_kashiwara("e", i, w, self.type)

    def f(self, i: int, w):
        return tensor_kashiwara("f", i, w, self.type)

    def weight(self, w) -> Weight:
        return word_weight(w, self.type)

    edges = SuperCrystal.edges
    character = SuperCrystal.character


def decompose_super_exhaustive(factors, cap: int) -> DecompositionSummary:
    """Same as ``decompose_super`` but scans every product vertex (small cases only)."""
    t = factors[0].type
    verts = product_vertices(factors, cap)
    lows = [w for w in verts if is_lowest(w, t)]
    summands = [word_weight(w, t) for w in lows if word_weight(w, t).n0 <= cap]
    mults: Counter = Counter()
    for w in verts:
        wt = word_weight(w, t)
        if wt.n0 <= cap:
            mults[wt] += 1
    summary = DecompositionSummary(summands, cap, cap, dict(mults))
    summary.lowest_words = sorted(w for w in lows if word_weight(w, t).n0 <= cap)
    return summary


def component_character(lowest: tuple, t: AlgebraType, cap: int) -> Counter:
    """Character (at n_0 <= cap) of the component generated from a lowest vertex."""
    out: Counter = Counter()
    for w in raising_closure(lowest, t, cap):
        wt = word_weight(w, t)
        if wt.n0 <= cap:
            out[wt] += 1
    return out


# --- classical components inside super crystals ----------------------------


@dataclass(frozen=True, order=True)
class SuperComponentLabel:
    """A classical component with lowest weight ``classical`` whose lowest vertex has n_0 = ``level``."""

    classical: ClassicalWeight
    level: int

    def pretty(self, t: AlgebraType | None = None) -> str:
        name = None
        if t is not None:
            name = xi_names(t).get(self.classical)
        return f"B({name or self.classical.pretty()}; {self.level})"


def _classical_component(start, t, allowed):
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(1, t.n + 1):
            for d in ("e", "f"):
                x = tensor_kashiwara(d, i, w, t)
                if x is not None and x not in seen:
                    if x not in allowed:
                        raise RuntimeError("classical component leaves the truncated set")
                    seen.add(x)
                    queue.append(x)
    return seen


def label_super_components(vertices, t: AlgebraType):
    """Split vertices into classical components; returns (labels, vertex -> label index)."""
    allowed = frozenset(vertices)
    membership: dict = {}
    labels = []
    for w in sorted(allowed):
        if w in membership:
            continue
        comp = _classical_component(w, t, allowed)
        lows = [x for x in comp if is_classical_lowest(x, t)]
        if len(lows) != 1:
            raise RuntimeError(f"classical component with {len(lows)} lowest vertices")
        wt = word_weight(lows[0], t)
        idx = len(labels)
        labels.append(SuperComponentLabel(wt.classical, wt.n0))
        for x in comp:
            membership[x] = idx
    return labels, membership


@dataclass(frozen=True, order=True)
class ZeroArrow:
    source: SuperComponentLabel
    target: SuperComponentLabel
    side: str
    first_level: int


def zero_arrow_relations(vertices, t: AlgebraType) -> set:
    """Every index-0 arrow of a two-atom crystal, summarized by labels and side."""
    labels, membership = label_super_components(vertices, t)
    out = set()
    for w in vertices:
        x = tensor_kashiwara("f", 0, w, t)
        if x is None:
            continue
        side = "R" if zero_side(w) == len(w) - 1 else "L"
        out.add(ZeroArrow(labels[membership[w]], labels[membership[x]], side, w[0][1]))
    return out


def allowed_zero_arrows(t: AlgebraType) -> list:
    """(source Xi, target Xi, side, level drop) rules of the index-0 connection lemma."""
    n = t.n
    rules = []

    def add(src, tgt, side, drop):
        rules.append((-src, -tgt, side, drop))

    tops = [xi(n, t)] + ([xi(n, t, prime=True)] if t.family == "D" else [])
    for k in range(2, n + 1):
        for src in (tops if k == n else [xi(k, t)]):
            add(src, xi(k - 1, t), "R", 1)
    add(xi(1, t), xi(0, t), "R", 0)
    upper = n - 1 if t.family == "D" else n
    for k in range(2, upper + 1):
        add(xi(k - 1, t), xi(k, t), "L", 1)
    add(xi(0, t), xi(1, t), "L", 2)
    if t.family == "D":
        for top in tops:
            add(top, xi(n - 1, t), "L", 1)
            add(xi(n - 1, t), top, "L", 1)
    else:
        add(xi(n, t), xi(n, t), "L", 1)
    return rules


def zero_arrow_violations(arrows, t: AlgebraType) -> list:
    rules = set(allowed_zero_arrows(t))
    bad = []
    for arrow in arrows:
        key = (arrow.source.classical, arrow.target.classical, arrow.side,
               arrow.source.level - arrow.target.level)
        if key not in rules:
            bad.append((arrow, "not an allowed relation"))
        elif arrow.side == "R" and arrow.first_level != 0:
            bad.append((arrow, "right-side arrow with nonzero first level"))
    return bad


# --- export ----------------------------------------------------------------


def to_dot(crystal: SuperCrystal) -> str:
    ids = {w: f"v{j}" for j, w in enumerate(crystal.vertices)}
    lines = [f'digraph "{crystal.name}" {{', "  rankdir=LR;"]
    for w, vid in ids.items():
        label = " x ".join(atom_label(a) for a in w) or "empty"
        lines.append(f'  {vid} [label="{label}"];')
    for src, tgt, i in crystal.edges():
        style = ", style=dashed" if i == 0 else ""
        lines.append(f'  {ids[src]} -> {ids[tgt]} [label="{i}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_json(crystal: SuperCrystal) -> dict:
    def enc(w):
        return [[a[0], a[1]] for a in w]

    return {
        "type": {"family": crystal.type.family, "n": crystal.type.n},
        "cap": crystal.cap,
        "name": crystal.name,
        "vertices": [enc(w) for w in crystal.vertices],
        "edges": [{"source": enc(s), "target": enc(d), "index": i} for s, d, i in crystal.edges()],
    }


def graph_from_json(data: dict):
    """Vertex set and edge set (as hashable words) from ``graph_json`` output."""
    def dec(w):
        return tuple((a[0], a[1]) for a in w)

    vertices = {dec(w) for w in data["vertices"]}
    edges = {(dec(e["source"]), dec(e["target"]), e["index"]) for e in data["edges"]}
    return vertices, edges

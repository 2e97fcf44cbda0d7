"""Spin crystals of D(N) and B(N), their tableau description, and tensor decompositions.

A spin element is a string over '+' and '-' of length N; '+'*N is the lowest
vector.  Classical crystal vertices are words: tuples of spin elements, acted on
by the reversed tensor rule of ``tensor_rule``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .roots import AlgebraType, ClassicalWeight, xi
from .tensor_rule import signature_apply


def spin_elements(t: AlgebraType, parity: str | None = None) -> list:
    """All sign vectors, restricted to a D-parity class ('+' even, '-' odd) if given."""
    out = []
    for signs in product("+-", repeat=t.n):
        s = "".join(signs)
        if parity is not None:
            if t.family != "D":
                raise ValueError("parity classes exist only for family D")
            if (s.count("-") % 2 == 0) != (parity == "+"):
                continue
        out.append(s)
    return sorted(out)


def spin_parity(s: str) -> str:
    return "+" if s.count("-") % 2 == 0 else "-"


def spin_kashiwara(direction: str, i: int, b: str, t: AlgebraType):
    """Apply e_i or f_i to a sign vector; None stands for 0."""
    n = t.n
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    if i < n:
        pair = b[i - 1:i + 1]
        if direction == "f":
            return b[:i - 1] + "+-" + b[i + 1:] if pair == "-+" else None
        return b[:i - 1] + "-+" + b[i + 1:] if pair == "+-" else None
    if t.family == "D":
        pair = b[n - 2:]
        if direction == "f":
            return b[:n - 2] + "++" if pair == "--" else None
        return b[:n - 2] + "--" if pair == "++" else None
    if direction == "f":
        return b[:n - 1] + "+" if b[n - 1] == "-" else None
    return b[:n - 1] + "-" if b[n - 1] == "+" else None


@lru_cache(maxsize=None)
def spin_weight(b: str, t: AlgebraType) -> ClassicalWeight:
    """Classical weight in the Lambda basis: <h_i, wt> = phi_i - eps_i."""
    out = []
    for i in range(1, t.n + 1):
        phi = 1 if spin_kashiwara("f", i, b, t) is not None else 0
        eps = 1 if spin_kashiwara("e", i, b, t) is not None else 0
        out.append(phi - eps)
    return ClassicalWeight(out)


@lru_cache(maxsize=None)
def spin_eps_phi(b: str, i: int, t: AlgebraType) -> tuple:
    return (
        1 if spin_kashiwara("e", i, b, t) is not None else 0,
        1 if spin_kashiwara("f", i, b, t) is not None else 0,
    )


# --- tableau description -------------------------------------------------
# letters are ints: a > 0 stands for a, -a stands for a-bar


def letter_key(x: int, n: int) -> int:
    return x if x > 0 else 2 * n + 1 + x


def precedes(x: int, y: int, t: AlgebraType) -> bool:
    n = t.n
    if t.family == "D" and {x, y} == {n, -n}:
        return False
    return letter_key(x, n) < letter_key(y, n)


def preceq(x: int, y: int, t: AlgebraType) -> bool:
    return x == y or precedes(x, y, t)


def letter_str(x: int) -> str:
    return str(x) if x > 0 else f"{-x}bar"


def to_tableau(b: str) -> tuple:
    n = len(b)
    letters = [i + 1 if s == "+" else -(i + 1) for i, s in enumerate(b)]
    return tuple(sorted(letters, key=lambda x: letter_key(x, n)))


def is_valid_column(col, t: AlgebraType) -> bool:
    n = t.n
    if any(not (1 <= abs(x) <= n) for x in col):
        return False
    if any(not precedes(col[r], col[r + 1], t) for r in range(len(col) - 1)):
        return False
    absolute = [abs(x) for x in col]
    return len(set(absolute)) == len(absolute)


def from_tableau(col, t: AlgebraType) -> str:
    if len(col) != t.n or not is_valid_column(col, t):
        raise ValueError(f"malformed column {col}")
    signs = ["?"] * t.n
    for x in col:
        signs[abs(x) - 1] = "+" if x > 0 else "-"
    return "".join(signs)


@dataclass(frozen=True)
class SkewTableau:
    """Right column a_1..a_N, left column b_1..b_N, with k two-box rows."""

    right: tuple
    left: tuple
    k: int


def is_semistandard_skew(tab: SkewTableau, t: AlgebraType) -> bool:
    a, b, k = tab.right, tab.left, tab.k
    n = len(a)
    if not (is_valid_column(a, t) and is_valid_column(b, t)):
        return False
    return all(preceq(b[r - 1], a[n - k + r - 1], t) for r in range(1, k + 1))


def _split_ok(u: str, v: str, k: int, t: AlgebraType) -> bool:
    return is_semistandard_skew(SkewTableau(to_tableau(u), to_tableau(v), k), t)


def koga_component(u: str, v: str, t: AlgebraType) -> ClassicalWeight:
    """Lowest weight of the component of u (x) v in a product of two spin crystals."""
    n = t.n
    if t.family == "D":
        if spin_parity(u) != "+":
            raise ValueError("the first factor must lie in the even spin crystal")
        same = spin_parity(v) == "+"
        top = n if same else n - 1
        for k in range(top % 2, top - 1, 2):
            if _split_ok(u, v, k, t) and not _split_ok(u, v, k + 2, t):
                return -xi(k, t)
        if _split_ok(u, v, top, t):
            return -xi(top, t)
    else:
        for k in range(n):
            if _split_ok(u, v, k, t) and not _split_ok(u, v, k + 1, t):
                return -xi(k, t)
        if _split_ok(u, v, n, t):
            return -xi(n, t)
    raise ValueError(f"no tableau split classifies {u} (x) {v}")


# --- words and classical crystals -----------------------------------------


def _spin_op(t):
    def op(direction, i, atom):
        return spin_kashiwara(direction, i, atom, t)
    return op


def word_kashiwara(direction: str, i: int, word: tuple, t: AlgebraType):
    return signature_apply(word, direction, i, _spin_op(t), lambda a, j: spin_eps_phi(a, j, t))


def word_weight(word: tuple, t: AlgebraType) -> ClassicalWeight:
    total = ClassicalWeight.zero(t.n)
    for s in word:
        total = total + spin_weight(s, t)
    return total


class ClassicalCrystal:
    """A finite classical crystal whose vertices are words of sign vectors."""

    def __init__(self, t: AlgebraType, vertices, name: str = ""):
        self.type = t
        self.vertices = tuple(sorted(vertices))
        self.name = name
        self._vset = frozenset(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, w):
        return w in self._vset

    def __iter__(self):
        return iter(self.vertices)

    def e(self, i: int, w):
        return word_kashiwara("e", i, w, self.type)

    def f(self, i: int, w):
        return word_kashiwara("f", i, w, self.type)

    def weight(self, w) -> ClassicalWeight:
        return word_weight(w, self.type)

    def is_lowest(self, w) -> bool:
        return all(self.f(i, w) is None for i in range(1, self.type.n + 1))

    def lowest_vertices(self) -> list:
        return [w for w in self.vertices if self.is_lowest(w)]

    def edges(self):
        """(source, target, i) with target = f_i(source)."""
        for w in self.vertices:
            for i in range(1, self.type.n + 1):
                x = self.f(i, w)
                if x is not None:
                    yield (w, x, i)

    def character(self) -> dict:
        out: dict = {}
        for w in self.vertices:
            wt = self.weight(w)
            out[wt] = out.get(wt, 0) + 1
        return out


def spin_crystal(t: AlgebraType, parity: str | None = None) -> ClassicalCrystal:
    if t.family == "D" and parity is None:
        parity = "+"
    if t.family == "B":
        parity = None
    name = "spin" if parity is None else f"spin{parity}"
    return ClassicalCrystal(t, [(s,) for s in spin_elements(t, parity)], name=name)


@dataclass(frozen=True)
class ClassicalComponent:
    label: ClassicalWeight
    lowest: tuple
    size: int
    vertices: tuple


def _component_bfs(start, t, allowed=None):
    n = t.n
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(1, n + 1):
            for d in ("e", "f"):
                x = word_kashiwara(d, i, w, t)
                if x is not None and x not in seen:
                    if allowed is not None and x not in allowed:
                        raise RuntimeError("component leaves the vertex set")
                    seen.add(x)
                    queue.append(x)
    return seen


def decompose_classical_tensor(factors) -> list:
    """Connected components of the tensor product of the given classical crystals."""
    if not factors:
        raise ValueError("need at least one factor")
    t = factors[0].type
    words = [sum(parts, ()) for parts in product(*(f.vertices for f in factors))]
    words.sort()
    remaining = set(words)
    comps = []
    for w in words:
        if w not in remaining:
            continue
        comp = _component_bfs(w, t, allowed=remaining)
        remaining -= comp
        lows = [x for x in comp if all(word_kashiwara("f", i, x, t) is None for i in range(1, t.n + 1))]
        if len(lows) != 1:
            raise RuntimeError(f"component has {len(lows)} lowest vertices")
        low = lows[0]
        comps.append(ClassicalComponent(word_weight(low, t), low, len(comp), tuple(sorted(comp))))
    return comps


def lowest_seed(lam: ClassicalWeight, t: AlgebraType) -> tuple:
    """A word of spin lowest vectors whose weights add up to the antidominant weight lam."""
    if len(lam) != t.n:
        raise ValueError("weight has the wrong rank")
    if not lam.is_antidominant():
        raise ValueError(f"{lam.pretty()} is not antidominant")
    n = t.n
    plus = "+" * n
    word = []
    for i, c in enumerate(lam, start=1):
        for _ in range(-c):
            if i == n:
                word.append(plus)
            elif t.family == "D" and i == n - 1:
                word.append("+" * (n - 1) + "-")
            else:
                word.extend([plus, "+" * i + "-" * (n - i)])
    return tuple(word)


def raising_closure(seed: tuple, t: AlgebraType) -> set:
    seen = {seed}
    queue = deque([seed])
    while queue:
        w = queue.popleft()
        for i in range(1, t.n + 1):
            x = word_kashiwara("e", i, w, t)
            if x is not None and x not in seen:
                seen.add(x)
                queue.append(x)
    return seen


@lru_cache(maxsize=None)
def realize_classical_crystal(lam: ClassicalWeight, t: AlgebraType) -> ClassicalCrystal:
    seed = lowest_seed(lam, t)
    crystal = ClassicalCrystal(t, raising_closure(seed, t), name=f"B({lam.pretty()})")
    crystal.lowest = seed
    return crystal

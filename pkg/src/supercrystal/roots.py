"""Root data and weight arithmetic for the orthosymplectic superalgebras D(N,1) and B(N,1).

Weights live in the lattice spanned by the fundamental weights omega_0..omega_N.
A ``Weight`` stores its omega-coefficients as a tuple of ints, so that
``Weight((0, 0, 0, 0, -1))`` is -omega_4.  Orthogonal coordinates are taken in
the basis (delta, eps_1, ..., eps_N) and are exact ``Fraction`` vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, cached_property

import sympy

FAMILIES = ("D", "B")


class Weight(tuple):
    """Omega-basis coefficients (c_0, c_1, ..., c_N) of a superalgebra weight."""

    __slots__ = ()

    def __new__(cls, coeffs):
        return super().__new__(cls, (int(c) for c in coeffs))

    @classmethod
    def zero(cls, n: int) -> "Weight":
        return cls((0,) * (n + 1))

    @classmethod
    def from_standard(cls, n0: int, ns) -> "Weight":
        """Build n0*omega_0 - sum n_i*omega_i."""
        return cls((n0,) + tuple(-x for x in ns))

    @property
    def n0(self) -> int:
        return self[0]

    @property
    def classical(self) -> "ClassicalWeight":
        return ClassicalWeight(self[1:])

    def __add__(self, other):
        return Weight(a + b for a, b in zip(self, other, strict=True))

    def __sub__(self, other):
        return Weight(a - b for a, b in zip(self, other, strict=True))

    def __neg__(self):
        return Weight(-a for a in self)

    def __mul__(self, k):
        return Weight(a * k for a in self)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Weight({tuple(self)})"

    def to_json(self) -> dict:
        return {"omega": list(self)}

    @classmethod
    def from_json(cls, data: dict) -> "Weight":
        return cls(data["omega"])

    def pretty(self) -> str:
        return format_weight(self, "w", start=0)


class ClassicalWeight(tuple):
    """Lambda-basis coefficients (c_1, ..., c_N) of a weight of D(N) or B(N)."""

    __slots__ = ()

    def __new__(cls, coeffs):
        return super().__new__(cls, (int(c) for c in coeffs))

    @classmethod
    def zero(cls, n: int) -> "ClassicalWeight":
        return cls((0,) * n)

    def __add__(self, other):
        return ClassicalWeight(a + b for a, b in zip(self, other, strict=True))

    def __sub__(self, other):
        return ClassicalWeight(a - b for a, b in zip(self, other, strict=True))

    def __neg__(self):
        return ClassicalWeight(-a for a in self)

    def __mul__(self, k):
        return ClassicalWeight(a * k for a in self)

    __rmul__ = __mul__

    def __repr__(self):
        return f"ClassicalWeight({tuple(self)})"

    def is_antidominant(self) -> bool:
        return all(c <= 0 for c in self)

    def pretty(self) -> str:
        return format_weight(self, "L", start=1)


def format_weight(coeffs, symbol: str, start: int) -> str:
    parts = []
    for idx, c in enumerate(coeffs, start=start):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        parts.append(f"{sign}{mag}{symbol}{idx}")
    if not parts:
        return "0"
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


def classical_restriction(lam: Weight) -> ClassicalWeight:
    return lam.classical


def lift(cl: ClassicalWeight, n0: int) -> Weight:
    return Weight((n0,) + tuple(cl))


@dataclass(frozen=True)
class AlgebraType:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 2:
            raise ValueError("rank N must be at least 2")

    def __str__(self):
        return f"{self.family}({self.n},1)"

    @property
    def is_d(self) -> bool:
        return self.family == "D"

    @cached_property
    def data(self) -> "RootData":
        return root_data(self)


def cartan_matrix(t: AlgebraType) -> tuple:
    """Cartan matrix (a_ij), i, j = 0..N, written out from the Dynkin pattern."""
    n = t.n
    a = [[0] * (n + 1) for _ in range(n + 1)]
    a[0][1] = 1
    a[1][0] = -1
    for i in range(1, n + 1):
        a[i][i] = 2
    if t.family == "D":
        # type D_N on nodes 1..N: a chain 1..N-1 with N attached to N-2
        for i in range(1, n - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        if n == 2:
            # D(2,1): both nodes 1 and 2 hang off the odd node
            a[0][2] = 1
            a[2][0] = -1
        else:
            a[n - 2][n] = a[n][n - 2] = -1
    else:
        for i in range(1, n - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        a[n - 1][n] = -1
        a[n][n - 1] = -2
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class RootData:
    type: AlgebraType
    cartan: tuple
    parity: tuple
    lvalues: tuple
    form_diag: tuple
    simple_roots: tuple
    even_positive: tuple
    odd_positive: tuple
    odd_bar: tuple
    rho: tuple
    fundamental: tuple


def _frac(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def _vec(n, entries):
    v = [Fraction(0)] * (n + 1)
    for idx, c in entries:
        v[idx] += Fraction(c)
    return tuple(v)


@lru_cache(maxsize=None)
def root_data(t: AlgebraType) -> RootData:
    n = t.n
    d = 0  # index of delta; eps_i sits at index i

    simple = [_vec(n, [(d, 1), (1, -1)])]
    for i in range(1, n):
        simple.append(_vec(n, [(i, 1), (i + 1, -1)]))
    if t.family == "D":
        simple.append(_vec(n, [(n - 1, 1), (n, 1)]))
        lvals = (1,) + (-1,) * n
        form = (Fraction(1),) + (Fraction(-1),) * n
    else:
        simple.append(_vec(n, [(n, 1)]))
        lvals = (2,) + (-2,) * (n - 1) + (-1,)
        # the printed Cartan matrix requires the form doubled relative to D
        form = (Fraction(2),) + (Fraction(-2),) * n

    even, odd, odd_bar = [], [], []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            even.append(_vec(n, [(i, 1), (j, -1)]))
            even.append(_vec(n, [(i, 1), (j, 1)]))
    even.append(_vec(n, [(d, 2)]))
    for i in range(1, n + 1):
        odd.append(_vec(n, [(d, 1), (i, 1)]))
        odd.append(_vec(n, [(d, 1), (i, -1)]))
    if t.family == "B":
        for i in range(1, n + 1):
            even.append(_vec(n, [(i, 1)]))
        odd.append(_vec(n, [(d, 1)]))
    for i in range(1, n + 1):
        for s1 in (1, -1):
            for s2 in (1, -1):
                odd_bar.append(_vec(n, [(d, s1), (i, s2)]))

    rho = tuple(
        sum((b[k] for b in even), Fraction(0)) - sum((b[k] for b in odd), Fraction(0))
        for k in range(n + 1)
    )

    # fundamental weights by duality: l_i <h_i, w_j> = (alpha_i, w_j) with <h_i, w_j> = delta_ij
    rows = [[simple[i][k] * form[k] for k in range(n + 1)] for i in range(n + 1)]
    mat = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows])
    rhs = sympy.diag(*[lvals[i] for i in range(n + 1)])
    sol = mat.LUsolve(rhs)
    fundamental = tuple(tuple(_frac(sol[k, j]) for k in range(n + 1)) for j in range(n + 1))

    return RootData(
        type=t,
        cartan=cartan_matrix(t),
        parity=(1,) + (0,) * n,
        lvalues=lvals,
        form_diag=form,
        simple_roots=tuple(simple),
        even_positive=tuple(even),
        odd_positive=tuple(odd),
        odd_bar=tuple(odd_bar),
        rho=rho,
        fundamental=fundamental,
    )


def form(x, y, t: AlgebraType) -> Fraction:
    """Diagonal bilinear form on orthogonal coordinate vectors."""
    diag = root_data(t).form_diag
    return sum((a * b * g for a, b, g in zip(x, y, diag)), Fraction(0))


def to_orthogonal(w: Weight, t: AlgebraType) -> tuple:
    fund = root_data(t).fundamental
    n = t.n
    out = [Fraction(0)] * (n + 1)
    for j, c in enumerate(w):
        if c:
            for k in range(n + 1):
                out[k] += c * fund[j][k]
    return tuple(out)


def from_orthogonal(x, t: AlgebraType) -> Weight:
    """Inverse of ``to_orthogonal``; rejects vectors outside the weight lattice."""
    rd = root_data(t)
    coeffs = []
    for i in range(t.n + 1):
        val = form(rd.simple_roots[i], x, t) / rd.lvalues[i]
        if val.denominator != 1:
            raise ValueError(f"vector {x} is not an integral weight")
        coeffs.append(int(val))
    return Weight(coeffs)


def pairing(i: int, w: Weight) -> int:
    """<h_i, w>; the h_i are dual to the omega basis."""
    return w[i]


def bilinear(a: Weight, b: Weight, t: AlgebraType) -> Fraction:
    return form(to_orthogonal(a, t), to_orthogonal(b, t), t)


def simple_root(i: int, t: AlgebraType) -> Weight:
    """alpha_i as a weight: its omega coefficients are column i of the Cartan matrix."""
    a = cartan_matrix(t)
    return Weight(a[k][i] for k in range(t.n + 1))


def classical_simple_root(i: int, t: AlgebraType) -> ClassicalWeight:
    a = cartan_matrix(t)
    return ClassicalWeight(a[k][i] for k in range(1, t.n + 1))


def is_typical(lam: Weight, t: AlgebraType) -> bool:
    rd = root_data(t)
    x = to_orthogonal(lam, t)
    shifted = tuple(a - b for a, b in zip(x, rd.rho))
    return all(form(shifted, beta, t) != 0 for beta in rd.odd_bar)


@lru_cache(maxsize=None)
def _classical_cartan_inverse(t: AlgebraType):
    a = cartan_matrix(t)
    n = t.n
    # column j of the classical Cartan block is alpha_j in the Lambda basis
    mat = sympy.Matrix([[a[k][j] for j in range(1, n + 1)] for k in range(1, n + 1)])
    return mat.inv()


def root_expansion(diff: ClassicalWeight, t: AlgebraType) -> tuple:
    """Coefficients c_1..c_N with diff = sum c_j alpha_j (classical simple roots)."""
    inv = _classical_cartan_inverse(t)
    vec = sympy.Matrix(list(diff))
    sol = inv * vec
    return tuple(_frac(sol[k]) for k in range(t.n))


def xi(k: int, t: AlgebraType, prime: bool = False) -> ClassicalWeight:
    """The classical weight Xi_k (or Xi_N' when ``prime``) labelling spin-square components."""
    n = t.n
    c = [0] * n
    if prime:
        if t.family != "D" or k != n:
            raise ValueError("Xi' exists only as Xi_N' for family D")
        c[n - 2] = 2
        return ClassicalWeight(c)
    if not 0 <= k <= n:
        raise ValueError("k out of range")
    if k == 0:
        return ClassicalWeight(c)
    if t.family == "D":
        if k <= n - 2:
            c[k - 1] = 1
        elif k == n - 1:
            c[n - 2] = c[n - 1] = 1
        else:
            c[n - 1] = 2
    else:
        if k <= n - 1:
            c[k - 1] = 1
        else:
            c[n - 1] = 2
    return ClassicalWeight(c)


def xi_names(t: AlgebraType) -> dict:
    """Map each -Xi label (as a ClassicalWeight) to a printable name."""
    names = {}
    for k in range(t.n + 1):
        names[-xi(k, t)] = f"-Xi{k}"
    if t.family == "D":
        names[-xi(t.n, t, prime=True)] = f"-Xi{t.n}'"
    return names

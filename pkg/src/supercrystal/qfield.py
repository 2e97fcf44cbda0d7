"""Exact arithmetic in Q(q): Laurent polynomials and their quotients.

Values are kept in a canonical form q^m * N(q) / D(q) where N, D are integer
polynomials, D(0) != 0, D has positive leading coefficient and gcd(N, D) = 1.
All powers of q are pushed into the numerator, which is therefore stored as a
sparse Laurent polynomial {exponent: coefficient}.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_gcd
from sympy.polys.densearith import dup_exquo


class LaurentPoly:
    """Sparse integer Laurent polynomial in q."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {0: terms} if terms else {}
        self.terms = {e: c for e, c in terms.items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def leading_coeff(self) -> int:
        return self.terms[self.max_exp()]

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def scale(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e: c * k for e, c in self.terms.items()})

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def to_dense(self) -> list:
        """Dense coefficient list, highest degree first, after removing the q-power."""
        lo, hi = self.min_exp(), self.max_exp()
        return [ZZ(self.terms.get(e, 0)) for e in range(hi, lo - 1, -1)]

    @classmethod
    def from_dense(cls, coeffs, low: int = 0) -> "LaurentPoly":
        deg = len(coeffs) - 1
        return cls({low + deg - i: int(c) for i, c in enumerate(coeffs) if c})

    def __call__(self, x):
        return sum((Fraction(x) ** e * c for e, c in self.terms.items()), Fraction(0))

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"{self.terms[e]}*q^{e}" for e in sorted(self.terms, reverse=True)]
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self.render()})"


ONE_POLY = LaurentPoly(1)


class LaurentRational:
    """An element of Q(q), stored as (Laurent numerator) / (polynomial denominator)."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None, _canonical: bool = False):
        if isinstance(num, int):
            num = LaurentPoly(num)
        if den is None:
            den = ONE_POLY
        elif isinstance(den, int):
            den = LaurentPoly(den)
        if _canonical:
            self.num, self.den = num, den
        else:
            self.num, self.den = _canonicalize(num, den)

    @classmethod
    def q(cls, k: int = 1) -> "LaurentRational":
        return cls(LaurentPoly.monomial(k), _canonical=True)

    @classmethod
    def const(cls, c: int) -> "LaurentRational":
        return cls(LaurentPoly(c), _canonical=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent_poly(self) -> bool:
        return self.den == ONE_POLY

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentRational.const(other)
        if not isinstance(other, LaurentRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def _coerce(self, other):
        if isinstance(other, LaurentRational):
            return other
        if isinstance(other, int):
            return LaurentRational.const(other)
        if isinstance(other, LaurentPoly):
            return LaurentRational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return LaurentRational(self.num + other.num, self.den, _canonical=self.den == ONE_POLY)
        return LaurentRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return LaurentRational(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == ONE_POLY and other.den == ONE_POLY:
            return LaurentRational(self.num * other.num, _canonical=True)
        return LaurentRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "LaurentRational":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return LaurentRational(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = LaurentRational.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def render(self) -> str:
        if self.den == ONE_POLY:
            return self.num.render()
        return f"({self.num.render()})/({self.den.render()})"

    __str__ = render

    def __repr__(self):
        return f"LaurentRational({self.render()})"


def _canonicalize(num: LaurentPoly, den: LaurentPoly):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator in Q(q)")
    if num.is_zero():
        return LaurentPoly(), ONE_POLY
    # move all q-powers of the denominator into the numerator
    shift = den.min_exp()
    den = den.shift(-shift)
    num = num.shift(-shift)
    if den.max_exp() == 0:
        c = den.terms[0]
        if c == 1:
            return num, ONE_POLY
        g = gcd(num.content(), c)
        if c < 0:
            g = -g
        num = LaurentPoly({e: v // g for e, v in num.terms.items()})
        return num, LaurentPoly(c // g)
    low = num.min_exp()
    n_dense = num.to_dense()
    d_dense = den.to_dense()
    g = dup_gcd(n_dense, d_dense, ZZ)
    if len(g) > 1 or abs(int(g[0])) != 1:
        n_dense = dup_exquo(n_dense, g, ZZ)
        d_dense = dup_exquo(d_dense, g, ZZ)
    if int(d_dense[0]) < 0:
        n_dense = [-c for c in n_dense]
        d_dense = [-c for c in d_dense]
    return LaurentPoly.from_dense(n_dense, low), LaurentPoly.from_dense(d_dense, 0)


def q(k: int = 1) -> LaurentRational:
    return LaurentRational.q(k)


ZERO = LaurentRational.const(0)
ONE = LaurentRational.const(1)


def q_integer(n: int, base: LaurentRational) -> LaurentRational:
    """[n]_t = (t^n - t^-n) / (t - t^-1)."""
    return (base ** n - base ** (-n)) / (base - base ** (-1))


def q_binomial(m: int, n: int, base: LaurentRational) -> LaurentRational:
    """The Gaussian binomial [m choose n]_t as a product of ratios of t-powers."""
    if n < 0 or n > m:
        raise ValueError(f"q_binomial needs 0 <= n <= m, got m={m}, n={n}")
    out = ONE
    for i in range(n):
        out = out * (base ** (m - i) - base ** (-(m - i))) / (base ** (i + 1) - base ** (-(i + 1)))
    return out


def is_in_A(x: LaurentRational) -> bool:
    """True iff x has no pole at q = 0."""
    return x.is_zero() or x.num.min_exp() >= 0


def evaluate_at_zero(x: LaurentRational) -> Fraction:
    if not is_in_A(x):
        raise ValueError(f"{x} has a pole at q = 0")
    if x.is_zero():
        return Fraction(0)
    return Fraction(x.num.terms.get(0, 0), x.den.terms[0])


_TERM = re.compile(r"^([+-]?\d*)\s*\*?\s*(q(?:\s*\^\s*([+-]?\d+))?)?$")


def _parse_poly(text: str) -> LaurentPoly:
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    # split on top-level +/- while keeping signs attached to the following term
    pieces = re.split(r"(?<![\^*])\s*(?=[+-])", text)
    out = LaurentPoly()
    for piece in pieces:
        piece = piece.replace(" ", "")
        if piece.startswith("+"):
            piece = piece[1:]
        if not piece:
            continue
        m = _TERM.match(piece)
        if not m or (not m.group(1) and not m.group(2)):
            raise ValueError(f"cannot parse term {piece!r}")
        coeff_txt, q_txt, exp_txt = m.group(1), m.group(2), m.group(3)
        if coeff_txt in ("", "+"):
            coeff = 1
        elif coeff_txt == "-":
            coeff = -1
        else:
            coeff = int(coeff_txt)
        if q_txt is None:
            if coeff_txt in ("", "+", "-"):
                raise ValueError(f"cannot parse term {piece!r}")
            exp = 0
        else:
            exp = int(exp_txt) if exp_txt is not None else 1
        out = out + LaurentPoly.monomial(exp, coeff)
    return out


def parse(text: str) -> LaurentRational:
    """Parse the output of ``LaurentRational.render`` (and hand-written variants)."""
    text = text.strip()
    m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", text)
    if m:
        return LaurentRational(_parse_poly(m.group(1)), _parse_poly(m.group(2)))
    return LaurentRational(_parse_poly(text))

"""Explicit summand lists for two worked tensor products, used as fixtures."""

from __future__ import annotations

from .roots import Weight

# (shift of the omega_1 coefficient, shift of the omega_2 coefficient, first omega_0 level)
# for B(lam' + w0) (x) B(lam + w0) of D(2,1); a summand is
# -(n1 + n1' - 2j + d1) w1 - (n2 + n2' - 2k + d2) w2 + (j + k + z + 2n) w0
D21_FAMILIES = (
    (0, 0, 2), (0, 0, 6),
    (1, 1, 2), (1, 1, 4),
    (1, -1, 3), (1, -1, 5),
    (-1, 1, 3), (-1, 1, 5),
    (-1, -1, 4), (-1, -1, 6),
    (2, 0, 3), (0, 0, 4), (-2, 0, 5),
    (0, 2, 3), (0, 0, 4), (0, -2, 5),
)

# (omega_1..omega_4 coefficients, first omega_0 level) for B(-w4 + w0) (x) B(w0) of D(4,1)
D41_FAMILIES = (
    ((0, 0, 0, -1), 2), ((0, 0, 0, -1), 10),
    ((-1, 0, 0, -1), 2), ((-1, 0, 0, -1), 8),
    ((0, 0, -1, 0), 3), ((0, 0, -1, 0), 9),
    ((0, -1, 0, -1), 3), ((0, -1, 0, -1), 7),
    ((-1, 0, -1, 0), 3), ((-1, 0, -1, 0), 7),
    ((0, 0, 0, -1), 4), ((0, 0, 0, -1), 8),
    ((0, 0, -1, -2), 4), ((0, 0, -1, -2), 6),
    ((0, -1, -1, 0), 4), ((0, -1, -1, 0), 6),
    ((-1, 0, 0, -1), 4), ((-1, 0, 0, -1), 6),
    ((0, 0, -1, 0), 5), ((0, 0, -1, 0), 7),
    ((0, 0, -2, -1), 5),
    ((-1, 0, -1, 0), 5),
    ((0, 0, 0, -3), 5),
    ((0, -1, 0, -1), 5),
    ((0, 0, 0, -1), 6),
)


def d21_example_summands(n, n_prime, cap: int) -> list:
    """Summands of B(lam' + w0) (x) B(lam + w0) for D(2,1), lam = -n1 w1 - n2 w2.

    Valid when |n_i - n_i'| >= 2, which keeps every coefficient below non-positive.
    """
    n1, n2 = n
    m1, m2 = n_prime
    if abs(n1 - m1) < 2 or abs(n2 - m2) < 2:
        raise ValueError("the family list assumes |n_i - n_i'| >= 2")
    out = []
    for j in range(min(n1, m1) + 1):
        for k in range(min(n2, m2) + 1):
            for d1, d2, z in D21_FAMILIES:
                c1 = n1 + m1 - 2 * j + d1
                c2 = n2 + m2 - 2 * k + d2
                for level in range(j + k + z, cap + 1, 2):
                    out.append(Weight((level, -c1, -c2)))
    return sorted(out)


def d41_example_summands(cap: int) -> list:
    out = []
    for coeffs, z in D41_FAMILIES:
        out.extend(Weight((level,) + coeffs) for level in range(z, cap + 1, 2))
    return sorted(out)

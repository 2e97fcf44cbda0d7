"""Tensor-product rule for Kashiwara operators with index i >= 1.

The rule used throughout has the inequalities reversed relative to the usual
Lie-algebra convention: on b1 (x) b2, e_i acts on b2 when eps_i(b1) <= phi_i(b2)
and f_i acts on b2 when eps_i(b1) < phi_i(b2).  Words are tuples of atoms and
associate to the left.

``signature_apply`` is the fast bracketing form; ``binary_apply`` is the literal
two-factor recursion and serves as a cross-check.
"""

from __future__ import annotations

from typing import Callable, Optional

AtomOp = Callable[[str, int, object], Optional[object]]


def string_length(atom, direction: str, i: int, op: AtomOp, limit: int = 64) -> int:
    n = 0
    cur = op(direction, i, atom)
    while cur is not None:
        n += 1
        if n > limit:
            raise RuntimeError("string longer than the safety limit")
        cur = op(direction, i, cur)
    return n


def signature_target(eps, phi, direction: str):
    """Index of the factor acted on, or None when the operator kills the word."""
    plus_stack = []
    minus = []
    # read factors right to left: each contributes eps minus signs, then phi plus signs
    for j in range(len(eps) - 1, -1, -1):
        for _ in range(eps[j]):
            if plus_stack:
                plus_stack.pop()
            else:
                minus.append(j)
        if phi[j]:
            plus_stack.extend([j] * phi[j])
    if direction == "f":
        return plus_stack[0] if plus_stack else None
    return minus[-1] if minus else None


def signature_apply(word: tuple, direction: str, i: int, op: AtomOp, eps_phi=None):
    if eps_phi is None:
        eps = [string_length(a, "e", i, op) for a in word]
        phi = [string_length(a, "f", i, op) for a in word]
    else:
        pairs = [eps_phi(a, i) for a in word]
        eps = [p[0] for p in pairs]
        phi = [p[1] for p in pairs]
    j = signature_target(eps, phi, direction)
    if j is None:
        return None
    new = op(direction, i, word[j])
    if new is None:
        return None
    return word[:j] + (new,) + word[j + 1:]


def binary_apply(word: tuple, direction: str, i: int, op: AtomOp):
    """Apply the two-factor rule recursively on the left-associated word."""
    if len(word) == 1:
        new = op(direction, i, word[0])
        return None if new is None else (new,)
    left, right = word[:-1], word[-1:]
    eps_left = _word_string_length(left, "e", i, op)
    phi_right = _word_string_length(right, "f", i, op)
    if direction == "e":
        on_right = eps_left <= phi_right
    else:
        on_right = eps_left < phi_right
    if on_right:
        new = binary_apply(right, direction, i, op)
        return None if new is None else left + new
    new = binary_apply(left, direction, i, op)
    return None if new is None else new + right


def _word_string_length(word, direction, i, op) -> int:
    n = 0
    cur = binary_apply(word, direction, i, op)
    while cur is not None:
        n += 1
        cur = binary_apply(cur, direction, i, op)
    return n

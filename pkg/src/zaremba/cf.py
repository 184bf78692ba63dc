"""Exact continued fractions, continuants and the 2x2 generator products.

A finite digit string ``(a_1, ..., a_k)`` encodes the rational

    p/q = 1/(a_1 + 1/(a_2 + ... + 1/a_k))

and the product of generators ``[[0, 1], [1, a_j]]`` has ``(p, q)`` as its
second column.  Everything here is plain Python integer arithmetic, checked
against the signed 64-bit range so that results can be handed to the
compiled enumeration kernels without silent wrap-around.
"""

from __future__ import annotations

from math import gcd
from typing import NamedTuple, Optional, Sequence

from .errors import ContinuantOverflowError

INT64_MAX = (1 << 63) - 1

# The empty tuple is the rational 0/1.
Digits = tuple[int, ...]


class Pair(NamedTuple):
    p: int
    q: int


class Mat2(NamedTuple):
    m11: int
    m12: int
    m21: int
    m22: int

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def generator(cls, a: int) -> "Mat2":
        if a < 1:
            raise ValueError(f"generator digit must be >= 1, got {a}")
        return cls(0, 1, 1, a)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        a, b, c, d = self
        e, f, g, h = other
        return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    @property
    def column2(self) -> Pair:
        return Pair(self.m12, self.m22)


def _check_digits(d: Sequence[int]) -> Digits:
    d = tuple(int(a) for a in d)
    for j, a in enumerate(d, 1):
        if a < 1:
            raise ValueError(f"partial quotient a_{j} = {a} is not >= 1")
    return d


def _check_fraction(p: int, q: int) -> None:
    if q < 1 or p < 0 or p > q:
        raise ValueError(f"need 0 <= p <= q and q >= 1, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} are not coprime")
    if q > INT64_MAX:
        raise ContinuantOverflowError(0, f"q={q} exceeds the 64-bit range")


def cf_expand(p: int, q: int) -> Digits:
    """Canonical expansion of ``p/q`` by the Euclidean algorithm.

    The last digit is >= 2 whenever there are at least two digits;
    ``cf_expand(0, 1) == ()`` and ``cf_expand(1, 1) == (1,)``.

    >>> cf_expand(5, 7)
    (1, 2, 2)
    """
    _check_fraction(p, q)
    out = []
    num, den = q, p
    while den:
        a, r = divmod(num, den)
        out.append(a)
        num, den = den, r
    return tuple(out)


def cf_eval(d: Sequence[int]) -> tuple[Pair, list[Pair]]:
    """Evaluate a digit string through the continuant recurrences.

    Returns the final pair ``(p_k, q_k)`` and the list of convergents
    ``(p_j, q_j)`` for ``j = 1..k``.  Raises ContinuantOverflowError naming
    the first index whose continuant leaves the 64-bit range.
    """
    d = _check_digits(d)
    p_prev, p_cur = 1, 0
    q_prev, q_cur = 0, 1
    seq = []
    for j, a in enumerate(d, 1):
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        if q_cur > INT64_MAX:
            raise ContinuantOverflowError(j)
        seq.append(Pair(p_cur, q_cur))
    return Pair(p_cur, q_cur), seq


def to_matrix(d: Sequence[int]) -> Mat2:
    """Ordered product of the generators ``[[0, 1], [1, a]]`` over ``d``."""
    d = _check_digits(d)
    m = Mat2.identity()
    for j, a in enumerate(d, 1):
        m = m @ Mat2.generator(a)
        if max(m) > INT64_MAX:
            raise ContinuantOverflowError(j)
    return m


def rational_membership(p: int, q: int, A: int) -> Optional[Digits]:
    """A digit string over ``[1, A]`` evaluating to ``p/q``, or None.

    A rational has exactly two finite expansions, the canonical one and the
    one whose last digit ``a_k`` is split into ``(a_k - 1, 1)``; both are
    tried.
    """
    if A < 1:
        raise ValueError(f"A must be >= 1, got {A}")
    d = cf_expand(p, q)
    if all(a <= A for a in d):
        return d
    if all(a <= A for a in d[:-1]) and d[-1] == A + 1:
        return d[:-1] + (A, 1)
    return None

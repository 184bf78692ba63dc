"""Exponential sums ``S_N(theta) = sum e(theta q)`` over orbit strings with
``q <= N``, where ``e(t) = exp(2 pi i t)``.

At a rational frequency ``r/s`` the sum only depends on how many strings
have ``q`` in each residue class mod ``s``; those counts are exact integers,
so the rational path is exact up to the final rounding of the unit roots.
Real frequencies are streamed node by node with compensated summation,
one partial per orbit subtree, combined in fixed subtree order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numba as nb
import numpy as np

from .orbit import DEFAULT_PREFIX_LEN, run_subtrees

# rational frequencies with a larger denominator fall back to streaming
MAX_RESIDUE_TABLE = 1 << 20


@dataclass(frozen=True)
class ArcPoint:
    """A frequency, optionally tagged as ``r/s + beta``."""

    theta: float
    r: Optional[int] = None
    s: Optional[int] = None
    beta: float = 0.0

    @classmethod
    def rational(cls, r: int, s: int, beta: float = 0.0) -> "ArcPoint":
        if s < 1:
            raise ValueError(f"denominator must be >= 1, got {s}")
        if math.gcd(r, s) != 1 or not 0 <= r < s:
            raise ValueError(f"need 0 <= r < s and gcd(r, s) = 1, got {r}/{s}")
        return cls(r / s + beta, r, s, beta)

    @classmethod
    def parse(cls, text: str) -> "ArcPoint":
        """``"r/s"`` becomes a tagged point (reduced mod 1); anything else a float."""
        text = text.strip()
        if "/" in text:
            frac = Fraction(text) % 1
            return cls.rational(frac.numerator, frac.denominator)
        return cls(float(text))

    @property
    def tagged(self) -> bool:
        return self.s is not None


@dataclass
class ExpSumValue:
    A: int
    N: int
    theta: float
    re: float
    im: float
    count: int

    @property
    def abs(self) -> float:
        return math.hypot(self.re, self.im)

    def to_dict(self) -> dict:
        return {"A": self.A, "N": self.N, "theta": self.theta, "re": self.re,
                "im": self.im, "abs": self.abs, "count": self.count}


def unit(t: float) -> tuple[float, float]:
    """``(cos 2 pi t, sin 2 pi t)``, exact at quarter turns."""
    t = t % 1.0
    if t == 0.0:
        return 1.0, 0.0
    if t == 0.5:
        return -1.0, 0.0
    if t == 0.25:
        return 0.0, 1.0
    if t == 0.75:
        return 0.0, -1.0
    return math.cos(2.0 * math.pi * t), math.sin(2.0 * math.pi * t)


_unit_jit = nb.njit(nogil=True, cache=True)(unit)


@nb.njit(nogil=True, cache=True)
def _visit_phase(state, q):
    # state = [theta, re, re_comp, im, im_comp]
    t = state[0] * q
    t = t - math.floor(t)
    c, s = _unit_jit(t)
    y = c - state[2]
    z = state[1] + y
    state[2] = (z - state[1]) - y
    state[1] = z
    y = s - state[4]
    z = state[3] + y
    state[4] = (z - state[3]) - y
    state[3] = z


@nb.njit(nogil=True, cache=True)
def _visit_residues(state, q):
    # state = [s_max, table...]; the block for modulus s starts at 1 + s(s-1)/2
    s_max = state[0]
    for s in range(1, s_max + 1):
        state[1 + s * (s - 1) // 2 + q % s] += 1


def residue_counts(
    A: int, N: int, s_max: int, threads: Optional[int] = None,
    prefix_len: int = DEFAULT_PREFIX_LEN,
) -> tuple[int, list[np.ndarray]]:
    """For each modulus ``s = 1..s_max``, how many orbit strings have
    ``q = c (mod s)``, as an array indexed by ``c``."""
    if s_max < 1:
        raise ValueError(f"s_max must be >= 1, got {s_max}")
    size = 1 + s_max * (s_max + 1) // 2

    def fresh():
        st = np.zeros(size, np.int64)
        st[0] = s_max
        return st

    count, states = run_subtrees(A, N, _visit_residues, fresh, threads, prefix_len)
    total = np.sum(states, axis=0)
    total[0] = s_max
    tables = [total[1 + s * (s - 1) // 2: 1 + s * (s + 1) // 2] for s in range(1, s_max + 1)]
    return count, tables


def root_of_unity(k: int, s: int) -> tuple[float, float]:
    """``e(k/s)``; ``e(-k/s)`` is its exact conjugate."""
    k %= s
    if 2 * k > s:
        c, si = unit((s - k) / s)
        return c, -si
    return unit(k / s)


def _sum_from_residues(table: np.ndarray, r: int, s: int) -> tuple[float, float]:
    re, im = [], []
    for c, n in enumerate(table.tolist()):
        if n:
            cr, ci = root_of_unity(r * c, s)
            re.append(n * cr)
            im.append(n * ci)
    return math.fsum(re), math.fsum(im)


def exp_sum(
    A: int, N: int, theta: Union[ArcPoint, float, Fraction, str],
    threads: Optional[int] = None, prefix_len: int = DEFAULT_PREFIX_LEN,
) -> ExpSumValue:
    """Evaluate ``S_N(theta)`` over all orbit strings with ``q <= N``."""
    point = _as_point(theta)
    if point.tagged and point.beta == 0.0 and point.s <= MAX_RESIDUE_TABLE:
        # one residue table suffices; s_max = s would also tabulate smaller moduli
        count, table = _single_modulus(A, N, point.s, threads, prefix_len)
        re, im = _sum_from_residues(table, point.r, point.s)
        return ExpSumValue(A, N, point.theta, re, im, count)

    def fresh():
        st = np.zeros(5)
        st[0] = point.theta
        return st

    count, states = run_subtrees(A, N, _visit_phase, fresh, threads, prefix_len)
    re = math.fsum(float(st[1]) - float(st[2]) for st in states)
    im = math.fsum(float(st[3]) - float(st[4]) for st in states)
    return ExpSumValue(A, N, point.theta, re, im, count)


@nb.njit(nogil=True, cache=True)
def _visit_one_modulus(state, q):
    state[1 + q % state[0]] += 1


def _single_modulus(A, N, s, threads, prefix_len):
    def fresh():
        st = np.zeros(s + 1, np.int64)
        st[0] = s
        return st

    count, states = run_subtrees(A, N, _visit_one_modulus, fresh, threads, prefix_len)
    return count, np.sum([st[1:] for st in states], axis=0)


def _as_point(theta) -> ArcPoint:
    if isinstance(theta, ArcPoint):
        return theta
    if isinstance(theta, Fraction):
        frac = theta % 1
        return ArcPoint.rational(frac.numerator, frac.denominator)
    if isinstance(theta, str):
        return ArcPoint.parse(theta)
    return ArcPoint(float(theta))


@dataclass
class ArcRow:
    r: int
    s: int
    theta: float
    re: float
    im: float
    abs: float
    ratio: float

    def to_dict(self) -> dict:
        return dict(self.__dict__)


COLUMNS = ("r", "s", "theta", "re", "im", "abs", "ratio")


def farey(s_max: int) -> list[tuple[int, int]]:
    """Reduced ``r/s`` with ``0 <= r < s <= s_max``, sorted by ``s`` then ``r``."""
    return [(r, s) for s in range(1, s_max + 1) for r in range(s) if math.gcd(r, s) == 1]


def arc_profile(
    A: int, N: int, s_max: int, threads: Optional[int] = None,
    prefix_len: int = DEFAULT_PREFIX_LEN,
) -> list[ArcRow]:
    """``|S_N(r/s)|`` and its ratio to ``S_N(0)`` over the Farey fractions of
    order ``s_max``, from a single orbit traversal."""
    count, tables = residue_counts(A, N, s_max, threads, prefix_len)
    rows = []
    for r, s in farey(s_max):
        re, im = _sum_from_residues(tables[s - 1], r, s)
        mag = math.hypot(re, im)
        rows.append(ArcRow(r, s, r / s, re, im, mag, mag / count))
    return rows

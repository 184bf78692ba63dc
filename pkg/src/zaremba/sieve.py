"""Integer-side questions: density of Q_A, its exceptions, per-q witnesses,
powers of a fixed base, and the growth exponent of the orbit count.

Membership is available along two unrelated routes: the orbit bitset from
:mod:`zaremba.orbit`, and a direct scan over numerators ``p`` with a
Euclidean expansion per candidate (:func:`witness`).  Tests compare them.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numba as nb
import numpy as np

from .cf import Digits, INT64_MAX, rational_membership
from .errors import ContinuantOverflowError
from .orbit import continuant_bitset, orbit_count

MULTIPLICITY_NOTE = (
    "counts are over digit strings; each fraction has at most two strings, "
    "which does not change a log-log slope"
)


@dataclass
class ExceptionReport:
    A: int
    N: int
    exceptions: list[int]
    density: Fraction

    def to_dict(self) -> dict:
        return {
            "A": self.A,
            "N": self.N,
            "count": self.N - len(self.exceptions),
            "density": float(self.density),
            "density_exact": f"{self.density.numerator}/{self.density.denominator}",
            "exceptions": list(self.exceptions),
        }


@dataclass
class SlopeFit:
    A: int
    Ns: list[int]
    counts: list[int]
    slope: float
    intercept: float
    reference: float
    note: str = field(default=MULTIPLICITY_NOTE)

    def to_dict(self) -> dict:
        return asdict(self)


def density(A: int, N: int, threads: Optional[int] = None) -> Fraction:
    """Exact fraction of ``[1, N]`` lying in Q_A."""
    return Fraction(continuant_bitset(A, N, threads).popcount(), N)


def exceptions(A: int, N: int, threads: Optional[int] = None) -> list[int]:
    """Sorted integers in ``[1, N]`` that are not continuants over ``[1, A]``."""
    flags = continuant_bitset(A, N, threads).flags()
    return (np.flatnonzero(~flags[1:]) + 1).tolist()


def exception_report(A: int, N: int, threads: Optional[int] = None) -> ExceptionReport:
    exc = exceptions(A, N, threads)
    return ExceptionReport(A, N, exc, Fraction(N - len(exc), N))


@nb.njit(nogil=True, cache=True)
def _smallest_numerator(q, A):
    # Euclid on (q, p) gives the digits of p/q; abandon p at the first digit
    # that no A-bounded rewrite can rescue.
    for p in range(1, q):
        num = q
        den = p
        ok = True
        while True:
            a = num // den
            r = num - a * den
            if r == 0:
                # last digit; den is gcd(p, q)
                ok = den == 1 and a <= A + 1
                break
            if a > A:
                ok = False
                break
            num = den
            den = r
        if ok:
            return p
    return -1


def witness(q: int, A: int) -> Optional[tuple[int, Digits]]:
    """Smallest ``p`` coprime to ``q`` with ``p/q`` in R_A, and its digits.

    ``witness(1, A) == (0, ())`` by the empty-product convention.
    """
    if q < 1 or A < 1:
        raise ValueError(f"need q >= 1 and A >= 1, got q={q}, A={A}")
    if q > INT64_MAX:
        raise ContinuantOverflowError(0, f"q={q} exceeds the 64-bit range")
    if q == 1:
        return 0, ()
    p = int(_smallest_numerator(q, A))
    if p < 0:
        return None
    digits = rational_membership(p, q, A)
    assert digits is not None
    return p, digits


@dataclass
class PowerRow:
    exponent: int
    q: int
    witness: Optional[tuple[int, Digits]]

    @property
    def ok(self) -> bool:
        return self.witness is not None


@dataclass
class PowerReport:
    base: int
    A: int
    rows: list[PowerRow]

    @property
    def failures(self) -> list[PowerRow]:
        return [r for r in self.rows if not r.ok]

    def to_dict(self) -> dict:
        return {
            "base": self.base,
            "A": self.A,
            "rows": [
                {
                    "exponent": r.exponent,
                    "q": r.q,
                    "p": None if r.witness is None else r.witness[0],
                    "digits": None if r.witness is None else list(r.witness[1]),
                }
                for r in self.rows
            ],
            "failures": [r.q for r in self.failures],
        }


def niederreiter_check(base: int, max_exp: int, A: int) -> PowerReport:
    """Search a witness for each ``base**j``, ``j = 1..max_exp``."""
    if base < 2 or max_exp < 1:
        raise ValueError(f"need base >= 2 and max_exp >= 1, got {base}, {max_exp}")
    if base**max_exp >= 1 << 62:
        raise ContinuantOverflowError(max_exp, f"{base}^{max_exp} exceeds 2^62")
    rows = [PowerRow(j, base**j, witness(base**j, A)) for j in range(1, max_exp + 1)]
    return PowerReport(base, A, rows)


def fit_slope(Ns: Sequence[float], counts: Sequence[float]) -> tuple[float, float]:
    """Least-squares ``(slope, intercept)`` of ``log count`` on ``log N``."""
    x = np.log(np.asarray(Ns, dtype=float))
    y = np.log(np.asarray(counts, dtype=float))
    slope, intercept = np.polyfit(x, y, 1)
    return float(slope), float(intercept)


def counting_fit(
    A: int, Ns: Sequence[int], threads: Optional[int] = None, reference: Optional[float] = None
) -> SlopeFit:
    """Fit the exponent of ``orbit_count(A, N) ~ C N^t``.

    ``reference`` defaults to twice the transfer-operator dimension.
    """
    Ns = [int(n) for n in Ns]
    if len(Ns) < 3:
        raise ValueError("need at least three sample points")
    if any(b <= a for a, b in zip(Ns, Ns[1:])):
        raise ValueError("sample points must be strictly increasing")
    counts = [orbit_count(A, n, threads) for n in Ns]
    slope, intercept = fit_slope(Ns, counts)
    if reference is None:
        from .dimension import delta_transfer

        reference = 2.0 * delta_transfer(A).value if A >= 2 else 0.0
    return SlopeFit(A, Ns, counts, slope, intercept, reference)


__all__ = [
    "ExceptionReport",
    "PowerReport",
    "PowerRow",
    "SlopeFit",
    "counting_fit",
    "density",
    "exception_report",
    "exceptions",
    "fit_slope",
    "niederreiter_check",
    "witness",
]

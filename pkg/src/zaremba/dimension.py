"""Hausdorff dimension of the set of reals with partial quotients <= A.

Three estimators, each independent of the others:

* :func:`delta_asymptotic` -- the two explicit terms of the large-A expansion.
* :func:`delta_transfer` -- the exponent ``s`` at which the leading
  eigenvalue of ``(L_s f)(x) = sum_a (a + x)^(-2s) f(1/(a + x))`` equals 1.
  The operator is discretized by collocation at Chebyshev-Lobatto nodes on
  ``[0, 1]`` with barycentric interpolation.
* :func:`delta_cylinder` -- an oracle that only uses exact continuants: the
  cylinder of a digit string has length ``1/(q_k (q_k + q_{k-1}))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BracketError, CapacityError, ConvergenceError

CYLINDER_LIMIT = 10**8
# depth_max() stays within this many cylinders (two float64 levels in memory)
CYLINDER_BUDGET = 1 << 23


@dataclass
class DimensionEstimate:
    A: int
    method: str
    value: float
    diagnostics: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"A": self.A, "method": self.method, "value": self.value,
                "diagnostics": dict(self.diagnostics)}


def delta_asymptotic(A: int) -> float:
    """``1 - 6/(pi^2 A) - 72 log A/(pi^4 A^2)``, remainder O(1/A^2) dropped."""
    if A < 1:
        raise ValueError(f"A must be >= 1, got {A}")
    pi2 = math.pi**2
    return 1.0 - 6.0 / (pi2 * A) - 72.0 * math.log(A) / (pi2 * pi2 * A * A)


# -- collocation ------------------------------------------------------------


def chebyshev_lobatto(m: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes on [0, 1] (ascending) and their barycentric weights."""
    j = np.arange(m)
    x = (1.0 - np.cos(np.pi * j / (m - 1))) / 2.0
    w = np.where(j % 2 == 0, 1.0, -1.0)
    w[0] *= 0.5
    w[-1] *= 0.5
    return x, w


def barycentric_matrix(nodes: np.ndarray, weights: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Matrix ``E`` with ``E @ f(nodes) ~= f(y)`` (second barycentric form)."""
    diff = y[:, None] - nodes[None, :]
    hit = diff == 0.0
    diff[hit] = 1.0
    c = weights[None, :] / diff
    E = c / c.sum(axis=1, keepdims=True)
    rows, cols = np.nonzero(hit)
    E[rows] = 0.0
    E[rows, cols] = 1.0
    return E


@dataclass
class TransferDiscretization:
    """Collocated transfer operator for digits ``1..A``.

    The interpolation matrices do not depend on ``s``; only the weights
    ``(a + x_i)^(-2s)`` do, so they are built once and reused.
    """

    A: int
    m: int
    nodes: np.ndarray = field(init=False, repr=False)
    _interp: list = field(init=False, repr=False)
    _logw: list = field(init=False, repr=False)

    def __post_init__(self):
        if self.A < 1:
            raise ValueError(f"A must be >= 1, got {self.A}")
        if self.m < 8:
            raise ValueError(f"need at least 8 nodes, got {self.m}")
        x, w = chebyshev_lobatto(self.m)
        self.nodes = x
        self._interp = [barycentric_matrix(x, w, 1.0 / (a + x)) for a in range(1, self.A + 1)]
        self._logw = [np.log(a + x) for a in range(1, self.A + 1)]

    def matrix(self, s: float) -> np.ndarray:
        T = np.zeros((self.m, self.m))
        for E, lw in zip(self._interp, self._logw):
            T += np.exp(-2.0 * s * lw)[:, None] * E
        return T


def power_iteration(T: np.ndarray, rtol: float = 1e-13, max_iter: int = 20000):
    """Dominant eigenpair of a matrix with a positive Perron vector.

    The iterate is kept at unit max-entry; stops when both the eigenvalue
    and the vector change by less than ``rtol`` (relative).
    """
    v = np.ones(T.shape[0])
    lam = 0.0
    for it in range(1, max_iter + 1):
        u = T @ v
        new = u[np.argmax(np.abs(u))]
        u /= new
        if abs(new - lam) <= rtol * abs(new) and np.max(np.abs(u - v)) <= rtol:
            return float(new), u, it
        v, lam = u, new
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


def lambda_leading(A: int, s: float, m: int = 48, disc: TransferDiscretization | None = None):
    """Leading eigenvalue and eigenvector (unit max-entry) of ``L_s``."""
    if not 0.0 <= s <= 2.0:
        raise ValueError(f"s must lie in [0, 2], got {s}")
    disc = disc or TransferDiscretization(A, m)
    lam, vec, _ = power_iteration(disc.matrix(s))
    return lam, vec


def delta_transfer(A: int, m: int = 48, tol: float = 1e-10) -> DimensionEstimate:
    """Solve ``lambda(s) = 1`` by bisection on ``[0, 1]``."""
    if A == 1:
        return DimensionEstimate(1, "transfer", 0.0,
                                 {"m": m, "note": "C_1 is a single point; dimension 0"})
    if A < 1:
        raise ValueError(f"A must be >= 1, got {A}")
    if m < 16:
        raise ValueError(f"need m >= 16, got {m}")
    if tol < 1e-12:
        raise ValueError(f"tol must be >= 1e-12, got {tol}")
    disc = TransferDiscretization(A, m)
    lam0, _ = lambda_leading(A, 0.0, disc=disc)
    lam1, _ = lambda_leading(A, 1.0, disc=disc)
    if not (lam0 > 1.0 > lam1):
        raise BracketError(f"lambda(0)={lam0}, lambda(1)={lam1} do not bracket 1")
    lo, hi = 0.0, 1.0
    steps = 0
    while hi - lo >= tol:
        mid = 0.5 * (lo + hi)
        if lambda_leading(A, mid, disc=disc)[0] > 1.0:
            lo = mid
        else:
            hi = mid
        steps += 1
    s = 0.5 * (lo + hi)
    lam, _ = lambda_leading(A, s, disc=disc)
    return DimensionEstimate(A, "transfer", s, {
        "m": m, "tol": tol, "bisection_steps": steps,
        "residual": abs(lam - 1.0), "bracket": [lo, hi],
    })


# -- cylinder oracle --------------------------------------------------------


def cylinder_levels(A: int, depth: int) -> tuple[np.ndarray, np.ndarray]:
    """``(q_{k-1}, q_k)`` for all ``A**depth`` strings of length ``depth``."""
    qp = np.zeros(1, np.int64)
    q = np.ones(1, np.int64)
    digits = np.arange(1, A + 1, dtype=np.int64)
    for _ in range(depth):
        q, qp = (digits[:, None] * q[None, :] + qp[None, :]).ravel(), np.tile(q, A)
    return qp, q


def cylinder_log_lengths(A: int, depth: int) -> np.ndarray:
    qp, q = cylinder_levels(A, depth)
    qf = q.astype(float)
    return -np.log(qf) - np.log(qf + qp)


def _log_partition(s: float, loglen: np.ndarray) -> float:
    # log sum |I|^s, stable for tiny lengths
    top = loglen.max()
    return float(np.log(np.exp(s * (loglen - top)).sum()) + s * top)


def _bisect_decreasing(f, lo: float, hi: float, tol: float) -> float:
    while hi - lo >= tol:
        mid = 0.5 * (lo + hi)
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def depth_max(A: int, budget: int = CYLINDER_BUDGET) -> int:
    if A < 2:
        return 1
    k = 1
    while A ** (k + 1) <= budget:
        k += 1
    return k


def delta_cylinder(A: int, depth: int | None = None, tol: float = 1e-12) -> DimensionEstimate:
    """Dimension from the depth-``k`` cylinder cover.

    With ``Z_k(s) = sum |I|^s`` over the ``A**k`` cylinders, the estimate is
    the root of ``Z_k(s) = Z_{k-1}(s)`` (``Z_0 = 1``).  At depth 1 this is the
    plain cover equation ``Z_1(s) = 1``.  The ratio ``Z_k/Z_{k-1}`` tends to
    the leading eigenvalue geometrically fast, whereas the root of
    ``Z_k(s) = 1`` alone drifts like ``1/k``; the latter is reported as
    ``diagnostics["cover_root"]``.
    """
    if A < 1:
        raise ValueError(f"A must be >= 1, got {A}")
    depth = depth_max(A) if depth is None else depth
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    if A**depth > CYLINDER_LIMIT:
        raise CapacityError(f"{A}^{depth} cylinders exceed the limit {CYLINDER_LIMIT}")
    if A == 1:
        return DimensionEstimate(1, "cylinder", 0.0, {
            "depth": depth, "previous": 0.0, "cover_root": 0.0,
            "note": "single cylinder per depth; dimension 0",
        })
    cur = cylinder_log_lengths(A, depth)
    prev = cylinder_log_lengths(A, depth - 1) if depth >= 2 else np.zeros(1)
    before = cylinder_log_lengths(A, depth - 2) if depth >= 3 else np.zeros(1)
    s = _bisect_decreasing(lambda t: _log_partition(t, cur) - _log_partition(t, prev), 0.0, 1.0, tol)
    previous = None
    if depth >= 2:
        previous = _bisect_decreasing(
            lambda t: _log_partition(t, prev) - _log_partition(t, before), 0.0, 1.0, tol)
    cover_root = _bisect_decreasing(lambda t: _log_partition(t, cur), 0.0, 1.0, tol)
    return DimensionEstimate(A, "cylinder", s, {
        "depth": depth, "cylinders": A**depth, "previous": previous,
        "cover_root": cover_root,
        "total_length": float(np.exp(cur).sum()),
    })

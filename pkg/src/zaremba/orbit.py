"""Depth-first enumeration of the semigroup orbit restricted to ``q <= N``.

Nodes are non-empty digit strings over ``[1, A]``; a node with continuants
``(q_{k-1}, q_k)`` has children ``a * q_k + q_{k-1}`` for ``a = 1..A``.
Children grow with ``a`` and with depth, so a subtree (and every larger
sibling) is dropped as soon as its root exceeds ``N``.

The hot loop is a compiled explicit-stack walk (:func:`_walk`) that calls a
compiled visitor ``visit(state, q)`` per node.  Parallel runs split the tree
at a fixed prefix length; per-subtree results are always collected in
lexicographic prefix order, so output does not depend on the thread count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional

import numba as nb
import numpy as np

from .cf import Digits, Pair
from .errors import CapacityError

MAX_N = 1 << 62
DEFAULT_PREFIX_LEN = 3
# Bits; the flag buffer used while marking costs one byte per bit.
DEFAULT_CAPACITY = 1 << 31


class OrbitNode(NamedTuple):
    digits: Digits
    pair: Pair
    parent_q: int


def _check(A: int, N: int) -> None:
    if A < 1:
        raise ValueError(f"A must be >= 1, got {A}")
    if not 1 <= N <= MAX_N:
        raise ValueError(f"N must lie in [1, 2^62], got {N}")


def default_threads() -> int:
    return os.cpu_count() or 1


def stack_depth(N: int) -> int:
    # continuants at least double every two steps
    return 2 * int(N).bit_length() + 4


# -- compiled kernels ---------------------------------------------------------


@nb.njit(nogil=True, cache=True)
def _walk(A, N, qprev, q, include_root, max_depth, visit, state):
    """Visit the subtree below ``(qprev, q)``; return the number of visits.

    ``max_depth`` bounds the depth below the root (the root is depth 0).
    """
    size = min(max_depth, 2 * 64 + 4) + 1
    sq = np.empty(size, np.int64)
    sp = np.empty(size, np.int64)
    na = np.empty(size, np.int64)
    sq[0] = q
    sp[0] = qprev
    na[0] = 1
    top = 0
    count = 0
    if include_root:
        visit(state, q)
        count += 1
    while top >= 0:
        a = na[top]
        if a > A or top == max_depth:
            top -= 1
            continue
        cq = sq[top]
        cp = sp[top]
        # a * cq + cp > N, and so is every larger digit
        if cq > (N - cp) // a:
            top -= 1
            continue
        na[top] = a + 1
        top += 1
        sp[top] = cq
        sq[top] = a * cq + cp
        na[top] = 1
        visit(state, sq[top])
        count += 1
    return count


@nb.njit(nogil=True, cache=True)
def _visit_nothing(state, q):
    pass


@nb.njit(nogil=True, cache=True)
def _visit_mark(state, q):
    state[q] = 1


# -- prefix splitting and the parallel driver -------------------------------


def _roots(A: int, N: int, length: int) -> list[tuple[Digits, int, int]]:
    """All strings of exactly ``length`` digits with continuant ``<= N``,
    in lexicographic order, as ``(digits, q_{k-1}, q_k)``."""
    out = []
    stack = [((), 0, 1)]
    while stack:
        d, qp, q = stack.pop()
        if len(d) == length:
            out.append((d, qp, q))
            continue
        children = []
        for a in range(1, A + 1):
            nq = a * q + qp
            if nq > N:
                break
            children.append((d + (a,), q, nq))
        stack.extend(reversed(children))
    return out


def run_subtrees(
    A: int,
    N: int,
    visit,
    new_state: Callable[[], object],
    threads: Optional[int] = None,
    prefix_len: int = DEFAULT_PREFIX_LEN,
) -> tuple[int, list]:
    """Run a compiled visitor over the whole orbit.

    Nodes shorter than ``prefix_len`` are visited first, into the first
    state; each string of length ``prefix_len`` then roots one independent
    subtree with a state of its own.  Returns the total visit count and the
    list of states in that fixed order.  ``new_state`` may hand out the same
    object repeatedly when the visitor is safe to share.
    """
    _check(A, N)
    if prefix_len < 1:
        raise ValueError("prefix_len must be >= 1")
    threads = threads or default_threads()
    top_state = new_state()
    count = _walk(A, N, 0, 1, False, prefix_len - 1, visit, top_state)
    roots = _roots(A, N, prefix_len)
    depth = stack_depth(N)
    states = [new_state() for _ in roots]

    def work(lo: int, hi: int) -> int:
        c = 0
        for i in range(lo, hi):
            _, qp, q = roots[i]
            c += _walk(A, N, qp, q, True, depth, visit, states[i])
        return c

    if threads == 1 or len(roots) <= 1:
        count += work(0, len(roots))
    else:
        n_chunks = min(len(roots), 4 * threads)
        bounds = np.linspace(0, len(roots), n_chunks + 1).astype(int)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(work, lo, hi) for lo, hi in zip(bounds[:-1], bounds[1:])]
            count += sum(f.result() for f in futures)
    return count, [top_state] + states


# -- public API ---------------------------------------------------------------


def enumerate_orbit(
    A: int,
    N: int,
    visitor: Callable[[OrbitNode], None],
    threads: int = 1,
    prefix_len: int = DEFAULT_PREFIX_LEN,
) -> int:
    """Call ``visitor`` once per orbit node with ``q <= N``; return the count.

    This is the general-purpose (interpreted) walk, meant for inspection and
    small ``N``.  With ``threads > 1`` subtrees run on a thread pool and the
    visitor must tolerate concurrent calls.
    """
    _check(A, N)

    def walk(root, limit):
        # explicit stack of (digits, p_{k-1}, p_k, q_{k-1}, q_k)
        base = len(root[0])
        stack = [root]
        n = 0
        while stack:
            d, pp, p, qp, q = stack.pop()
            if len(d) > base:
                visitor(OrbitNode(d, Pair(p, q), qp))
                n += 1
            if limit is not None and len(d) - base >= limit:
                continue
            kids = []
            for a in range(1, A + 1):
                nq = a * q + qp
                if nq > N:
                    break
                kids.append((d + (a,), p, a * p + pp, q, nq))
            stack.extend(reversed(kids))
        return n

    empty = ((), 1, 0, 0, 1)
    if threads <= 1:
        return walk(empty, None)
    count = walk(empty, prefix_len - 1)

    def sub(root):
        d, pp, p, qp, q = root
        visitor(OrbitNode(d, Pair(p, q), qp))
        return 1 + walk(root, None)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        count += sum(pool.map(sub, _roots_with_p(A, N, prefix_len)))
    return count


def _roots_with_p(A, N, length):
    out = []
    for d, qp, q in _roots(A, N, length):
        pp, p = 1, 0
        for a in d:
            pp, p = p, a * p + pp
        out.append((d, pp, p, qp, q))
    return out


def orbit_count(
    A: int, N: int, threads: Optional[int] = None, prefix_len: int = DEFAULT_PREFIX_LEN
) -> int:
    """Number of non-empty digit strings over ``[1, A]`` with continuant ``<= N``."""
    dummy = np.zeros(1, np.int64)
    count, _ = run_subtrees(A, N, _visit_nothing, lambda: dummy, threads, prefix_len)
    return count


@dataclass(eq=False)
class ContinuantSet:
    """Q_A intersected with ``[1, N]``, stored as little-endian 64-bit words.

    Bit ``q`` lives in word ``q // 64`` at position ``q % 64``; bit 0 and
    bits above ``N`` are always clear.
    """

    A: int
    N: int
    words: np.ndarray = field(repr=False)

    @classmethod
    def from_flags(cls, A: int, N: int, flags: np.ndarray) -> "ContinuantSet":
        flags = np.asarray(flags, dtype=np.uint8)
        if flags.shape != (N + 1,):
            raise ValueError(f"expected {N + 1} flags, got {flags.shape}")
        n_words = (N + 1 + 63) // 64
        packed = np.packbits(flags != 0, bitorder="little")
        buf = np.zeros(8 * n_words, np.uint8)
        buf[: packed.size] = packed
        return cls(A, N, buf.view("<u8").copy())

    @classmethod
    def from_members(cls, A: int, N: int, members) -> "ContinuantSet":
        flags = np.zeros(N + 1, np.uint8)
        flags[np.asarray(list(members), dtype=np.int64)] = 1
        return cls.from_flags(A, N, flags)

    def flags(self) -> np.ndarray:
        bits = np.unpackbits(self.words.astype("<u8").view(np.uint8), bitorder="little")
        return bits[: self.N + 1].astype(bool)

    def members(self) -> list[int]:
        return np.flatnonzero(self.flags()).tolist()

    def popcount(self) -> int:
        return int(np.unpackbits(self.words.view(np.uint8)).sum())

    def __len__(self) -> int:
        return self.popcount()

    def __contains__(self, q: int) -> bool:
        if not 0 <= q <= self.N:
            return False
        return bool((int(self.words[q >> 6]) >> (q & 63)) & 1)

    def issubset(self, other: "ContinuantSet") -> bool:
        if self.N != other.N:
            raise ValueError("sets have different N")
        return bool(np.all(self.words & ~other.words == 0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ContinuantSet):
            return NotImplemented
        return (self.A, self.N) == (other.A, other.N) and np.array_equal(self.words, other.words)


def continuant_bitset(
    A: int,
    N: int,
    threads: Optional[int] = None,
    prefix_len: int = DEFAULT_PREFIX_LEN,
    capacity: int = DEFAULT_CAPACITY,
) -> ContinuantSet:
    """Mark every continuant ``<= N`` of a digit string over ``[1, A]``.

    ``1`` is always a member (the empty product).
    """
    _check(A, N)
    if N > capacity:
        raise CapacityError(f"N={N} exceeds bitset capacity {capacity}")
    flags = np.zeros(N + 1, np.uint8)
    # all workers share one flag buffer; writes are idempotent
    run_subtrees(A, N, _visit_mark, lambda: flags, threads, prefix_len)
    flags[1] = 1
    return ContinuantSet.from_flags(A, N, flags)

"""Brute-force oracles shared by the test modules.

None of these touch the package's enumeration or expansion code paths.
"""

from collections import deque
from fractions import Fraction
from itertools import product


def eval_fraction(digits):
    """1/(a_1 + 1/(a_2 + ...)) evaluated right to left with exact fractions."""
    x = Fraction(0)
    for a in reversed(digits):
        x = 1 / (a + x)
    return x


def bfs_continuants(A, N):
    """Multiset (list) of continuants of all non-empty strings over [1, A]
    with q <= N, by breadth-first search over matrix columns."""
    out = []
    queue = deque([(0, 1)])  # (q_{k-1}, q_k) of the empty string
    while queue:
        qp, q = queue.popleft()
        for a in range(1, A + 1):
            nq = a * q + qp
            if nq <= N:
                out.append(nq)
                queue.append((q, nq))
    return out


def strings_up_to(A, N, max_len=20):
    """Every digit string over [1, A] (length <= max_len) whose exact
    fraction has denominator <= N.  Exponential; tiny inputs only."""
    found = []
    for k in range(1, max_len + 1):
        any_kept = False
        for d in product(range(1, A + 1), repeat=k):
            x = eval_fraction(d)
            if x.denominator <= N:
                found.append((d, x))
                any_kept = True
        if not any_kept:
            break
    return found


def fibonacci_upto(N):
    out, a, b = [], 1, 2
    out.append(1)
    while b <= N:
        out.append(b)
        a, b = b, a + b
    return out


# one line per acceptance criterion, echoed at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

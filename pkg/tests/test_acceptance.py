"""Exit criteria for the package, one test per criterion.

Each test appends a PASS/FAIL line to the terminal summary and enforces the
stated runtime budget.
"""

import random
import time
from contextlib import contextmanager

import pytest

from conftest import ACCEPTANCE_LINES, bfs_continuants, fibonacci_upto, strings_up_to
from zaremba.dimension import delta_asymptotic, delta_cylinder, delta_transfer, depth_max
from zaremba.expsum import exp_sum
from zaremba.formats import dumps_bitset, loads_bitset
from zaremba.orbit import ContinuantSet, continuant_bitset, orbit_count
from zaremba.sieve import counting_fit, density, exceptions, niederreiter_check, witness


@contextmanager
def criterion(number, title, budget):
    start = time.perf_counter()
    status, detail = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if elapsed >= budget:
            detail = f" (over budget: {elapsed:.1f}s >= {budget}s)"
            raise AssertionError(f"criterion {number} took {elapsed:.1f}s, budget {budget}s")
        status, detail = "PASS", f" ({elapsed:.1f}s)"
    finally:
        ACCEPTANCE_LINES.append(f"criterion {number}: {status} {title}{detail}")


def test_c1_exact_small_sets():
    with criterion(1, "exact small sets", 1.0):
        assert continuant_bitset(1, 100).members() == fibonacci_upto(100)
        assert exceptions(2, 10) == [6, 9]
        assert orbit_count(2, 10) == 20
        # independent brute force
        assert len(bfs_continuants(2, 10)) == 20
        reached = {x.denominator for _, x in strings_up_to(2, 10)} | {1}
        assert [q for q in range(1, 11) if q not in reached] == [6, 9]


def test_c2_dual_path_membership():
    with criterion(2, "orbit bitset == witness search, q <= 1e4, A = 1..5", 120.0):
        N = 10**4
        for A in range(1, 6):
            cs = continuant_bitset(A, N)
            mismatches = [q for q in range(1, N + 1) if (q in cs) != (witness(q, A) is not None)]
            assert mismatches == [], (A, mismatches[:10])


def test_c3_powers_in_Q3():
    with criterion(3, "2^j (j <= 20) and 3^k (k <= 12) lie in Q_3", 300.0):
        for base, top in [(2, 20), (3, 12)]:
            rep = niederreiter_check(base, top, 3)
            assert len(rep.rows) == top
            assert rep.failures == []


def test_c4_counting_exponent():
    with criterion(4, "orbit-count slope within 0.05 of 2*delta_2", 300.0):
        ref = 2 * delta_transfer(2, 48, 1e-10).value
        fit = counting_fit(2, [10**4, 10**5, 10**6, 10**7], reference=ref)
        assert ref == pytest.approx(1.0626, abs=1e-4)
        assert abs(fit.slope - ref) <= 0.05, fit


def test_c5_dimension_cross_validation():
    with criterion(5, "transfer vs cylinder within 1e-4; m -> 2m stable to 1e-8", 60.0):
        for A in (2, 3, 4, 5):
            t = delta_transfer(A, 48, 1e-10).value
            c = delta_cylinder(A, depth_max(A)).value
            assert abs(t - c) <= 1e-4, (A, t, c)
        assert abs(delta_transfer(2, 48, 1e-10).value - delta_transfer(2, 96, 1e-10).value) <= 1e-8


def test_c6_asymptotic_formula():
    with criterion(6, "A^2 |transfer - asymptotic| <= 5, shrinking from A=10 to 50", 120.0):
        gaps = {}
        for A in (10, 20, 50):
            gaps[A] = abs(delta_transfer(A, 48, 1e-10).value - delta_asymptotic(A))
            assert A * A * gaps[A] <= 5, (A, gaps[A])
        assert gaps[50] < gaps[10]


def test_c7_density_trend():
    with criterion(7, "density nondecreasing in A at N=1e5; Q_5 covers [1,1000]", 600.0):
        N = 10**5
        ds = [density(A, N) for A in range(1, 6)]
        assert all(b >= a for a, b in zip(ds, ds[1:])), ds
        assert exceptions(5, 1000) == []
        cs = continuant_bitset(5, N)
        assert cs.popcount() == ds[-1] * N
        rng = random.Random(20240601)
        for q in rng.sample(range(1, N + 1), 100):
            assert (q in cs) == (witness(q, 5) is not None), q


def test_c8_exponential_sums():
    with criterion(8, "exp sums: exact value, S(0) = count, symmetry, thread stability", 120.0):
        v = exp_sum(2, 10, "1/2")
        assert (v.re, v.im) == (-4.0, 0.0)
        for A, N in [(2, 10**5), (3, 10**4)]:
            z = exp_sum(A, N, 0.0)
            assert z.re == orbit_count(A, N) and z.im == 0.0
        rng = random.Random(8)
        for _ in range(100):
            theta = rng.random()
            a = exp_sum(2, 10**4, theta)
            b = exp_sum(2, 10**4, 1 - theta)
            assert abs(a.abs - b.abs) <= 1e-9 * max(a.abs, 1.0)
        for theta in (0.314159, "5/13"):
            one = exp_sum(2, 10**5, theta, threads=1)
            eight = exp_sum(2, 10**5, theta, threads=8)
            assert (one.re, one.im) == (eight.re, eight.im)


def test_c9_format_stability():
    # CLI golden files are checked in test_cli.py::test_golden
    with criterion(9, "bitset round trip on randomized sets", 60.0):
        rng = random.Random(9)
        for _ in range(200):
            N = rng.randint(1, 3000)
            members = rng.sample(range(1, N + 1), rng.randint(0, N))
            cs = ContinuantSet.from_members(rng.randint(1, 10), N, members)
            data = dumps_bitset(cs)
            assert loads_bitset(data) == cs and dumps_bitset(loads_bitset(data)) == data
        cs = continuant_bitset(4, 10**5)
        assert loads_bitset(dumps_bitset(cs)) == cs

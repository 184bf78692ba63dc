import cmath
import math
import random
from collections import Counter
from fractions import Fraction

import pytest

from conftest import bfs_continuants
from zaremba.expsum import ArcPoint, arc_profile, exp_sum, farey, unit
from zaremba.orbit import orbit_count


def direct_sum(A, N, theta):
    return sum(cmath.exp(2j * math.pi * theta * q) for q in bfs_continuants(A, N))


def test_example_half():
    qs = bfs_continuants(2, 10)
    assert len(qs) == 20 and sum(q % 2 == 0 for q in qs) == 8
    for theta in ("1/2", 0.5, Fraction(1, 2), ArcPoint.rational(1, 2)):
        v = exp_sum(2, 10, theta)
        assert (v.re, v.im) == (-4.0, 0.0)


@pytest.mark.parametrize("A, N", [(2, 10), (3, 500), (2, 10**5), (3, 10**4)])
def test_zero_frequency_is_count(A, N):
    for theta in ("0/1", 0.0):
        v = exp_sum(A, N, theta)
        assert v.re == orbit_count(A, N) and v.im == 0.0 and v.count == v.re


@pytest.mark.parametrize("theta", [0.1, 0.3137, 0.77, "3/7", "5/12"])
def test_matches_direct_sum(theta):
    point = ArcPoint.parse(theta) if isinstance(theta, str) else ArcPoint(theta)
    v = exp_sum(3, 800, point)
    ref = direct_sum(3, 800, point.theta)
    assert abs(complex(v.re, v.im) - ref) < 1e-9 * len(bfs_continuants(3, 800))


def test_conjugate_symmetry_and_triangle_bound():
    rng = random.Random(7)
    total = orbit_count(2, 20000)
    for _ in range(100):
        theta = rng.random()
        a = exp_sum(2, 20000, theta)
        b = exp_sum(2, 20000, 1.0 - theta)
        assert abs(a.abs - b.abs) <= 1e-9 * max(a.abs, 1.0)
        assert a.re == pytest.approx(b.re, rel=1e-9, abs=1e-9 * total)
        assert a.im == pytest.approx(-b.im, rel=1e-9, abs=1e-9 * total)
        assert a.abs <= total


def test_rational_conjugates_exact():
    a = exp_sum(2, 5000, "2/7")
    b = exp_sum(2, 5000, "5/7")
    assert a.re == b.re and a.im == -b.im


def test_mean_square_identity():
    # sum_j |S(j/M)|^2 = M * #{(q, q') : q = q' mod M} over the orbit multiset
    M = 64
    qs = bfs_continuants(2, 10)
    pairs = sum(1 for q in qs for r in qs if (q - r) % M == 0)
    mult = Counter(qs)
    assert pairs == sum(n * n for n in mult.values())  # M exceeds every q
    total = math.fsum(exp_sum(2, 10, ArcPoint.rational(j // math.gcd(j, M), M // math.gcd(j, M))).abs ** 2
                      for j in range(M))
    assert total == pytest.approx(M * pairs, rel=1e-12)


def test_thread_count_bit_stable():
    for theta in (0.123456789, "3/11"):
        ref = exp_sum(2, 10**5, theta, threads=1)
        for threads in (2, 8):
            got = exp_sum(2, 10**5, theta, threads=threads)
            assert (got.re, got.im) == (ref.re, ref.im)
    assert arc_profile(2, 10**4, 6, threads=1) == arc_profile(2, 10**4, 6, threads=8)


def test_beta_offset_evaluates_directly():
    point = ArcPoint.rational(1, 3, beta=1e-4)
    assert point.theta == 1 / 3 + 1e-4
    v = exp_sum(2, 2000, point)
    ref = direct_sum(2, 2000, point.theta)
    assert abs(complex(v.re, v.im) - ref) < 1e-8


def test_arc_point_validation():
    with pytest.raises(ValueError):
        ArcPoint.rational(2, 4)
    with pytest.raises(ValueError):
        ArcPoint.parse("x/3")
    p = ArcPoint.parse("10/7")
    assert (p.r, p.s) == (3, 7)


def test_unit_exact_quarter_turns():
    assert unit(0.0) == (1.0, 0.0) and unit(0.5) == (-1.0, 0.0)
    assert unit(0.25) == (0.0, 1.0) and unit(1.75) == (0.0, -1.0)


def test_farey_order():
    rows = farey(5)
    assert rows[:4] == [(0, 1), (1, 2), (1, 3), (2, 3)]
    assert len(rows) == 1 + sum(1 for s in range(2, 6) for r in range(1, s) if math.gcd(r, s) == 1)


def test_profile_examples():
    rows = arc_profile(2, 10, 2)
    assert [(r.r, r.s) for r in rows] == [(0, 1), (1, 2)]
    assert rows[0].abs == 20 and rows[0].ratio == 1.0
    assert rows[1].abs == 4.0


def test_profile_agrees_with_exp_sum():
    for row in arc_profile(3, 3000, 7):
        v = exp_sum(3, 3000, ArcPoint.rational(row.r, row.s))
        assert (row.re, row.im) == (v.re, v.im)


def test_major_arc_concentration():
    rows = arc_profile(2, 10**5, 8)
    half = next(r for r in rows if (r.r, r.s) == (1, 2))
    sevenths = [r.ratio for r in rows if r.s == 7]
    assert len(sevenths) == 6
    assert half.ratio > sum(sevenths) / len(sevenths)

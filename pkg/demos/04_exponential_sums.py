"""
Orbit exponential sums on major arcs
====================================

S_N(theta) sums e(theta q) over all orbit strings with q <= N.  Near
fractions with small denominator the sum keeps a visible share of its
mass; elsewhere it cancels.
"""

import random

from zaremba import ArcPoint, arc_profile, exp_sum

A, N = 2, 10**5

total = exp_sum(A, N, 0.0)
print("S_N(0) =", total.re, "(number of orbit strings)")

print()
print(" r/s    |S|/S(0)")
for row in arc_profile(A, N, 8):
    print(f"{row.r:>2}/{row.s:<2}  {row.ratio:.5f}")

# Slightly off a rational point
for beta in (0.0, 1e-6, 1e-5, 1e-4):
    v = exp_sum(A, N, ArcPoint.rational(1, 3, beta))
    print(f"theta = 1/3 + {beta:g}: |S|/S(0) = {v.abs / total.re:.5f}")

# Generic frequencies
rng = random.Random(1)
ratios = [exp_sum(A, N, rng.random()).abs / total.re for _ in range(20)]
print("typical ratio at random theta:", f"{sum(ratios) / len(ratios):.5f}")

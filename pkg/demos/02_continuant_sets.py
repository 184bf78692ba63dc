"""
Which denominators are reachable?
=================================

Q_A is the set of continuants q of digit strings over [1, A].  We build it
by walking the semigroup orbit and compare with a per-q witness search.
"""

from zaremba import continuant_bitset, density, exceptions, niederreiter_check, witness
from zaremba.sieve import counting_fit

N = 10**5

# With A = 1 only Fibonacci numbers appear
print("Q_1 up to 100:", continuant_bitset(1, 100).members())

# Density climbs quickly with A
for A in range(1, 6):
    print(f"A={A}: density on [1, {N}] = {float(density(A, N)):.6f}")

# Small exceptions for A = 2 and A = 3
print("missing from Q_2 below 100:", exceptions(2, 100))
print("missing from Q_3 below 100:", exceptions(3, 100))

# No integer up to 1000 is missing once A = 5
print("missing from Q_5 below 1000:", exceptions(5, 1000))

# A witness is the smallest numerator that works
print("witness for q=97, A=3:", witness(97, 3))

# Powers of 2 and 3 with digits bounded by 3
for base, top in [(2, 20), (3, 12)]:
    rep = niederreiter_check(base, top, 3)
    print(f"powers of {base} up to {base}^{top}: failures = {[r.q for r in rep.failures]}")

# Orbit growth: the count of strings with q <= N grows like N^(2 delta)
fit = counting_fit(2, [10**4, 10**5, 10**6, 10**7])
print(f"log-log slope {fit.slope:.4f} vs 2*delta_2 = {fit.reference:.4f}")

"""
Dimension of the bounded-type Cantor sets
=========================================

Three estimates of delta_A: a collocated transfer operator, a cylinder-cover
computation using exact continuants, and the large-A expansion.
"""

from zaremba import delta_asymptotic, delta_cylinder, delta_transfer, lambda_leading

# The leading eigenvalue of L_s drops through 1 exactly at s = delta_A
for s in (0.4, 0.5, 0.5312805, 0.6):
    lam, _ = lambda_leading(2, s, 48)
    print(f"lambda(2, {s}) = {lam:.10f}")

print()
print(f"{'A':>3} {'transfer':>14} {'cylinder':>14} {'asymptotic':>12}")
for A in (2, 3, 4, 5, 10, 20, 50):
    t = delta_transfer(A).value
    c = delta_cylinder(A).value if A <= 5 else float("nan")
    print(f"{A:>3} {t:14.10f} {c:14.10f} {delta_asymptotic(A):12.6f}")

# The cylinder estimate improves geometrically with depth
for k in (4, 8, 12, 16, 20):
    est = delta_cylinder(2, k)
    print(f"depth {k:2d}: {est.value:.12f}  (plain cover root {est.diagnostics['cover_root']:.6f})")

"""
Continued fractions and the generator matrices
==============================================

Digit strings, convergents and 2x2 matrix products are three views of the
same object.
"""

from zaremba import cf_eval, cf_expand, rational_membership, to_matrix

# The Euclidean algorithm gives the canonical digits of 5/7
digits = cf_expand(5, 7)
print("5/7 =", digits)

# Running the continuant recurrence forward recovers the convergents
pair, convergents = cf_eval(digits)
print("convergents:", [f"{c.p}/{c.q}" for c in convergents])

# The ordered product of [[0, 1], [1, a]] carries (p, q) in its second column
# and the previous convergent in the first
m = to_matrix(digits)
print("matrix:", m, "det =", m.det())

# Every rational has a second expansion ending in 1.  Membership with digits
# bounded by A tries both:
for p, q, A in [(1, 6, 5), (1, 7, 5), (2, 7, 5)]:
    print(f"{p}/{q} with digits <= {A}:", rational_membership(p, q, A))

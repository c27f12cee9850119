"""Exact laws of the running maximum and minimum of a short walk.

Run with ``python3 notebooks/01_exact_laws.py``.
"""

from fractions import Fraction

from walkextremes import joint_pmf, marginal_max_pmf, pmf_moments, WalkParams
from walkextremes.oracle import enumerate_exact

w = WalkParams.from_p(Fraction(1, 3))

# The joint law of (M+, M-) as a matrix: rows index the maximum, columns the
# size of the minimum.
for n in (1, 2, 3):
    print(f"n = {n}")
    for row in joint_pmf(n, w).matrix():
        print("   ", "  ".join(f"{str(x):>6}" for x in row))

# Two independent routes to the law of M+, checked against brute force.
n = 12
by_reflection = marginal_max_pmf(n, "plus", w, "reflection")
by_band = marginal_max_pmf(n, "plus", w, "band")
brute = enumerate_exact(n, w, "max")
print("reflection == band == enumeration:", by_reflection == by_band == brute)

# With downward drift the maximum stays bounded while the minimum grows linearly.
for n in (10, 50, 200):
    hi = pmf_moments(marginal_max_pmf(n, "plus", w)).mean
    lo = pmf_moments(marginal_max_pmf(n, "minus", w)).mean
    print(f"n={n:4d}  E(M+)={float(hi):.6f}  E(M-)={float(lo):9.4f}  n/3 + 1 = {n / 3 + 1:9.4f}")

"""Reflected walks: strong (|S + X|) against weak (max(S + X, 0)).

Run with ``python3 notebooks/02_reflected_limits.py``.  The n = 10**4 rows take
several seconds each.
"""

import math
from fractions import Fraction

from walkextremes import Mode, WalkParams, pmf_moments, strong_pmf, weak_pmf
from walkextremes.asymptotics import catalan_constant, second_moment_probe, sech_limit_probe

G = catalan_constant()
half = WalkParams.from_p(Fraction(1, 2))

print(f"sqrt(pi/2) = {math.sqrt(math.pi / 2):.6f}   2G = {2 * G:.6f}")
print(f"{'n':>6} {'kind':>6} {'E(M)/sqrt n':>12} {'E(M^2)/n':>10}")
for n in (100, 1000, 10**4):
    for kind, fn, mode in (("strong", strong_pmf, Mode.STRONG), ("weak", weak_pmf, Mode.WEAK)):
        m = pmf_moments(fn(n, half.with_mode(mode), arithmetic="float"))
        print(f"{n:>6} {kind:>6} {m.mean / math.sqrt(n):12.6f} {m.second_moment / n:10.6f}")

# The same limits seen through the sech sums, as t -> 0.
for t in (0.1, 0.01, 0.001):
    print(
        f"t={t:<6} mean probe strong {sech_limit_probe(t, 'strong'):.6f} weak {sech_limit_probe(t, 'weak'):.6f}"
        f"  second-moment probe {second_moment_probe(t, 'strong'):.6f}"
    )

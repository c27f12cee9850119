"""Maxima over excursion cycles, and Monte Carlo for walks without exact laws.

Run with ``python3 notebooks/03_cycles_and_simulation.py``.
"""

import math
from fractions import Fraction

from walkextremes import WalkParams
from walkextremes.cycles import CycleLaw, cycle_max_moments, knuth_asymptotic
from walkextremes.montecarlo import PersistentParams, SimConfig, Statistic, simulate

w = WalkParams.from_p(Fraction(1, 3))
law = CycleLaw.of(w)
print("P{M_T = k}:", [str(law.pmf(k)) for k in range(1, 6)])
m = cycle_max_moments(w)
print(f"E(M_T) = {m.mean:.10f}  E(M_T^2) = {m.second_moment:.10f}")

# The record over n cycles grows like log2 n; the additive constant comes out
# as gamma/ln 2 - 1/2.
for k in (10, 14, 20):
    est = knuth_asymptotic(2**k)
    print(f"n=2^{k}: exact {est.exact_mean:.6f}  log2 n + gamma/ln2 - 1/2 = {est.shifted_asymptotic:.6f}")

# Persistent walk: steps repeat their direction with probability alpha.
n, trials = 2000, 20000
for alpha in (0.3, 0.5, 0.7):
    s = simulate(SimConfig(PersistentParams(alpha), n, trials, seed=1))[Statistic.MAX_PLUS]
    target = math.sqrt(alpha / (1 - alpha)) * math.sqrt(2 / math.pi)
    print(f"alpha={alpha}: E(M+)/sqrt n = {s.mean / math.sqrt(n):.4f} +- {s.stderr / math.sqrt(n):.4f}  limit {target:.4f}")

"""Cycle maxima of an asymmetric walk (p < q).

A cycle runs from 0 to the first return T; M_T is the largest |S_j| on it,
conditional on T < infinity.  With x = p/q,

    P{M_T < k} = (1 - x**(k-1)) / (1 - x**k),   k >= 1.

The maximum over n independent cycles grows like log base 1/x of n, which
is the mechanism behind E(M_n) = O(ln n) for reflected asymmetric walks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParams, MethodDisagreement, SymmetricUnsupported
from .walkcore import WalkParams

TAIL_CUTOFF = 1e-15
GAMMA_N = 1000


def _ratio(params: WalkParams) -> Fraction:
    if params.p == params.q:
        raise SymmetricUnsupported("cycle laws need p < q; at p = q the cycle length has infinite mean")
    if params.p > params.q or params.p == 0:
        raise InvalidParams("cycle laws need 0 < p < q")
    return params.p / params.q


@dataclass(frozen=True)
class CycleLaw:
    x: Fraction

    def __post_init__(self):
        if not 0 < self.x < 1:
            raise InvalidParams("x = p/q must lie in (0, 1)")

    @classmethod
    def of(cls, params: WalkParams) -> "CycleLaw":
        return cls(_ratio(params))

    def cdf(self, k: int) -> Fraction:
        """P{M_T < k}."""
        if k < 1:
            return Fraction(0)
        x = self.x
        return (1 - x ** (k - 1)) / (1 - x**k)

    def tail(self, k: int) -> Fraction:
        """P{M_T >= k} = x**(k-1) (1 - x) / (1 - x**k)."""
        return 1 - self.cdf(k)

    def pmf(self, k: int) -> Fraction:
        """P{M_T = k} in the closed product form."""
        if k < 1:
            return Fraction(0)
        x = self.x
        return (1 / x - 1) * (x**k / (1 - x**k) - x ** (k + 1) / (1 - x ** (k + 1)))


def cycle_max_distribution(k: int, params: WalkParams) -> tuple[Fraction, Fraction]:
    """(P{M_T < k}, P{M_T = k}) exactly."""
    if k < 1:
        raise InvalidParams("k must be >= 1")
    law = CycleLaw.of(params)
    cdf, pmf = law.cdf(k), law.pmf(k)
    if pmf != law.cdf(k + 1) - cdf:
        raise MethodDisagreement(f"cycle pmf at k={k} does not telescope")
    return cdf, pmf


def _lambert_sums(x: float, tol: float):
    """(sum x^k/(1-x^k), sum k x^k/(1-x^k), terms used), ascending k."""
    s0, s1 = [], []
    k = 1
    while True:
        t = x**k / -math.expm1(k * math.log(x))
        s0.append(t)
        s1.append(k * t)
        if k * t < tol * (1 - x):
            break
        k += 1
    return math.fsum(s0), math.fsum(s1), k


@dataclass(frozen=True)
class CycleMoments:
    mean: float
    second_moment: float
    terms: int


def cycle_max_moments(params: WalkParams, tol: float = 1e-16) -> CycleMoments:
    """E(M_T) and E(M_T**2) from Lambert-type series."""
    if tol <= 0:
        raise InvalidParams("tol must be positive")
    x = float(_ratio(params))
    s0, s1, terms = _lambert_sums(x, tol)
    c = (1 - x) / x
    return CycleMoments(c * s0, c * (2 * s1 - s0), terms)


def lambert_auxiliary(params: WalkParams, tol: float = 1e-16) -> float:
    """sum k x^k / (1 - x^k) times (1 - x)/x; at x = 1/2 this is sum k/(2^k - 1)."""
    x = float(_ratio(params))
    _, s1, _ = _lambert_sums(x, tol)
    return (1 - x) / x * s1


def _copies_tail(n: int, x: float) -> float:
    terms = []
    k = 1
    while True:
        t = x ** (k - 1) * (1 - x) / -math.expm1(k * math.log(x))
        term = -math.expm1(n * math.log1p(-t)) if t < 1 else 1.0
        terms.append(term)
        if term < TAIL_CUTOFF and k > 1:
            break
        k += 1
    return math.fsum(reversed(terms))


def _copies_pmf(n: int, x: float) -> float:
    def cdf(k):
        return 0.0 if k < 2 else -math.expm1((k - 1) * math.log(x)) / -math.expm1(k * math.log(x))

    terms = []
    k = 1
    while True:
        hi, lo = cdf(k + 1) ** n, cdf(k) ** n
        terms.append(k * (hi - lo))
        if 1 - hi < TAIL_CUTOFF / (k + 1):
            break
        k += 1
    return math.fsum(reversed(terms))


def record_of_copies_mean(n: int, params: WalkParams, route: str = "tail") -> float:
    """E of the largest of n independent cycle maxima.

    ``tail`` sums P{max >= k} = 1 - (1 - P{M_T >= k})**n; ``pmf`` weights k by
    P{max = k} = cdf(k+1)**n - cdf(k)**n.  Both stop once terms fall below
    1e-15.
    """
    if n < 1:
        raise InvalidParams("n must be >= 1")
    x = float(_ratio(params))
    if route == "tail":
        return _copies_tail(n, x)
    if route == "pmf":
        return _copies_pmf(n, x)
    raise InvalidParams(f"unknown route {route!r}")


def euler_gamma(N: int = GAMMA_N) -> float:
    """H_N - ln N with Euler-Maclaurin corrections through 1/(120 N**4)."""
    h = math.fsum(1.0 / k for k in range(N, 0, -1))
    return h - math.log(N) - 1 / (2 * N) + 1 / (12 * N**2) - 1 / (120 * N**4)


@dataclass(frozen=True)
class KnuthEstimate:
    """Exact mean of the max of n cycle maxima at p = 1/3 against log2 n + gamma/ln 2 + 1/2.

    ``shifted_asymptotic`` drops the constant by 1: the sum over k >= 1 of
    1 - (1 - 1/(2^k - 1))**n tracks the trie sum over j >= 0 of
    1 - (1 - 2**-j)**n minus its j = 0 term, which is exactly 1.
    """

    n: int
    exact_mean: float
    asymptotic_mean: float
    residual: float
    shifted_asymptotic: float
    shifted_residual: float


def knuth_asymptotic(n: int) -> KnuthEstimate:
    if n < 2:
        raise InvalidParams("n must be >= 2")
    params = WalkParams(Fraction(1, 3), Fraction(2, 3))
    exact = record_of_copies_mean(n, params)
    base = math.log2(n) + euler_gamma() / math.log(2)
    asym = base + 0.5
    shifted = base - 0.5
    return KnuthEstimate(n, exact, asym, exact - asym, shifted, exact - shifted)

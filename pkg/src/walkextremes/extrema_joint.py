"""Exact law of the running maximum and absolute minimum of the plain walk.

Two independent routes compute the joint pmf of (M+, M-):

* ``method="recurrence"`` steps phi(n, a, b) forward in n using the two-sided
  first-exit law psi = f + g, built from the first-passage counts C[n, j].
* ``method="band"`` takes second differences of the band-confinement
  probabilities P{M+ < a, M- < b}, one backward DP per band width.

The marginal of M+ uses the reflection principle.  The textbook expression
``omega(n, a) - omega(n, a + 1)`` counts the k = a term of omega twice (at
n = 2 it gives P{M+ = 1} = p - 2p**2 instead of pq), so the default is the
corrected ``omega_hat = omega - P{S_n = a}``; the printed form is kept as
:func:`_printed_marginal` for the regression tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidParams, TooLarge
from .exactnum import PowerSeries, binom, series_div, series_sqrt
from .walkcore import (
    JointPmf,
    Mode,
    Pmf,
    WalkParams,
    one_sided_survival,
    survival_by_start,
)

CROSS_MOMENT_BAND_MAX_N = 512
FLOAT_TAIL_CUTOFF = 1e-15


def _plain(params: WalkParams):
    if params.mode is not Mode.PLAIN:
        raise InvalidParams("extrema of the plain walk need mode=plain")


def _no_zero_steps(params: WalkParams, what: str):
    if params.r:
        raise InvalidParams(f"{what} covers +-1 steps only; use method='band' for lazy walks")


@dataclass(frozen=True)
class ExitLawTerms:
    """Pieces of the first-exit law of the band (-b, a) at time n."""

    n: int
    a: int
    b: int
    f_value: Fraction
    g_value: Fraction
    psi_value: Fraction


@dataclass(frozen=True)
class SymmetricMaxSeries:
    """xi[n] = 2**n E(M_n+), eta[n] = 2**n E((M_n+)**2) at p = 1/2."""

    xi: tuple
    eta: tuple


@lru_cache(maxsize=None)
def _C(n: int, j: int, p: Fraction, q: Fraction) -> Fraction:
    if j <= 0 or j > n or (n - j) % 2:
        return Fraction(0)
    h = (n - j) // 2
    return Fraction(j, n) * binom(n, h) * binom(n - h, h + j) * (p * q) ** h


def first_passage_C(n: int, j: int, params: WalkParams) -> Fraction:
    """(j/n) C(n,h) C(n-h,h+j) (pq)**h with h = (n-j)/2; zero off the lattice.

    Equals P{first passage to level +j happens at time n} / p**j.  Zero when
    n - j is odd, j > n, or j <= 0.
    """
    if n < 1:
        raise InvalidParams("C[n, j] needs n >= 1")
    _no_zero_steps(params, "C[n, j]")
    return _C(n, j, params.p, params.q)


@lru_cache(maxsize=None)
def _exit_terms(n: int, a: int, b: int, p: Fraction, q: Fraction) -> ExitLawTerms:
    pq = p * q
    zero = Fraction(0)
    if n < min(a, b):
        return ExitLawTerms(n, a, b, zero, zero, zero)
    f = g = zero
    if n >= a:
        top = (n - a) // (2 * (a + b))
        s = zero
        for k in range(top + 1):
            base = 2 * (a + b) * k
            s += pq ** ((a + b) * k) * _C(n, base + a, p, q) - pq ** ((a + b) * k + b) * _C(n, base + a + 2 * b, p, q)
        f = p**a * s
    if n >= b:
        top = (n - b) // (2 * (a + b))
        s = zero
        for k in range(top + 1):
            base = 2 * (a + b) * k
            s += pq ** ((a + b) * k) * _C(n, base + b, p, q) - pq ** ((a + b) * k + a) * _C(n, base + b + 2 * a, p, q)
        g = q**b * s
    return ExitLawTerms(n, a, b, f, g, f + g)


def exit_terms(n: int, a: int, b: int, params: WalkParams) -> ExitLawTerms:
    """f (exit through +a), g (exit through -b) and psi = f + g at time n.

    Method of images: the k-th image pair of the upper sum carries
    (pq)**((a+b)k) and (pq)**((a+b)k + b).  Weighting the second image by a
    bare (pq)**b only agrees for k = 0 and breaks phi(3, 0, 1).
    """
    if n < 1 or a < 0 or b < 0 or (a, b) == (0, 0):
        raise InvalidParams("psi needs n >= 1, a, b >= 0, (a, b) != (0, 0)")
    _no_zero_steps(params, "psi")
    return _exit_terms(n, a, b, params.p, params.q)


def exit_probability_psi(n: int, a: int, b: int, params: WalkParams) -> Fraction:
    """Probability that the walk first leaves the band (-b, a) at time n."""
    return exit_terms(n, a, b, params).psi_value


def _joint_recurrence(n: int, params: WalkParams) -> dict:
    p, q = params.p, params.q
    phi = {(0, 0): Fraction(1)}
    for m in range(n):
        t = m + 1
        new = {}
        for a in range(t + 1):
            for b in range(t + 1):
                if a == 0 and b == 0:
                    continue
                v = (
                    phi.get((a, b), Fraction(0))
                    - _exit_terms(t, a + 1, b + 1, p, q).psi_value
                    - _exit_terms(t, a, b, p, q).psi_value
                    + _exit_terms(t, a + 1, b, p, q).psi_value
                    + _exit_terms(t, a, b + 1, p, q).psi_value
                )
                if v:
                    new[a, b] = v
        phi = new
    return phi


def _confinement_table(n: int, params: WalkParams, arithmetic: str, amax: int, bmax: int) -> dict:
    """G[a, b] = P{M+ < a, M- < b} for 1 <= a <= amax, 1 <= b <= bmax."""
    table = {}
    for width in range(2, amax + bmax + 1):
        pairs = [(width - b, b) for b in range(max(1, width - amax), min(bmax, width - 1) + 1)]
        if not pairs:
            continue
        u = survival_by_start(n, width, params, arithmetic)
        for a, b in pairs:
            table[a, b] = u[b]
    return table


def _joint_band(n: int, params: WalkParams) -> dict:
    top = n + 1
    G = _confinement_table(n, params, "exact", top, top)

    def g(a, b):
        if a <= 0 or b <= 0:
            return Fraction(0)
        return G[a, b]

    out = {}
    for a in range(n + 1):
        for b in range(n + 1):
            v = g(a + 1, b + 1) - g(a, b + 1) - g(a + 1, b) + g(a, b)
            if v:
                out[a, b] = v
    return out


def joint_pmf(n: int, params: WalkParams, method: str = "auto") -> JointPmf:
    """Exact table phi(n, a, b) = P{M_n+ = a, M_n- = b}.

    ``auto`` uses the first-exit recurrence for +-1 steps and the band DP when
    the walk can pause (r > 0).
    """
    _plain(params)
    if n < 0:
        raise InvalidParams("n must be >= 0")
    if method == "auto":
        method = "band" if params.r else "recurrence"
    if method == "recurrence":
        _no_zero_steps(params, "the first-exit recurrence")
        return JointPmf(n, _joint_recurrence(n, params))
    if method == "band":
        return JointPmf(n, _joint_band(n, params), lazy=params.lazy)
    raise ValueError(f"unknown method {method!r}")


def omega(n: int, c: int, x: Fraction, y: Fraction) -> Fraction:
    """sum_{k=c}^{n} [1 + (y/x)**(k-c)] C(n, (n+k)/2) x**((n+k)/2) y**((n-k)/2).

    The ratio is folded into the exponents so x = 0 is harmless.
    """
    total = Fraction(0)
    for k in range(c, n + 1):
        if (n + k) % 2:
            continue
        up, down = (n + k) // 2, (n - k) // 2
        total += binom(n, up) * (x**up * y**down + x ** (up - k + c) * y ** (down + k - c))
    return total


def omega_corrected(n: int, c: int, x: Fraction, y: Fraction) -> Fraction:
    """P{max >= c}: omega minus the doubly counted k = c term (c >= 0)."""
    term = binom(n, (n + c) // 2) * x ** ((n + c) // 2) * y ** ((n - c) // 2) if (n + c) % 2 == 0 and c <= n else 0
    return omega(n, c, x, y) - term


def _roles(side: str, params: WalkParams):
    if side == "plus":
        return params.p, params.q
    if side == "minus":
        return params.q, params.p
    raise ValueError("side must be 'plus' or 'minus'")


def _printed_marginal(n: int, side: str, params: WalkParams) -> dict:
    x, y = _roles(side, params)
    return {a: omega(n, a, x, y) - omega(n, a + 1, x, y) for a in range(n + 1)}


def marginal_max_pmf(n: int, side: str, params: WalkParams, method: str = "auto") -> Pmf:
    """Exact pmf of M_n+ (``side="plus"``) or M_n- (``side="minus"``)."""
    _plain(params)
    if n < 0:
        raise InvalidParams("n must be >= 0")
    if method == "auto":
        method = "band" if params.r else "reflection"
    if method == "reflection":
        _no_zero_steps(params, "the reflection formula")
        x, y = _roles(side, params)
        tails = [omega_corrected(n, a, x, y) for a in range(n + 2)]
        return Pmf.from_dict({a: tails[a] - tails[a + 1] for a in range(n + 1)})
    if method == "band":
        below = one_sided_survival(n, params, side, "exact")
        return Pmf.from_dict({a: below[a + 1] - below[a] for a in range(n + 1)})
    raise ValueError(f"unknown method {method!r}")


def symmetric_max_series(nmax: int) -> SymmetricMaxSeries:
    """Coefficients of the generating functions of 2**n E(M_n+) and 2**n E((M_n+)**2)."""
    order = nmax + 1
    root = series_sqrt(PowerSeries([1, 0, -4], order))
    denom = PowerSeries([1, -2], order) ** 2 * 2
    xi = series_div(PowerSeries([-1, 2], order) + root, denom)
    eta = series_div(PowerSeries([1, 2], order) - root, denom)
    to_int = lambda s: tuple(int(s[k]) for k in range(nmax + 1))  # noqa: E731
    return SymmetricMaxSeries(to_int(xi), to_int(eta))


def symmetric_max_mean(n: int) -> Fraction:
    """E(M_n+) at p = 1/2, from the xi generating function."""
    if n < 0:
        raise InvalidParams("n must be >= 0")
    return Fraction(symmetric_max_series(n).xi[n], 2**n)


def symmetric_max_second_moment(n: int) -> Fraction:
    if n < 0:
        raise InvalidParams("n must be >= 0")
    return Fraction(symmetric_max_series(n).eta[n], 2**n)


def max_abs_pmf(n: int, params: WalkParams, arithmetic: str = "exact") -> Pmf:
    """Law of max_{j<=n} |S_j| via P{max|S| <= a} = H(n, -(a+1), a+1)."""
    _plain(params)
    at_most = []
    for a in range(n + 1):
        at_most.append(survival_by_start(n, 2 * a + 2, params, arithmetic)[a + 1])
    mass = {0: at_most[0]}
    for a in range(1, n + 1):
        mass[a] = at_most[a] - at_most[a - 1]
    return Pmf.from_dict(mass, exact=arithmetic == "exact")


def _cross_moment_band(n: int, params: WalkParams, arithmetic: str):
    plus = one_sided_survival(n, params, "plus", arithmetic)
    minus = one_sided_survival(n, params, "minus", arithmetic)
    amax = bmax = n
    if arithmetic == "float":
        amax = _float_cutoff(plus, n)
        bmax = _float_cutoff(minus, n)
    G = _confinement_table(n, params, arithmetic, amax, bmax)
    if arithmetic == "exact":
        total = Fraction(0)
        for a in range(1, amax + 1):
            for b in range(1, bmax + 1):
                total += 1 - plus[a] - minus[b] + G[a, b]
        return total
    terms = [1.0 - plus[a] - minus[b] + G[a, b] for a in range(1, amax + 1) for b in range(1, bmax + 1)]
    return math.fsum(terms)


def _float_cutoff(below: list, n: int) -> int:
    """Smallest A with n * sum_{a > A} P{M >= a} under the cutoff."""
    tail = 0.0
    for a in range(n, 0, -1):
        tail += 1.0 - below[a]
        if n * tail >= FLOAT_TAIL_CUTOFF:
            return min(n, a)
    return 1


def cross_moment(
    n: int,
    params: WalkParams,
    method: str = "band",
    arithmetic: str = "exact",
    trials: int = 100_000,
    seed: int = 0,
):
    """E(M_n+ M_n-) from band confinement (exact or float) or by simulation."""
    _plain(params)
    if method == "band":
        if n > CROSS_MOMENT_BAND_MAX_N:
            raise TooLarge(f"band cross moment is capped at n={CROSS_MOMENT_BAND_MAX_N}")
        if n == 0:
            return Fraction(0) if arithmetic == "exact" else 0.0
        return _cross_moment_band(n, params, arithmetic)
    if method == "montecarlo":
        from .montecarlo import SimConfig, Statistic, simulate

        result = simulate(SimConfig(params, n, trials, seed, (Statistic.CROSS_PRODUCT,)))
        return result[Statistic.CROSS_PRODUCT].mean
    raise ValueError(f"unknown method {method!r}")

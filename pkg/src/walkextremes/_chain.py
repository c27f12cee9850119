"""Machinery shared by the strong and weak reflected walks.

Both walks live on {0, 1, ...}; they differ only in what happens at 0:
strong (S -> |S + X|) moves to 1 unless the step is 0, weak
(S -> max(S + X, 0)) moves to 1 only on an up-step.  ``weak`` selects the
variant everywhere below.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numba
import numpy as np

from .errors import InvalidParams, TooLarge
from .exactnum import PowerSeries, theta_series
from .walkcore import Pmf, WalkParams

AUTO_EXACT_MAX_N = 512
SERIES_MAX_N = 32
FLOAT_TAIL_CUTOFF = 1e-14


@dataclass(frozen=True)
class ReflectChain:
    """Transition matrix on {0..a} with the barrier a made absorbing."""

    a: int
    matrix: tuple
    weak: bool = False

    def __post_init__(self):
        if self.a < 1:
            raise InvalidParams("barrier must be >= 1")
        if len(self.matrix) != self.a + 1:
            raise InvalidParams("matrix must be (a+1) x (a+1)")
        for i, row in enumerate(self.matrix):
            if len(row) != self.a + 1 or any(x < 0 for x in row):
                raise InvalidParams(f"row {i} is malformed")
            if sum(row, Fraction(0)) != 1:
                raise InvalidParams(f"row {i} is not stochastic")
        last = self.matrix[self.a]
        if last[self.a] != 1:
            raise InvalidParams("barrier state must be absorbing")

    @classmethod
    def build(cls, a: int, params: WalkParams, weak: bool) -> "ReflectChain":
        p, q, r = params.p, params.q, params.r
        rows = []
        for i in range(a + 1):
            row = [Fraction(0)] * (a + 1)
            if i == a:
                row[a] = Fraction(1)
            elif i == 0:
                if weak:
                    row[0] += q + r
                    row[1] += p
                else:
                    row[0] += r
                    row[1] += p + q
            else:
                row[i - 1] += q
                row[i] += r
                row[i + 1] += p
            rows.append(tuple(row))
        return cls(a, tuple(rows), weak)

    def hit_probability(self, n: int) -> Fraction:
        """e_0' K**n e_a, by n vector-matrix products."""
        v = [Fraction(0)] * (self.a + 1)
        v[0] = Fraction(1)
        for _ in range(n):
            w = [Fraction(0)] * (self.a + 1)
            for i, m in enumerate(v):
                if m:
                    for j, k in enumerate(self.matrix[i]):
                        if k:
                            w[j] += m * k
            v = w
        return v[self.a]


def _check(n: int, params: WalkParams):
    if n < 1:
        raise InvalidParams("reflected pmfs need n >= 1")


def hit_probability_exact(n: int, a: int, params: WalkParams, weak: bool) -> Fraction:
    """P{M_n >= a} by iterating the chain with barrier a on scaled integers."""
    if a <= 0:
        return Fraction(1)
    if a > n:
        return Fraction(0)
    P, Q, R, d = params.scaled()
    at_zero = (Q + R, P) if weak else (R, P + Q)
    v = [0] * (a + 1)
    v[0] = 1
    absorbed = 0
    for t in range(n):
        w = [0] * (a + 1)
        m = v[0]
        if m:
            w[0] += at_zero[0] * m
            w[1] += at_zero[1] * m
        for x in range(1, min(t + 1, a)):
            m = v[x]
            if m:
                w[x - 1] += Q * m
                w[x] += R * m
                w[x + 1] += P * m
        absorbed = absorbed * d + w[a]
        w[a] = 0
        v = w
    return Fraction(absorbed, d**n)


@numba.njit(cache=True)
def _hit_probabilities_kernel(n, p, q, r, weak, amax, cutoff):
    out = np.zeros(amax + 2)
    out[0] = 1.0
    v = np.zeros(amax + 2)
    w = np.zeros(amax + 2)
    for a in range(1, amax + 1):
        v[:] = 0.0
        v[0] = 1.0
        absorbed = 0.0
        for t in range(n):
            w[: a + 1] = 0.0
            m = v[0]
            if weak:
                w[0] += (q + r) * m
                w[1] += p * m
            else:
                w[0] += r * m
                w[1] += (p + q) * m
            top = min(t + 1, a)
            for x in range(1, top):
                m = v[x]
                if m != 0.0:
                    w[x - 1] += q * m
                    w[x] += r * m
                    w[x + 1] += p * m
            absorbed += w[a]
            w[a] = 0.0
            v, w = w, v
            if absorbed > 1.0 - 1e-16:
                absorbed = 1.0
                break
        out[a] = absorbed
        if absorbed < cutoff:
            return out[: a + 1]
    return out[: amax + 1]


def hit_probabilities_float(n: int, params: WalkParams, weak: bool) -> np.ndarray:
    """h[a] = P{M_n >= a} for a = 0, 1, ... until h[a] < 1e-14 (or a = n)."""
    p, q, r = params.floats()
    return _hit_probabilities_kernel(n, p, q, r, weak, n, FLOAT_TAIL_CUTOFF)


def pmf_from_tails(tails, exact: bool) -> Pmf:
    """tails[a] = P{M >= a}, a = 0..A; mass beyond A is taken as 0."""
    mass = {a: tails[a] - tails[a + 1] for a in range(len(tails) - 1)}
    mass[len(tails) - 1] = tails[-1]
    return Pmf.from_dict(mass, exact=exact)


def pmf_matrix(n: int, params: WalkParams, weak: bool, arithmetic: str = "exact") -> Pmf:
    _check(n, params)
    if arithmetic == "exact":
        tails = [hit_probability_exact(n, a, params, weak) for a in range(n + 1)]
        return pmf_from_tails(tails, exact=True)
    if arithmetic == "float":
        # roundoff can break monotonicity where h is within 1e-16 of 1
        tails = np.minimum.accumulate(hit_probabilities_float(n, params, weak))
        return pmf_from_tails(tails.tolist(), exact=False)
    raise ValueError(f"arithmetic must be 'exact' or 'float', not {arithmetic!r}")


def joint_table_recurrence(n: int, params: WalkParams, weak: bool) -> list:
    """table[a][x] = P{S_n = x, M_n = a} (scaled by d**n), stepped from n = 0.

    At r = 0 one step from the point mass at (0, 0) gives the textbook
    starting tables (strong: delta at (1, 1); weak: p at (1, 1), q at (0, 0))
    and the update rules below reduce to the textbook ones; the r terms are
    the pause-in-place extension for lazy walks.
    """
    P, Q, R, d = params.scaled()
    up0 = P if weak else P + Q
    stay0 = Q + R if weak else R
    F = [[1]]
    for t in range(n):
        top = min(t + 1, n)
        G = [[0] * (a + 1) for a in range(top + 1)]
        for a in range(len(F)):
            row = F[a]
            for x in range(a + 1):
                m = row[x]
                if not m:
                    continue
                if x == 0:
                    G[a][0] += stay0 * m
                    if a >= 1:
                        G[a][1] += up0 * m
                    else:
                        G[1][1] += up0 * m
                    continue
                G[a][x - 1] += Q * m
                if R:
                    G[a][x] += R * m
                if x < a:
                    G[a][x + 1] += P * m
                else:
                    G[a + 1][x + 1] += P * m
        F = G
    return F


def pmf_recurrence(n: int, params: WalkParams, weak: bool) -> Pmf:
    _check(n, params)
    *_, d = params.scaled()
    table = joint_table_recurrence(n, params, weak)
    scale = d**n
    return Pmf.from_dict({a: Fraction(sum(row), scale) for a, row in enumerate(table)})


# --------------------------------------------------------------------------
# theta-series method

def _theta_powers(theta: PowerSeries, kmax: int) -> list:
    powers = [PowerSeries.constant(1, theta.order), theta]
    for _ in range(2, kmax + 1):
        powers.append(powers[-1] * theta)
    return powers


def barrier_series(order: int, params: WalkParams, weak: bool, amax: int) -> list:
    """U[a] with P{M_n = a} = [lam**n] (U[a] - U[a+1]) / (1 - lam), a = 1..amax.

    U[a] = (theta**2 - 4pq) times the a-th bracket term of the
    generating function, computed to ``order``.
    """
    p, q = params.p, params.q
    if params.r or p == 0 or q == 0:
        raise InvalidParams("the theta-series method needs r = 0 and 0 < p, q")
    theta = theta_series(p, q, order)
    order = theta.order
    th = _theta_powers(theta, 2 * amax + 5)
    lead = th[2] - 4 * p * q
    out = [None]
    for a in range(1, amax + 1):
        if weak:
            num = th[a] * (2**a * p**a)
            den = (theta - 2 * p) * (2 ** (2 * a + 1) * p**a * q ** (a + 1)) + th[2 * a + 1] * (theta - 2 * q)
        else:
            num = th[a] * (2**a * p ** (a - 1))
            den = (th[2] - 4 * p * p) * (2 ** (2 * a) * p ** (a - 1) * q ** (a + 1)) + th[2 * a] * (th[2] - 4 * q * q)
        out.append(lead * (num / den))
    return out


def series_pmfs(nmax: int, params: WalkParams, weak: bool) -> list:
    """Pmfs of M_n for n = 1..nmax (index n), all from one set of series."""
    if nmax < 1:
        raise InvalidParams("n must be >= 1")
    if nmax > SERIES_MAX_N:
        raise TooLarge(f"exact series method is capped at n={SERIES_MAX_N}")
    order = nmax + 1
    U = barrier_series(order, params, weak, nmax + 1)
    # cumulative sums in n implement the 1/(1 - lam) factor
    cum = [None] + [U[a].partial_sums() for a in range(1, nmax + 2)]
    out = [None]
    for n in range(1, nmax + 1):
        mass = {a: cum[a][n] - cum[a + 1][n] for a in range(1, n + 1)}
        if weak:
            mass[0] = params.q**n
        else:
            mass[0] = 1 - sum(mass.values(), Fraction(0))
        out.append(Pmf.from_dict(mass))
    return out


def pmf_series(n: int, params: WalkParams, weak: bool) -> Pmf:
    _check(n, params)
    return series_pmfs(n, params, weak)[n]


def resolve_method(n: int, method: str, arithmetic: str | None):
    if method == "auto":
        if arithmetic == "float":
            return "matrix", "float"
        if n <= AUTO_EXACT_MAX_N:
            return "recurrence", arithmetic or "exact"
        return "matrix", arithmetic or "float"
    return method, arithmetic or "exact"

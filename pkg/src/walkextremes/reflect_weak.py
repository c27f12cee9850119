"""Maximum of the weakly reflected walk S_j = max(S_{j-1} + X_j, 0).

Same three routes as the strong case; only row 0 of the chain differs (a
down-step at 0 is rejected instead of bounced).  P{M_n = 0} = q**n.
"""

from __future__ import annotations

from fractions import Fraction

from . import _chain
from ._chain import ReflectChain
from .errors import InvalidParams
from .exactnum import PowerSeries, theta_series
from .walkcore import Mode, Pmf, WalkParams

__all__ = [
    "weak_chain",
    "weak_hit_probability",
    "weak_pmf",
    "weak_pmf_matrix",
    "weak_pmf_recurrence",
    "weak_pmf_series",
    "weak_series_pmfs",
    "weak_table",
    "weak_gf_diagonal",
    "weak_gf_tilde",
]


def _params(params: WalkParams) -> WalkParams:
    if params.mode not in (Mode.PLAIN, Mode.WEAK):
        raise InvalidParams(f"weak reflection does not apply to mode {params.mode.value!r}")
    return params


def weak_chain(a: int, params: WalkParams) -> ReflectChain:
    """K_a with row 0 = (q + r at 0, p at 1)."""
    return ReflectChain.build(a, _params(params), weak=True)


def weak_hit_probability(n: int, a: int, params: WalkParams) -> Fraction:
    return _chain.hit_probability_exact(n, a, _params(params), weak=True)


def weak_pmf_matrix(n: int, params: WalkParams, arithmetic: str = "exact") -> Pmf:
    return _chain.pmf_matrix(n, _params(params), weak=True, arithmetic=arithmetic)


def weak_table(n: int, params: WalkParams) -> dict:
    """{(x, a): P{S_n = x, M_n = a}} with zero entries dropped."""
    params = _params(params)
    *_, d = params.scaled()
    table = _chain.joint_table_recurrence(n, params, weak=True)
    scale = d**n
    return {(x, a): Fraction(m, scale) for a, row in enumerate(table) for x, m in enumerate(row) if m}


def weak_pmf_recurrence(n: int, params: WalkParams) -> Pmf:
    return _chain.pmf_recurrence(n, _params(params), weak=True)


def weak_pmf_series(n: int, params: WalkParams) -> Pmf:
    return _chain.pmf_series(n, _params(params), weak=True)


def weak_series_pmfs(nmax: int, params: WalkParams) -> list:
    return _chain.series_pmfs(nmax, _params(params), weak=True)


def weak_pmf(n: int, params: WalkParams, method: str = "auto", arithmetic: str | None = None) -> Pmf:
    """Dispatch: exact recurrence up to n = 512, float matrix beyond."""
    method, arithmetic = _chain.resolve_method(n, method, arithmetic)
    if method == "matrix":
        return weak_pmf_matrix(n, params, arithmetic)
    if arithmetic != "exact":
        raise InvalidParams(f"method {method!r} is exact only")
    if method == "recurrence":
        return weak_pmf_recurrence(n, params)
    if method == "series":
        return weak_pmf_series(n, params)
    raise InvalidParams(f"unknown method {method!r}")


def _theta(order: int, params: WalkParams) -> PowerSeries:
    if params.r:
        raise InvalidParams("closed forms are for r = 0")
    return theta_series(params.p, params.q, order)


def weak_gf_diagonal(a: int, order: int, params: WalkParams) -> PowerSeries:
    """G(lam, a, a) = sum_n lam**n P{S_n = a, M_n = a}; a = 0 gives q lam / (1 - q lam)."""
    p, q = params.p, params.q
    if a < 0:
        raise InvalidParams("G(lam, a, a) needs a >= 0")
    if a == 0:
        return PowerSeries([0] + [q**k for k in range(1, order + 1)], order)
    th = _theta(order, params)
    t2 = th * th
    num = (t2 - 4 * p * q) * (t2 + 4 * p * q) * th ** a * (2**a * p**a)
    den = (th - 2 * p) * (2 ** (2 * a + 3) * p ** (a + 1) * q ** (a + 2)) + th ** (2 * a + 3) * (th - 2 * q)
    return num / den


def weak_gf_tilde(a: int, order: int, params: WalkParams) -> PowerSeries:
    """G~(lam, 1, a) = sum_n lam**n P{M_n = a}, a >= 1, from the diagonals."""
    if a < 1:
        raise InvalidParams("G~(lam, 1, a) needs a >= 1")
    p, q = params.p, params.q
    th = _theta(order, params)
    t2 = th * th
    g = weak_gf_diagonal(a, order, params)
    if a == 1:
        damp = PowerSeries([1, -q], th.order)
        g01 = (t2 / (damp * (4 * p)) - th ** 3 * g / (8 * p * p)) * (2 * p) / ((2 * p - th) * q)
        return g01 + g
    prev = weak_gf_diagonal(a - 1, order, params)
    return ((prev - g) * th * (2 * p) / (t2 + 4 * p * q)).partial_sums()

"""Maximum of the strongly reflected walk S_j = |S_{j-1} + X_j|.

Three independent routes to the exact pmf of M_n = max_j S_j:

* ``matrix``: hitting probabilities of the chain absorbed at level a,
* ``recurrence``: the joint table P{S_n = x, M_n = a} stepped forward,
* ``series``: coefficient extraction from the theta(lam) generating function.

The closed-form diagonal generating functions give a fourth cross-check.
"""

from __future__ import annotations

from fractions import Fraction

from . import _chain
from ._chain import ReflectChain
from .errors import InvalidParams
from .exactnum import PowerSeries, theta_series
from .walkcore import Mode, Pmf, WalkParams

__all__ = [
    "ReflectChain",
    "strong_chain",
    "strong_hit_probability",
    "strong_pmf",
    "strong_pmf_matrix",
    "strong_pmf_recurrence",
    "strong_pmf_series",
    "strong_series_pmfs",
    "strong_table",
    "strong_gf_diagonal",
    "strong_gf_tilde",
]


def _params(params: WalkParams) -> WalkParams:
    if params.mode not in (Mode.PLAIN, Mode.STRONG):
        raise InvalidParams(f"strong reflection does not apply to mode {params.mode.value!r}")
    return params


def strong_chain(a: int, params: WalkParams) -> ReflectChain:
    """K_a: row 0 goes to 1 (or stays with probability r), row a absorbs."""
    return ReflectChain.build(a, _params(params), weak=False)


def strong_hit_probability(n: int, a: int, params: WalkParams) -> Fraction:
    """P{M_n >= a}."""
    return _chain.hit_probability_exact(n, a, _params(params), weak=False)


def strong_pmf_matrix(n: int, params: WalkParams, arithmetic: str = "exact") -> Pmf:
    return _chain.pmf_matrix(n, _params(params), weak=False, arithmetic=arithmetic)


def strong_table(n: int, params: WalkParams) -> dict:
    """{(x, a): P{S_n = x, M_n = a}} with zero entries dropped."""
    params = _params(params)
    *_, d = params.scaled()
    table = _chain.joint_table_recurrence(n, params, weak=False)
    scale = d**n
    return {(x, a): Fraction(m, scale) for a, row in enumerate(table) for x, m in enumerate(row) if m}


def strong_pmf_recurrence(n: int, params: WalkParams) -> Pmf:
    return _chain.pmf_recurrence(n, _params(params), weak=False)


def strong_pmf_series(n: int, params: WalkParams) -> Pmf:
    return _chain.pmf_series(n, _params(params), weak=False)


def strong_series_pmfs(nmax: int, params: WalkParams) -> list:
    """[None, pmf(M_1), ..., pmf(M_nmax)] from a single series computation."""
    return _chain.series_pmfs(nmax, _params(params), weak=False)


def strong_pmf(n: int, params: WalkParams, method: str = "auto", arithmetic: str | None = None) -> Pmf:
    """Dispatch: exact recurrence up to n = 512, float matrix beyond."""
    method, arithmetic = _chain.resolve_method(n, method, arithmetic)
    if method == "matrix":
        return strong_pmf_matrix(n, params, arithmetic)
    if arithmetic != "exact":
        raise InvalidParams(f"method {method!r} is exact only")
    if method == "recurrence":
        return strong_pmf_recurrence(n, params)
    if method == "series":
        return strong_pmf_series(n, params)
    raise InvalidParams(f"unknown method {method!r}")


def _theta(order: int, params: WalkParams) -> PowerSeries:
    if params.r:
        raise InvalidParams("closed forms are for r = 0")
    return theta_series(params.p, params.q, order)


def strong_gf_diagonal(a: int, order: int, params: WalkParams) -> PowerSeries:
    """F(lam, a, a) = sum_n lam**n P{S_n = a, M_n = a}, to ``order``."""
    if a < 1:
        raise InvalidParams("F(lam, a, a) needs a >= 1")
    p, q = params.p, params.q
    th = _theta(order, params)
    t2 = th * th
    num = (t2 - 4 * p * q) * (t2 + 4 * p * q) * th ** a * (2**a * p ** (a - 1))
    den = (t2 - 4 * p * p) * (2 ** (2 * a + 2) * p**a * q ** (a + 2)) + th ** (2 * a + 2) * (t2 - 4 * q * q)
    return num / den


def strong_gf_tilde(a: int, order: int, params: WalkParams) -> PowerSeries:
    """F~(lam, 1, a) = sum_n lam**n P{M_n = a}, a >= 1, from the diagonals."""
    if a < 1:
        raise InvalidParams("F~(lam, 1, a) needs a >= 1")
    p, q = params.p, params.q
    th = _theta(order, params)
    t2 = th * th
    f = strong_gf_diagonal(a, order, params)
    if a == 1:
        # F(lam, 0, 1) recovered from the kernel root mu = theta / 2p
        f01 = (t2 / (4 * p * p) - th ** 3 * f / (8 * p * p)) * (4 * p * p) / (q * (4 * p * p - t2))
        return f01 + f
    prev = strong_gf_diagonal(a - 1, order, params)
    return ((prev - f) * th * (2 * p) / (t2 + 4 * p * q)).partial_sums()

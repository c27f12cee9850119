"""Large-n predictors, Catalan's constant and sech Riemann-sum probes.

Every predictor returns leading-order formula values at the given n; they
are targets for the exact and Monte Carlo machinery, not exact moments.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

import numpy as np

from .errors import InvalidParams, RegimeMismatch
from .walkcore import Mode, Moments, WalkParams

SECH_CUTOFF = 1e-18


class Regime(str, enum.Enum):
    SYMMETRIC_PLAIN_MAX = "symmetric-max"
    SYMMETRIC_PLAIN_CROSS = "symmetric-cross"
    ASYMMETRIC_PLAIN_MAX = "asymmetric-max"
    ASYMMETRIC_PLAIN_MIN = "asymmetric-min"
    ASYMMETRIC_PLAIN_CROSS = "asymmetric-cross"
    REFLECTED_SYMMETRIC = "reflected"
    LAZY_REFLECTED = "lazy-reflected"
    TRAFFIC_LIGHT = "traffic-light"
    PERSISTENT_SYMMETRIC = "persistent"


class Scenario(str, enum.Enum):
    STRONG = "strong"
    WEAK = "weak"


# --------------------------------------------------------------------------
# Catalan's constant

def catalan_partial_sums(m: int) -> list[float]:
    """S_0..S_m of sum_k (-1)**k / (2k+1)**2; consecutive sums bracket G."""
    terms = [(-1) ** k / (2 * k + 1) ** 2 for k in range(m + 1)]
    return list(np.cumsum(terms))


def _averaged(m: int, levels: int) -> float:
    # S_{2j+1} from paired terms 1/(4j+1)^2 - 1/(4j+3)^2, S_{2j} = S_{2j-1} + 1/(4j+1)^2
    seq, acc = [], []
    for j in range(m):
        seq.append(math.fsum(acc) + 1 / (4 * j + 1) ** 2)
        acc.append(1 / (4 * j + 1) ** 2 - 1 / (4 * j + 3) ** 2)
        seq.append(math.fsum(acc))
    # neighbouring partial sums bracket G; averaging them repeatedly cancels the tail
    for _ in range(levels):
        seq = [(a + b) / 2 for a, b in zip(seq, seq[1:])]
    return seq[-1]


def catalan_constant(tol: float = 1e-12) -> float:
    """G = 1 - 1/9 + 1/25 - ... to within ``tol`` (tol >= 1e-14).

    Terms are summed in pairs, then the alternating partial sums are averaged
    with their neighbours repeatedly (an Euler-type transform); the pair
    count doubles until two successive estimates agree to tol / 10.
    """
    if tol < 1e-14:
        raise InvalidParams("tol must be >= 1e-14")
    m, levels = 16, 12
    prev = _averaged(m, levels)
    while True:
        m *= 2
        cur = _averaged(m, levels)
        if abs(cur - prev) < tol / 10:
            return cur
        prev = cur


# --------------------------------------------------------------------------
# predictors

def _require(cond: bool, msg: str):
    if not cond:
        raise RegimeMismatch(msg)


def predict_moments(regime, n: int, params: WalkParams | None = None, alpha=None) -> Moments:
    """Leading-order moments of the extreme named by ``regime`` at horizon n.

    ``cross_moment`` is filled for the cross regimes; the persistent regime
    needs ``alpha`` = P{next step repeats the last one}.
    """
    regime = Regime(regime)
    if n < 1:
        raise InvalidParams("n must be >= 1")
    G = catalan_constant()
    rt = math.sqrt(2 * n / math.pi)
    if regime is Regime.PERSISTENT_SYMMETRIC:
        _require(alpha is not None and 0 < float(alpha) < 1, "persistent regime needs 0 < alpha < 1")
        k = float(alpha) / (1 - float(alpha))
        mean = math.sqrt(k) * (rt - 0.5 * math.sqrt(k))
        var = k * (1 - 2 / math.pi) * n
        return Moments(mean, var + mean * mean, var)
    if regime is Regime.TRAFFIC_LIGHT:
        _require(params is None or params.mode is Mode.TRAFFIC_LIGHT, "traffic-light regime needs the traffic-light walk")
        return Moments.of(math.sqrt(math.pi * n / 12), G / 3 * n)
    _require(params is not None, f"{regime.value} needs walk parameters")
    p, r = params.p, params.r
    symmetric = params.p == params.q
    plain = params.mode is Mode.PLAIN
    if regime in (Regime.SYMMETRIC_PLAIN_MAX, Regime.SYMMETRIC_PLAIN_CROSS):
        _require(plain and symmetric and r == 0, f"{regime.value} needs a plain walk with p = q = 1/2")
        cross = (2 * math.log(2) - 1) * n if regime is Regime.SYMMETRIC_PLAIN_CROSS else None
        return Moments.of(rt - 0.5, n - rt + 0.5, cross)
    if regime in (Regime.ASYMMETRIC_PLAIN_MAX, Regime.ASYMMETRIC_PLAIN_MIN, Regime.ASYMMETRIC_PLAIN_CROSS):
        _require(plain and r == 0 and p < Fraction(1, 2), f"{regime.value} needs a plain walk with p < 1/2")
        d = 1 - 2 * p
        if regime is Regime.ASYMMETRIC_PLAIN_MIN:
            return Moments.of(d * n + p / d, d * d * n * n + 2 * (3 - 2 * p) * p * n - (3 - 4 * p) * p / (d * d))
        cross = p * n - (2 - 3 * p) * p / (d * d) if regime is Regime.ASYMMETRIC_PLAIN_CROSS else None
        return Moments.of(p / d, p / (d * d), cross)
    _require(params.mode in (Mode.STRONG, Mode.WEAK), f"{regime.value} needs a reflected walk")
    _require(symmetric, f"{regime.value} needs p = q")
    if regime is Regime.REFLECTED_SYMMETRIC:
        _require(r == 0, "use the lazy regime when r > 0")
        return Moments.of(math.sqrt(math.pi * n / 2), 2 * G * n)
    _require(r > 0, "lazy regime needs r > 0")
    s = float(1 - r)
    return Moments.of(math.sqrt(math.pi * s * n / 2), 2 * G * s * n)


# --------------------------------------------------------------------------
# sech probes

def _sech_args(t: float, scenario) -> np.ndarray:
    if not 0 < t <= 1:
        raise InvalidParams("t must lie in (0, 1]")
    scenario = Scenario(scenario)
    amax = math.ceil(math.log(2 / SECH_CUTOFF) / t) + 1
    a = np.arange(1, amax + 1, dtype=float)
    return (a + 0.5) * t if scenario is Scenario.WEAK else a * t


def _sech(x: np.ndarray) -> np.ndarray:
    return 2 * np.exp(-x) / (1 + np.exp(-2 * x))


def sech_limit_probe(t: float, scenario="strong") -> float:
    """sqrt(2/pi) t sum_{a>=1} sech(arg); tends to sqrt(pi/2) as t -> 0+."""
    x = _sech_args(t, scenario)
    return math.sqrt(2 / math.pi) * t * math.fsum(_sech(x)[::-1])


def second_moment_probe(t: float, scenario="strong") -> float:
    """t sum_{a>=1} arg sech(arg); tends to the integral of b sech b, i.e. 2G."""
    x = _sech_args(t, scenario)
    return t * math.fsum((x * _sech(x))[::-1])

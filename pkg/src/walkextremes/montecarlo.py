"""Reproducible Monte Carlo for every walk variant.

Trial t draws its uniforms from Philox4x64-10 with key = seed and the trial
index in counter word 1, so any partition of trials over workers yields the
same per-trial values.  Per-trial statistics are integers and are reduced
with exact integer sums, which keeps results bit-identical across runs and
worker counts.
"""

from __future__ import annotations

import enum
import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numba
import numpy as np

from .errors import InvalidParams
from .walkcore import Mode, WalkParams

SEED_MASK = (1 << 64) - 1


class Statistic(str, enum.Enum):
    MAX_PLUS = "max_plus"
    MIN_MINUS = "min_minus"
    REFLECTED_MAX = "reflected_max"
    MAX_ABS = "max_abs"
    CROSS_PRODUCT = "cross_product"


PLAIN_STATS = (Statistic.MAX_PLUS, Statistic.MIN_MINUS, Statistic.MAX_ABS, Statistic.CROSS_PRODUCT)


@dataclass(frozen=True)
class PersistentParams:
    """Step directions follow a two-state chain that repeats with probability alpha.

    The first step is +1 or -1 with probability 1/2 each.
    """

    alpha: float

    def __post_init__(self):
        if not 0 <= self.alpha <= 1:
            raise InvalidParams("alpha must lie in [0, 1]")

    @property
    def beta(self) -> float:
        return 1 - self.alpha


@dataclass(frozen=True)
class SimConfig:
    params: object
    n: int
    trials: int
    seed: int = 0
    statistics: tuple = ()

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParams("n must be >= 1")
        if self.trials < 1:
            raise InvalidParams("trials must be >= 1")
        if not 0 <= self.seed <= SEED_MASK:
            raise InvalidParams("seed must be a 64-bit unsigned integer")
        if not isinstance(self.params, (WalkParams, PersistentParams)):
            raise InvalidParams("params must be WalkParams or PersistentParams")
        if self.reflected and self.params.mode is Mode.TRAFFIC_LIGHT and self.n % 3:
            raise InvalidParams("the traffic-light walk needs n divisible by 3")
        allowed = (Statistic.REFLECTED_MAX,) if self.reflected else PLAIN_STATS
        stats = tuple(Statistic(s) for s in self.statistics) or allowed
        bad = [s.value for s in stats if s not in allowed]
        if bad:
            raise InvalidParams(f"statistics {bad} do not apply to this walk")
        object.__setattr__(self, "statistics", tuple(s for s in allowed if s in stats))

    @property
    def reflected(self) -> bool:
        return isinstance(self.params, WalkParams) and self.params.mode is not Mode.PLAIN

    def describe(self) -> dict:
        if isinstance(self.params, PersistentParams):
            walk = {"variant": "persistent", "alpha": repr(float(self.params.alpha))}
        else:
            walk = {
                "variant": self.params.mode.value,
                "p": str(self.params.p),
                "q": str(self.params.q),
                "r": str(self.params.r),
            }
        return {
            "walk": walk,
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "statistics": [s.value for s in self.statistics],
        }


@dataclass(frozen=True)
class StatSummary:
    mean: float
    second_moment: float
    stderr: float
    total: int
    total_squares: int


@dataclass
class SimResult:
    config: SimConfig
    summaries: dict
    samples: dict = field(repr=False)
    total_steps: int = 0
    elapsed: float = 0.0

    def __getitem__(self, stat) -> StatSummary:
        return self.summaries[Statistic(stat)]

    def to_dict(self) -> dict:
        """Everything except wall-clock time, in a stable order."""
        return {
            "config": self.config.describe(),
            "total_steps": self.total_steps,
            "generator": "Philox4x64-10, key=seed, counter=(0, trial, 0, 0)",
            "statistics": {
                s.value: {
                    "mean": repr(v.mean),
                    "second_moment": repr(v.second_moment),
                    "stderr": repr(v.stderr),
                    "sum": str(v.total),
                    "sum_of_squares": str(v.total_squares),
                }
                for s, v in self.summaries.items()
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_bytes(self) -> bytes:
        return self.to_json().encode()

    def digest(self) -> str:
        return hashlib.sha256(self.to_bytes()).hexdigest()


# --------------------------------------------------------------------------
# path kernels; u holds one uniform per step

@numba.njit(cache=True)
def _plain_extremes(u, up, up_or_stay):
    s = 0
    hi = 0
    lo = 0
    for j in range(u.shape[0]):
        x = u[j]
        if x < up:
            s += 1
            if s > hi:
                hi = s
        elif x >= up_or_stay:
            s -= 1
            if s < lo:
                lo = s
    return hi, -lo


@numba.njit(cache=True)
def _persistent_extremes(u, alpha):
    step = 1 if u[0] < 0.5 else -1
    s = step
    hi = max(s, 0)
    lo = min(s, 0)
    for j in range(1, u.shape[0]):
        if u[j] >= alpha:
            step = -step
        s += step
        if s > hi:
            hi = s
        elif s < lo:
            lo = s
    return hi, -lo


@numba.njit(cache=True)
def _reflected_max(u, up, up_or_stay, strong):
    s = 0
    m = 0
    for j in range(u.shape[0]):
        x = u[j]
        if x < up:
            s += 1
            if s > m:
                m = s
        elif x >= up_or_stay:
            if s > 0:
                s -= 1
            elif strong:
                s = 1
                if m < 1:
                    m = 1
    return m


@numba.njit(cache=True)
def _traffic_max(u):
    s = 0
    m = 0
    for j in range(u.shape[0]):
        if (j + 1) % 3 == 0:
            if s > 0:
                s -= 1
        elif u[j] < 0.5:
            s += 1
            if s > m:
                m = s
    return m


def trial_stream(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed, counter=[0, trial, 0, 0]))


def _trial_values(config: SimConfig, trial: int, u=None) -> tuple:
    """Per-trial statistic values in config.statistics order."""
    if u is None:
        u = trial_stream(config.seed, trial).random(config.n)
    params = config.params
    if isinstance(params, PersistentParams):
        hi, lo = _persistent_extremes(u, float(params.alpha))
    else:
        p, _, r = params.floats()
        if params.mode is Mode.TRAFFIC_LIGHT:
            return (int(_traffic_max(u)),)
        if params.mode is not Mode.PLAIN:
            return (int(_reflected_max(u, p, p + r, params.mode is Mode.STRONG)),)
        hi, lo = _plain_extremes(u, p, p + r)
    hi, lo = int(hi), int(lo)
    full = {
        Statistic.MAX_PLUS: hi,
        Statistic.MIN_MINUS: lo,
        Statistic.MAX_ABS: max(hi, lo),
        Statistic.CROSS_PRODUCT: hi * lo,
    }
    return tuple(full[s] for s in config.statistics)


def _run_chunk(args) -> np.ndarray:
    config, start, stop = args
    out = np.empty((stop - start, len(config.statistics)), dtype=np.int64)
    for i, t in enumerate(range(start, stop)):
        out[i] = _trial_values(config, t)
    return out


def _chunks(trials: int, workers: int):
    size = max(1, -(-trials // (4 * workers)))
    return [(lo, min(lo + size, trials)) for lo in range(0, trials, size)]


def _summary(values: np.ndarray) -> StatSummary:
    n = len(values)
    total = sum(int(v) for v in values)
    squares = sum(int(v) * int(v) for v in values)
    mean = Fraction(total, n)
    second = Fraction(squares, n)
    var = (second - mean * mean) * Fraction(n, n - 1) if n > 1 else Fraction(0)
    stderr = float(var / n) ** 0.5
    return StatSummary(float(mean), float(second), stderr, total, squares)


def simulate(config: SimConfig, workers: int = 1) -> SimResult:
    """Run config.trials independent walks of length config.n."""
    if workers < 1:
        raise InvalidParams("workers must be >= 1")
    start = time.perf_counter()
    jobs = [(config, lo, hi) for lo, hi in _chunks(config.trials, workers)]
    if workers == 1:
        parts = [_run_chunk(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_chunk, jobs))
    table = np.concatenate(parts)
    samples = {s: table[:, i] for i, s in enumerate(config.statistics)}
    summaries = {s: _summary(v) for s, v in samples.items()}
    return SimResult(config, summaries, samples, config.n * config.trials, time.perf_counter() - start)


def coupled_reflected_maxima(n: int, params: WalkParams, trials: int, seed: int = 0):
    """(strong, weak) maxima per trial, both driven by the same uniforms."""
    strong_cfg = SimConfig(params.with_mode(Mode.STRONG), n, trials, seed)
    weak_cfg = SimConfig(params.with_mode(Mode.WEAK), n, trials, seed)
    strong = np.empty(trials, dtype=np.int64)
    weak = np.empty(trials, dtype=np.int64)
    for t in range(trials):
        u = trial_stream(seed, t).random(n)
        strong[t] = _trial_values(strong_cfg, t, u)[0]
        weak[t] = _trial_values(weak_cfg, t, u)[0]
    return strong, weak

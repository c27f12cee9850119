"""Walk parameters, distribution containers, moments and the band DP.

Exact dynamic programs in this package work on integers: with a common
denominator ``d`` for (p, q, r), the mass after ``t`` steps is an integer
multiple of ``d**-t``.  The scaled integers are only divided out at the end,
which avoids a gcd per arithmetic operation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping

import numpy as np

from .errors import BadBand, InvalidParams
from .exactnum import as_rational

FLOAT_SUM_TOL = 1e-12


class Mode(str, enum.Enum):
    PLAIN = "plain"
    STRONG = "strong"
    WEAK = "weak"
    TRAFFIC_LIGHT = "traffic"


@dataclass(frozen=True)
class WalkParams:
    """Step law P{+1} = p, P{-1} = q, P{0} = r and a reflection mode.

    Walks with upward drift (p > q) are rejected unless
    ``allow_upward_drift`` is set; the closed forms all assume p <= q, but the
    enumeration, DP and simulation routes are valid for any law.
    """

    p: Fraction
    q: Fraction
    r: Fraction = Fraction(0)
    mode: Mode = Mode.PLAIN
    allow_upward_drift: bool = field(default=False, compare=False)

    def __post_init__(self):
        p, q, r = (as_rational(x) for x in (self.p, self.q, self.r))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "mode", Mode(self.mode))
        for name, value in (("p", p), ("q", q), ("r", r)):
            if not 0 <= value <= 1:
                raise InvalidParams(f"{name}={value} is not a probability")
        if p + q + r != 1:
            raise InvalidParams(f"p + q + r = {p + q + r}, expected 1")
        if p > q and not self.allow_upward_drift and self.mode is not Mode.TRAFFIC_LIGHT:
            raise InvalidParams(
                "p > q is not covered; mirror the walk (swap p and q) or pass "
                "allow_upward_drift=True for enumeration/DP/simulation routes"
            )

    @classmethod
    def from_p(cls, p, mode: Mode = Mode.PLAIN, r=0, **kwargs) -> "WalkParams":
        p, r = as_rational(p), as_rational(r)
        return cls(p, 1 - p - r, r, mode, **kwargs)

    @classmethod
    def traffic_light(cls) -> "WalkParams":
        """-1 at times divisible by 3, else +1 or 0 with probability 1/2.

        (p, q, r) are set to the per-step marginal 1/3 each, for display only.
        """
        third = Fraction(1, 3)
        return cls(third, third, third, Mode.TRAFFIC_LIGHT)

    def with_mode(self, mode: Mode) -> "WalkParams":
        return WalkParams(self.p, self.q, self.r, Mode(mode), self.allow_upward_drift)

    @property
    def symmetric(self) -> bool:
        return self.p == self.q

    @property
    def lazy(self) -> bool:
        return self.r != 0

    def scaled(self) -> tuple[int, int, int, int]:
        """(P, Q, R, d) with p = P/d, q = Q/d, r = R/d."""
        d = math.lcm(self.p.denominator, self.q.denominator, self.r.denominator)
        return (
            self.p.numerator * (d // self.p.denominator),
            self.q.numerator * (d // self.q.denominator),
            self.r.numerator * (d // self.r.denominator),
            d,
        )

    def floats(self) -> tuple[float, float, float]:
        return float(self.p), float(self.q), float(self.r)


def _check_arithmetic(arithmetic: str) -> str:
    if arithmetic not in ("exact", "float"):
        raise ValueError(f"arithmetic must be 'exact' or 'float', not {arithmetic!r}")
    return arithmetic


@dataclass(frozen=True)
class Pmf:
    """Finite distribution on the integers, nonzero points only, sorted."""

    support: tuple
    probabilities: tuple
    exact: bool = True

    def __post_init__(self):
        if len(self.support) != len(self.probabilities):
            raise InvalidParams("support and probabilities differ in length")
        if any(b <= a for a, b in zip(self.support, self.support[1:])):
            raise InvalidParams("support must be strictly increasing")
        if any(x < 0 for x in self.probabilities):
            raise InvalidParams("negative probability")
        if self.exact:
            if any(not isinstance(x, (int, Fraction)) for x in self.probabilities):
                raise InvalidParams("exact pmf needs rational probabilities")
            if sum(self.probabilities, Fraction(0)) != 1:
                raise InvalidParams(f"probabilities sum to {sum(self.probabilities)}")
        elif abs(math.fsum(self.probabilities) - 1.0) > FLOAT_SUM_TOL:
            raise InvalidParams(f"float probabilities sum to {math.fsum(self.probabilities)!r}")

    @classmethod
    def from_dict(cls, mass: Mapping[int, object], exact: bool = True) -> "Pmf":
        if exact:
            items = sorted((int(k), Fraction(v)) for k, v in mass.items() if v != 0)
        else:
            # round-off below 1e-15 (either sign) is noise, not mass
            items = sorted((int(k), float(v)) for k, v in mass.items() if abs(float(v)) > 1e-15)
        return cls(tuple(k for k, _ in items), tuple(v for _, v in items), exact)

    @classmethod
    def point(cls, value: int) -> "Pmf":
        return cls((value,), (Fraction(1),), True)

    def as_dict(self) -> dict:
        return dict(zip(self.support, self.probabilities))

    def items(self) -> Iterator[tuple]:
        return iter(zip(self.support, self.probabilities))

    def prob(self, value: int):
        zero = Fraction(0) if self.exact else 0.0
        return self.as_dict().get(value, zero)

    def tail(self, threshold: int):
        """P{X >= threshold}."""
        zero = Fraction(0) if self.exact else 0.0
        return sum((v for k, v in self.items() if k >= threshold), zero)

    def to_float(self) -> "Pmf":
        if not self.exact:
            return self
        return Pmf(self.support, tuple(float(x) for x in self.probabilities), False)


@dataclass(frozen=True)
class JointPmf:
    """Exact law of (M+, M-) at horizon n; keys are (a, b) with nonzero mass.

    ``lazy`` marks walks with zero steps, the only ones that may sit at the
    origin throughout and so give (0, 0) positive mass.
    """

    n: int
    entries: Mapping[tuple, Fraction]
    lazy: bool = False

    def __post_init__(self):
        clean = {(int(a), int(b)): Fraction(v) for (a, b), v in self.entries.items() if v != 0}
        for (a, b), v in clean.items():
            if not (0 <= a <= self.n and 0 <= b <= self.n):
                raise InvalidParams(f"key {(a, b)} outside 0..{self.n}")
            if v < 0:
                raise InvalidParams(f"negative mass at {(a, b)}")
        if self.n >= 1 and (0, 0) in clean and not self.lazy:
            raise InvalidParams("phi(n, 0, 0) must vanish for n >= 1")
        if sum(clean.values(), Fraction(0)) != 1:
            raise InvalidParams("joint probabilities do not sum to 1")
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __getitem__(self, key: tuple) -> Fraction:
        return self.entries.get(key, Fraction(0))

    def matrix(self) -> list[list[Fraction]]:
        """(n+1) x (n+1) table, rows indexed by a (max), columns by b (|min|)."""
        return [[self[a, b] for b in range(self.n + 1)] for a in range(self.n + 1)]

    def marginal(self, side: str) -> Pmf:
        idx = {"plus": 0, "minus": 1}[side]
        acc: dict[int, Fraction] = {}
        for key, v in self.entries.items():
            acc[key[idx]] = acc.get(key[idx], Fraction(0)) + v
        return Pmf.from_dict(acc)

    def cross_moment(self) -> Fraction:
        return sum((a * b * v for (a, b), v in self.entries.items()), Fraction(0))


@dataclass(frozen=True)
class Moments:
    mean: object
    second_moment: object
    variance: object
    cross_moment: object = None

    @classmethod
    def of(cls, mean, second_moment, cross_moment=None) -> "Moments":
        return cls(mean, second_moment, second_moment - mean * mean, cross_moment)


def pmf_moments(pmf: Pmf) -> Moments:
    if pmf.exact:
        mean = sum((a * v for a, v in pmf.items()), Fraction(0))
        second = sum((a * a * v for a, v in pmf.items()), Fraction(0))
    else:
        mean = math.fsum(a * v for a, v in pmf.items())
        second = math.fsum(a * a * v for a, v in pmf.items())
    m = Moments.of(mean, second)
    if m.variance < 0 and not (not pmf.exact and m.variance > -1e-9 * max(1.0, second)):
        raise ArithmeticError(f"negative variance {m.variance}")
    return m


def dominates(upper: Pmf, lower: Pmf) -> bool:
    """First-order stochastic dominance: P{upper >= a} >= P{lower >= a} for all a."""
    if not (upper.exact and lower.exact):
        raise InvalidParams("dominates compares exact pmfs")
    thresholds = sorted(set(upper.support) | set(lower.support))
    return all(upper.tail(a) >= lower.tail(a) for a in thresholds)


# --------------------------------------------------------------------------
# band confinement

def _plain_only(params: WalkParams):
    if params.mode is not Mode.PLAIN:
        raise InvalidParams("band DP is defined for the plain walk")


def band_stay_probability(n: int, lo: int, hi: int, params: WalkParams, arithmetic: str = "exact"):
    """P{lo < S_j < hi for every 0 <= j <= n}, walk started at 0."""
    if lo >= 0 or hi <= 0:
        raise BadBand(f"band ({lo}, {hi}) must straddle 0")
    _plain_only(params)
    _check_arithmetic(arithmetic)
    width = hi - lo
    if arithmetic == "exact":
        P, Q, R, d = params.scaled()
        v = [0] * (width + 1)
        v[-lo] = 1
        for _ in range(n):
            w = [0] * (width + 1)
            for x in range(1, width):
                m = v[x]
                if m:
                    w[x + 1] += P * m
                    w[x - 1] += Q * m
                    if R:
                        w[x] += R * m
            w[0] = w[width] = 0
            v = w
        return Fraction(sum(v), d**n)
    p, q, r = params.floats()
    v = np.zeros(width + 1)
    v[-lo] = 1.0
    for _ in range(n):
        w = np.zeros(width + 1)
        w[2:] += p * v[1:-1]
        w[:-2] += q * v[1:-1]
        if r:
            w[1:-1] += r * v[1:-1]
        w[0] = w[width] = 0.0
        v = w
    return float(v.sum())


def survival_by_start(n: int, width: int, params: WalkParams, arithmetic: str = "exact") -> list:
    """u[x] = P{walk from x stays strictly inside (0, width) for n steps}, x = 0..width.

    One backward sweep covers every band of this width: the band (-b, a)
    with a + b = width is the start x = b.
    """
    _plain_only(params)
    _check_arithmetic(arithmetic)
    if width < 1:
        raise BadBand("width must be >= 1")
    if arithmetic == "exact":
        P, Q, R, d = params.scaled()
        u = [0] + [1] * (width - 1) + [0]
        for _ in range(n):
            # u'(x) = p u(x+1) + q u(x-1) + r u(x), times d
            u = [0] + [P * u[x + 1] + Q * u[x - 1] + R * u[x] for x in range(1, width)] + [0]
        scale = d**n
        return [Fraction(x, scale) for x in u]
    p, q, r = params.floats()
    u = np.ones(width + 1)
    u[0] = u[-1] = 0.0
    for _ in range(n):
        w = np.zeros(width + 1)
        w[1:-1] = p * u[2:] + q * u[:-2] + r * u[1:-1]
        u = w
    return list(u)


def one_sided_survival(n: int, params: WalkParams, side: str = "plus", arithmetic: str = "exact") -> list:
    """c[a] = P{M_n^side < a} for a = 0..n+1 (c[0] = 0, c[n+1] = 1)."""
    _plain_only(params)
    _check_arithmetic(arithmetic)
    up_is_toward = side == "plus"
    if side not in ("plus", "minus"):
        raise ValueError("side must be 'plus' or 'minus'")
    # u[y]: y = distance below the barrier; y ranges 0..n+1, y > t survives surely
    if arithmetic == "exact":
        P, Q, R, d = params.scaled()
        toward, away = (P, Q) if up_is_toward else (Q, P)
        u = [0] + [1] * (n + 2)
        scale = 1
        for _ in range(n):
            scale *= d
            u = [0] + [toward * u[y - 1] + away * u[y + 1] + R * u[y] for y in range(1, n + 2)] + [scale]
        return [Fraction(u[y], scale) for y in range(n + 2)]
    p, q, r = params.floats()
    toward, away = (p, q) if up_is_toward else (q, p)
    u = np.ones(n + 3)
    u[0] = 0.0
    for _ in range(n):
        w = np.ones(n + 3)
        w[0] = 0.0
        w[1:-1] = toward * u[:-2] + away * u[2:] + r * u[1:-1]
        u = w
    return list(u[: n + 2])

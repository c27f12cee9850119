"""Brute-force ground truth: enumerate every step sequence.

Each sequence carries weight p**ups * q**downs * r**zeros.  Sequences are
visited in lexicographic order of their steps (-1 < 0 < +1) so a failing case
can be replayed by index.
"""

from __future__ import annotations

import enum
import itertools
from fractions import Fraction

from .errors import InvalidParams, TooLarge
from .walkcore import JointPmf, Mode, Pmf, WalkParams

MAX_N_BINARY = 16
MAX_N_TERNARY = 10


class WalkStatistic(str, enum.Enum):
    MAX = "max"
    ABS_MIN = "absmin"
    JOINT_MAX_MIN = "joint"
    MAX_ABS = "maxabs"
    REFLECTED_MAX = "reflected"
    CYCLE_MAX = "cycle"


def _alphabet(params: WalkParams, j: int):
    """(step, weight-key) pairs available at time j (1-based)."""
    if params.mode is Mode.TRAFFIC_LIGHT:
        if j % 3 == 0:
            return ((-1, "one"),)
        return ((0, "half"), (1, "half"))
    steps = []
    if params.q:
        steps.append((-1, "q"))
    if params.r:
        steps.append((0, "r"))
    if params.p:
        steps.append((1, "p"))
    return tuple(steps)


def _path(steps, mode: Mode) -> list[int]:
    s, out = 0, [0]
    for x in steps:
        s += x
        if mode is Mode.STRONG:
            s = abs(s)
        elif mode in (Mode.WEAK, Mode.TRAFFIC_LIGHT):
            s = max(s, 0)
        out.append(s)
    return out


def _cycle_max(path: list[int]):
    for t in range(1, len(path)):
        if path[t] == 0:
            return max(abs(v) for v in path[: t + 1])
    return None


def _evaluate(stat: WalkStatistic, path: list[int]):
    if stat is WalkStatistic.MAX or stat is WalkStatistic.REFLECTED_MAX:
        return max(path)
    if stat is WalkStatistic.ABS_MIN:
        return -min(path)
    if stat is WalkStatistic.JOINT_MAX_MIN:
        return (max(path), -min(path))
    if stat is WalkStatistic.MAX_ABS:
        return max(abs(v) for v in path)
    return _cycle_max(path)


def _check(n: int, params: WalkParams, stat: WalkStatistic):
    if n < 0:
        raise InvalidParams("n must be >= 0")
    reflected = params.mode in (Mode.STRONG, Mode.WEAK, Mode.TRAFFIC_LIGHT)
    if stat is WalkStatistic.REFLECTED_MAX and not reflected:
        raise InvalidParams("ReflectedMax needs a reflected mode")
    if stat is not WalkStatistic.REFLECTED_MAX and reflected:
        raise InvalidParams(f"{stat.value} is defined for the plain walk")
    ternary = params.r != 0 or params.mode is Mode.TRAFFIC_LIGHT
    cap = MAX_N_TERNARY if ternary else MAX_N_BINARY
    if n > cap:
        raise TooLarge(f"enumeration capped at n={cap} for this step alphabet")


def enumerate_exact(n: int, params: WalkParams, stat) -> Pmf | JointPmf:
    """Exact distribution of ``stat`` over all step sequences of length n.

    CycleMax keeps only paths that return to 0 by time n and renormalizes by
    the returned mass, i.e. it conditions on {T <= n}.
    """
    stat = WalkStatistic(stat)
    _check(n, params, stat)
    alphabets = [_alphabet(params, j) for j in range(1, n + 1)]
    # tally integer path counts per (value, weight signature); weights are
    # multiplied out once per signature instead of once per path
    tally: dict = {}
    for seq in itertools.product(*alphabets):
        value = _evaluate(stat, _path([x for x, _ in seq], params.mode))
        if value is None:
            continue
        keys = [k for _, k in seq]
        sig = (value, keys.count("p"), keys.count("q"), keys.count("r"), keys.count("half"))
        tally[sig] = tally.get(sig, 0) + 1
    mass: dict = {}
    half = Fraction(1, 2)
    for (value, np_, nq, nr, nh), count in tally.items():
        w = count * params.p**np_ * params.q**nq * params.r**nr * half**nh
        mass[value] = mass.get(value, Fraction(0)) + w
    if stat is WalkStatistic.JOINT_MAX_MIN:
        return JointPmf(n, mass, lazy=params.lazy)
    if stat is WalkStatistic.CYCLE_MAX:
        total = sum(mass.values(), Fraction(0))
        if total == 0:
            raise InvalidParams(f"no path returns to 0 within n={n}")
        mass = {k: v / total for k, v in mass.items()}
    return Pmf.from_dict(mass)


def returned_mass(n: int, params: WalkParams) -> Fraction:
    """P{T <= n} for the plain walk, T the first return time to 0."""
    _check(n, params, WalkStatistic.CYCLE_MAX)
    total = Fraction(0)
    for seq in itertools.product(*[_alphabet(params, j) for j in range(1, n + 1)]):
        if _cycle_max(_path([x for x, _ in seq], params.mode)) is not None:
            keys = [k for _, k in seq]
            total += params.p ** keys.count("p") * params.q ** keys.count("q") * params.r ** keys.count("r")
    return total

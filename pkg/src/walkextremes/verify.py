"""Bundled invariant suites behind ``walkextremes verify``.

Each check returns (name, passed, detail).  Sizes are kept small so the full
set runs in well under a minute.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .asymptotics import catalan_constant, second_moment_probe, sech_limit_probe
from .cycles import cycle_max_moments, euler_gamma
from .extrema_joint import joint_pmf, marginal_max_pmf, max_abs_pmf, symmetric_max_mean, symmetric_max_second_moment
from .oracle import enumerate_exact
from .reflect_strong import strong_pmf_matrix, strong_pmf_recurrence, strong_series_pmfs
from .reflect_weak import weak_pmf_matrix, weak_pmf_recurrence, weak_series_pmfs
from .walkcore import Mode, WalkParams, pmf_moments

SUITES = ("cross-method", "oracle", "marginals", "constants", "asymptotics")
PROBS = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 5))


def _cross_method():
    out = []
    for p in PROBS:
        for mode, matrix, recurrence, series in (
            (Mode.STRONG, strong_pmf_matrix, strong_pmf_recurrence, strong_series_pmfs),
            (Mode.WEAK, weak_pmf_matrix, weak_pmf_recurrence, weak_series_pmfs),
        ):
            w = WalkParams.from_p(p, mode)
            table = series(16, w)
            bad = [n for n in range(1, 17) if not (matrix(n, w) == recurrence(n, w) == table[n])]
            out.append((f"{mode.value} p={p} n<=16", not bad, f"mismatch at n={bad}" if bad else ""))
        w = WalkParams.from_p(p)
        bad = [n for n in range(0, 13) if joint_pmf(n, w, "recurrence") != joint_pmf(n, w, "band")]
        out.append((f"joint p={p} n<=12", not bad, f"mismatch at n={bad}" if bad else ""))
    return out


def _oracle():
    out = []
    for p in (Fraction(1, 2), Fraction(1, 3)):
        w = WalkParams.from_p(p)
        checks = {
            "joint": lambda n: joint_pmf(n, w) == enumerate_exact(n, w, "joint"),
            "max": lambda n: marginal_max_pmf(n, "plus", w) == enumerate_exact(n, w, "max"),
            "absmin": lambda n: marginal_max_pmf(n, "minus", w) == enumerate_exact(n, w, "absmin"),
            "maxabs": lambda n: max_abs_pmf(n, w) == enumerate_exact(n, w, "maxabs"),
            "strong": lambda n: strong_pmf_recurrence(n, w.with_mode(Mode.STRONG))
            == enumerate_exact(n, w.with_mode(Mode.STRONG), "reflected"),
            "weak": lambda n: weak_pmf_recurrence(n, w.with_mode(Mode.WEAK))
            == enumerate_exact(n, w.with_mode(Mode.WEAK), "reflected"),
        }
        for name, check in checks.items():
            bad = [n for n in range(1, 11) if not check(n)]
            out.append((f"{name} p={p} n<=10", not bad, f"mismatch at n={bad}" if bad else ""))
    return out


def _marginals():
    out = []
    bad = [n for n in range(0, 41) if symmetric_max_second_moment(n) + symmetric_max_mean(n) != n]
    out.append(("E(M+^2) + E(M+) = n, p=1/2, n<=40", not bad, f"fails at {bad}" if bad else ""))
    for p in PROBS:
        w = WalkParams.from_p(p)
        for side in ("plus", "minus"):
            bad = [n for n in range(0, 25) if marginal_max_pmf(n, side, w, "reflection") != marginal_max_pmf(n, side, w, "band")]
            out.append((f"{side} reflection = band p={p} n<=24", not bad, f"mismatch at {bad}" if bad else ""))
    return out


def _constants():
    g = catalan_constant(1e-12)
    m = cycle_max_moments(WalkParams.from_p(Fraction(1, 3)))
    return [
        ("Catalan G", abs(g - 0.9159655941) < 1e-10, repr(g)),
        ("Euler gamma", abs(euler_gamma() - 0.5772156649015329) < 1e-12, repr(euler_gamma())),
        ("E(M_T) p=1/3", abs(m.mean - 1.6066951524) < 1e-9, repr(m.mean)),
        ("E(M_T^2) p=1/3", abs(m.second_moment - 3.8813726251) < 1e-9, repr(m.second_moment)),
    ]


def _asymptotics():
    g = catalan_constant()
    out = []
    for s in ("strong", "weak"):
        v = sech_limit_probe(0.001, s)
        out.append((f"sech probe {s}", abs(v - math.sqrt(math.pi / 2)) < 0.002, repr(v)))
        v = second_moment_probe(0.001, s)
        out.append((f"second-moment probe {s}", abs(v - 2 * g) < 0.005, repr(v)))
    for mode, fn in ((Mode.STRONG, strong_pmf_matrix), (Mode.WEAK, weak_pmf_matrix)):
        n = 2000
        m = pmf_moments(fn(n, WalkParams.from_p(Fraction(1, 2), mode), "float"))
        ratio = m.mean / math.sqrt(n) / math.sqrt(math.pi / 2)
        out.append((f"{mode.value} E(M)/sqrt(n) n={n}", abs(ratio - 1) < 0.05, f"ratio {ratio:.4f}"))
    return out


_RUNNERS = {
    "cross-method": _cross_method,
    "oracle": _oracle,
    "marginals": _marginals,
    "constants": _constants,
    "asymptotics": _asymptotics,
}


def run_suite(name: str) -> list:
    names = SUITES if name == "all" else (name,)
    rows = []
    for suite in names:
        for check, ok, detail in _RUNNERS[suite]():
            rows.append((suite, check, bool(ok), detail))
    return rows

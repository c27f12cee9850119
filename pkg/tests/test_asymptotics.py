import math
from fractions import Fraction

import mpmath
import pytest

from walkextremes.asymptotics import (
    Regime,
    catalan_constant,
    catalan_partial_sums,
    predict_moments,
    second_moment_probe,
    sech_limit_probe,
)
from walkextremes.errors import InvalidParams, RegimeMismatch
from walkextremes.walkcore import Mode, WalkParams

G = float(mpmath.catalan)


def test_catalan_against_mpmath():
    assert catalan_constant(1e-10) == pytest.approx(0.9159655941, abs=1e-10)
    assert catalan_constant(1e-14) == pytest.approx(G, abs=1e-14)
    assert 2 * catalan_constant() == pytest.approx(1.8319311883, abs=2e-10)


def test_catalan_bracketing_and_stability():
    g = catalan_constant(1e-12)
    s = catalan_partial_sums(40)
    for lo, hi in zip(s, s[1:]):
        assert min(lo, hi) <= g <= max(lo, hi)
    assert all(catalan_constant(1e-12) == g for _ in range(3))
    with pytest.raises(InvalidParams):
        catalan_constant(1e-16)


def test_catalan_integral_is_twice_g():
    integral = mpmath.quad(lambda t: t / mpmath.cosh(t), [0, mpmath.inf])
    assert float(integral) == pytest.approx(2 * G, abs=1e-12)


def test_predictor_examples():
    m = predict_moments(Regime.ASYMMETRIC_PLAIN_MAX, 100, WalkParams(Fraction(1, 3), Fraction(2, 3)))
    assert (m.mean, m.second_moment) == (1, 3)
    lazy = WalkParams(Fraction(1, 3), Fraction(1, 3), Fraction(1, 3), mode=Mode.WEAK)
    assert predict_moments(Regime.LAZY_REFLECTED, 1, lazy).mean == pytest.approx(1.023, abs=5e-4)
    assert predict_moments(Regime.LAZY_REFLECTED, 1, lazy).second_moment == pytest.approx(4 / 3 * G, abs=1e-12)
    t = predict_moments(Regime.TRAFFIC_LIGHT, 1)
    assert t.mean == pytest.approx(0.512, abs=5e-4)
    assert t.second_moment == pytest.approx(0.305, abs=5e-4)


def test_symmetric_max_predictor_identity():
    half = WalkParams.from_p(Fraction(1, 2))
    for n in (1, 10, 1000):
        m = predict_moments(Regime.SYMMETRIC_PLAIN_MAX, n, half)
        assert m.mean + m.second_moment == pytest.approx(n, abs=1e-9)


def test_persistent_predictor():
    m = predict_moments(Regime.PERSISTENT_SYMMETRIC, 10000, alpha=0.5)
    plain = predict_moments(Regime.SYMMETRIC_PLAIN_MAX, 10000, WalkParams.from_p(Fraction(1, 2)))
    assert m.mean == pytest.approx(plain.mean)
    with pytest.raises(RegimeMismatch):
        predict_moments(Regime.PERSISTENT_SYMMETRIC, 10)


def test_regime_mismatch():
    half = WalkParams.from_p(Fraction(1, 2))
    with pytest.raises(RegimeMismatch):
        predict_moments(Regime.ASYMMETRIC_PLAIN_MIN, 10, half)
    with pytest.raises(RegimeMismatch):
        predict_moments(Regime.SYMMETRIC_PLAIN_MAX, 10, WalkParams.from_p(Fraction(1, 3)))
    with pytest.raises(RegimeMismatch):
        predict_moments(Regime.REFLECTED_SYMMETRIC, 10, half)
    with pytest.raises(RegimeMismatch):
        predict_moments(Regime.LAZY_REFLECTED, 10, half.with_mode(Mode.STRONG))


@pytest.mark.parametrize("scenario", ["strong", "weak"])
def test_probes(scenario):
    assert sech_limit_probe(0.001, scenario) == pytest.approx(math.sqrt(math.pi / 2), abs=0.002)
    assert second_moment_probe(0.001, scenario) == pytest.approx(2 * G, abs=0.005)
    with pytest.raises(InvalidParams):
        sech_limit_probe(0.0, scenario)


@pytest.mark.parametrize("scenario", ["strong", "weak"])
def test_probe_increases_as_t_shrinks(scenario):
    ts = [0.1 / k for k in range(1, 21)]
    values = [sech_limit_probe(t, scenario) for t in ts]
    assert values == sorted(values)
    assert values[-1] < math.sqrt(math.pi / 2)


def test_probe_strong_exceeds_weak():
    for t in (0.5, 0.1, 0.01):
        gap = sech_limit_probe(t, "strong") - sech_limit_probe(t, "weak")
        assert 0 < gap < t


def test_second_moment_probe_halving():
    a, b, c = (second_moment_probe(t, "strong") for t in (0.02, 0.01, 0.005))
    assert abs(c - 2 * G) < abs(b - 2 * G) < abs(a - 2 * G)

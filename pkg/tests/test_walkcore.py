from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from walkextremes.errors import BadBand, InvalidParams
from walkextremes.oracle import enumerate_exact
from walkextremes.reflect_strong import strong_pmf
from walkextremes.reflect_weak import weak_pmf
from walkextremes.walkcore import (
    JointPmf,
    Mode,
    Pmf,
    WalkParams,
    band_stay_probability,
    dominates,
    pmf_moments,
)

from conftest import PROBS

P, Q = Fraction(1, 3), Fraction(2, 3)


def test_params_validation():
    with pytest.raises(InvalidParams):
        WalkParams(Fraction(1, 2), Fraction(1, 3))
    with pytest.raises(InvalidParams):
        WalkParams(Fraction(2, 3), Fraction(1, 3))
    w = WalkParams(Fraction(2, 3), Fraction(1, 3), allow_upward_drift=True)
    assert w.p > w.q
    assert WalkParams.from_p(Fraction(1, 2)).symmetric
    assert WalkParams(Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)).lazy


def test_pmf_validation():
    with pytest.raises(InvalidParams):
        Pmf((0, 1), (Fraction(1, 2), Fraction(1, 3)))
    with pytest.raises(InvalidParams):
        Pmf((1, 0), (Fraction(1, 2), Fraction(1, 2)))
    with pytest.raises(InvalidParams):
        Pmf((0, 1), (Fraction(3, 2), Fraction(-1, 2)))
    Pmf((0, 1), (0.5, 0.5 + 1e-13), exact=False)


def test_joint_validation():
    with pytest.raises(InvalidParams):
        JointPmf(1, {(0, 0): Fraction(1)})
    with pytest.raises(InvalidParams):
        JointPmf(1, {(1, 0): Fraction(1, 2), (0, 1): Fraction(1, 3)})
    assert JointPmf(1, {(0, 0): Fraction(1)}, lazy=True)[0, 0] == 1


@given(st.lists(st.integers(1, 50), min_size=1, max_size=8))
def test_random_pmfs_normalize(weights):
    total = sum(weights)
    pmf = Pmf.from_dict({k: Fraction(w, total) for k, w in enumerate(weights)})
    assert sum(pmf.probabilities) == 1
    with pytest.raises(InvalidParams):
        Pmf.from_dict({k: Fraction(w, total + 1) for k, w in enumerate(weights)})


def test_moments_examples():
    m = pmf_moments(Pmf.point(0))
    assert m.mean == 0 and m.variance == 0
    m = pmf_moments(Pmf.from_dict({0: Fraction(1, 2), 1: Fraction(1, 4), 2: Fraction(1, 4)}))
    assert m.mean == Fraction(3, 4) and m.second_moment == Fraction(5, 4)
    m = pmf_moments(Pmf.point(7))
    assert m.mean == 7 and m.variance == 0


def test_band_examples():
    w = WalkParams(P, Q)
    assert band_stay_probability(1, -1, 1, w) == 0
    assert band_stay_probability(2, -2, 2, w) == 2 * P * Q
    assert band_stay_probability(2, -2, 2, WalkParams.from_p(Fraction(1, 2))) == Fraction(1, 2)
    with pytest.raises(BadBand):
        band_stay_probability(3, 0, 2, w)
    with pytest.raises(BadBand):
        band_stay_probability(3, -1, 0, w)


def _stay_by_enumeration(n, lo, hi, params):
    # P{lo < S_j < hi for all j} from the oracle's joint law of (M+, M-)
    joint = enumerate_exact(n, params, "joint")
    return sum((v for (a, b), v in joint.entries.items() if a < hi and b < -lo), Fraction(0))


@pytest.mark.parametrize("p", PROBS)
def test_band_matches_oracle(p):
    w = WalkParams.from_p(p)
    for n in range(0, 13):
        for lo in range(-4, 0):
            for hi in range(1, 5):
                assert band_stay_probability(n, lo, hi, w) == _stay_by_enumeration(n, lo, hi, w)


def test_band_monotone():
    w = WalkParams.from_p(Fraction(2, 5))
    for n in range(1, 15):
        for lo, hi in ((-2, 3), (-3, 3), (-3, 4)):
            v = band_stay_probability(n, lo, hi, w)
            assert band_stay_probability(n + 1, lo, hi, w) <= v
            assert band_stay_probability(n, lo - 1, hi, w) >= v
            assert band_stay_probability(n, lo, hi + 1, w) >= v


def test_band_float_close_to_exact():
    w = WalkParams.from_p(Fraction(2, 5))
    assert abs(band_stay_probability(40, -5, 6, w, "float") - float(band_stay_probability(40, -5, 6, w))) < 1e-14


def test_dominates_examples():
    x = Pmf.from_dict({0: Fraction(1, 2), 3: Fraction(1, 2)})
    assert dominates(x, x)
    strong = Pmf.from_dict({1: Q, 2: P})
    weak = Pmf.from_dict({0: Q * Q, 1: 2 * P * Q, 2: P * P})
    assert dominates(strong, weak)
    assert not dominates(Pmf.point(0), Pmf.point(1))
    with pytest.raises(InvalidParams):
        dominates(Pmf((0,), (1.0,), exact=False), x)


@pytest.mark.parametrize("p", PROBS)
def test_strong_dominates_weak(p):
    for n in range(1, 13):
        s = strong_pmf(n, WalkParams.from_p(p, Mode.STRONG))
        w = weak_pmf(n, WalkParams.from_p(p, Mode.WEAK))
        assert dominates(s, w)

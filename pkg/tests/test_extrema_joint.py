from fractions import Fraction

import pytest

from walkextremes.errors import TooLarge
from walkextremes.exactnum import binom
from walkextremes.extrema_joint import (
    _printed_marginal,
    cross_moment,
    exit_probability_psi,
    exit_terms,
    first_passage_C,
    joint_pmf,
    marginal_max_pmf,
    max_abs_pmf,
    symmetric_max_mean,
    symmetric_max_second_moment,
    symmetric_max_series,
)
from walkextremes.oracle import enumerate_exact
from walkextremes.walkcore import Pmf, WalkParams, band_stay_probability, pmf_moments

from conftest import PROBS

P, Q = Fraction(1, 3), Fraction(2, 3)
W = WalkParams(P, Q)
HALF = WalkParams.from_p(Fraction(1, 2))


def test_C_examples():
    assert first_passage_C(1, 1, W) == 1
    assert first_passage_C(3, 1, W) == P * Q
    assert first_passage_C(2, 1, W) == 0
    assert first_passage_C(3, 0, W) == 0
    assert first_passage_C(3, 5, W) == 0


def test_psi_examples():
    assert exit_probability_psi(1, 1, 1, W) == 1
    t = exit_terms(1, 1, 1, W)
    assert (t.f_value, t.g_value) == (P, Q)
    assert exit_probability_psi(1, 2, 1, W) == Q
    assert exit_probability_psi(1, 1, 0, W) == 0


def test_psi_plus_survival_is_one():
    for a in range(1, 6):
        for b in range(1, 7 - a):
            total = sum(exit_probability_psi(n, a, b, HALF) for n in range(1, 41))
            assert total + band_stay_probability(40, -b, a, HALF) == 1


def test_joint_small_tables():
    assert dict(joint_pmf(1, W).entries) == {(1, 0): P, (0, 1): Q}
    j = joint_pmf(2, W)
    assert j.matrix() == [[0, P * Q, Q * Q], [P * Q, 0, 0], [P * P, 0, 0]]
    assert joint_pmf(3, W)[0, 3] == Q**3


@pytest.mark.parametrize("p", PROBS)
def test_joint_matches_oracle(p):
    w = WalkParams.from_p(p)
    for n in range(0, 15):
        assert joint_pmf(n, w) == enumerate_exact(n, w, "joint")


@pytest.mark.parametrize("p", PROBS)
def test_joint_recurrence_equals_band(p):
    w = WalkParams.from_p(p)
    for n in range(0, 13):
        assert joint_pmf(n, w, "recurrence") == joint_pmf(n, w, "band")


@pytest.mark.parametrize("p", PROBS)
def test_joint_margins_match_marginals(p):
    w = WalkParams.from_p(p)
    for n in range(0, 25):
        j = joint_pmf(n, w)
        assert j.marginal("plus") == marginal_max_pmf(n, "plus", w)
        assert j.marginal("minus") == marginal_max_pmf(n, "minus", w)


def test_marginal_examples():
    assert marginal_max_pmf(2, "plus", W) == Pmf.from_dict({0: Q, 1: P * Q, 2: P * P})
    for n in range(1, 10):
        assert marginal_max_pmf(n, "plus", W).prob(n) == P**n
    assert marginal_max_pmf(2, "plus", HALF) == Pmf.from_dict({0: Fraction(1, 2), 1: Fraction(1, 4), 2: Fraction(1, 4)})


def test_printed_marginal_double_counts():
    # the uncorrected difference gives p - 2p^2 instead of pq at n = 2
    printed = _printed_marginal(2, "plus", W)
    assert printed[1] == P - 2 * P * P
    assert printed[1] != P * Q


@pytest.mark.parametrize("p", PROBS)
def test_reflection_marginal_equals_band(p):
    w = WalkParams.from_p(p)
    for n in range(0, 30):
        for side in ("plus", "minus"):
            assert marginal_max_pmf(n, side, w, "reflection") == marginal_max_pmf(n, side, w, "band")


def test_symmetric_series():
    s = symmetric_max_series(20)
    for n in range(21):
        assert s.eta[n] == n * 2**n - s.xi[n]
    assert [symmetric_max_mean(n) for n in range(3)] == [0, Fraction(1, 2), Fraction(3, 4)]


def test_symmetric_mean_matches_pmf():
    for n in range(0, 40):
        m = pmf_moments(marginal_max_pmf(n, "plus", HALF))
        assert m.mean == symmetric_max_mean(n)
        assert m.second_moment == symmetric_max_second_moment(n)
        assert m.mean == sum(Fraction(k * binom(n, (n - k) // 2), 2**n) for k in range(n + 1))


def test_max_abs_examples():
    assert max_abs_pmf(1, W) == Pmf.point(1)
    assert max_abs_pmf(2, HALF) == Pmf.from_dict({1: Fraction(1, 2), 2: Fraction(1, 2)})


@pytest.mark.parametrize("p", PROBS)
def test_max_abs_oracle_and_bounds(p):
    w = WalkParams.from_p(p)
    for n in range(1, 13):
        law = max_abs_pmf(n, w)
        assert law == enumerate_exact(n, w, "maxabs")
        assert 0 not in law.support
        plus = pmf_moments(marginal_max_pmf(n, "plus", w)).mean
        minus = pmf_moments(marginal_max_pmf(n, "minus", w)).mean
        mean = pmf_moments(law).mean
        assert max(plus, minus) <= mean <= plus + minus


def test_lazy_band_laws_match_oracle():
    for w in (WalkParams(P, P, P), WalkParams(Fraction(1, 6), Fraction(1, 2), Fraction(1, 3))):
        for n in range(0, 9):
            assert joint_pmf(n, w) == enumerate_exact(n, w, "joint")
            assert marginal_max_pmf(n, "minus", w) == enumerate_exact(n, w, "absmin")
            assert max_abs_pmf(n, w) == enumerate_exact(n, w, "maxabs")


def test_cross_moment_examples():
    assert cross_moment(1, W) == 0
    assert cross_moment(3, W) == P * Q
    oracle = enumerate_exact(12, HALF, "joint")
    assert cross_moment(12, HALF) == oracle.cross_moment()
    assert cross_moment(12, HALF, arithmetic="float") == pytest.approx(float(oracle.cross_moment()), abs=1e-12)


def test_cross_moment_guard():
    with pytest.raises(TooLarge):
        cross_moment(513, HALF)

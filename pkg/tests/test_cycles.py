import math
import random
from fractions import Fraction

import pytest

from walkextremes.cycles import (
    CycleLaw,
    cycle_max_distribution,
    cycle_max_moments,
    euler_gamma,
    knuth_asymptotic,
    lambert_auxiliary,
    record_of_copies_mean,
)
from walkextremes.errors import SymmetricUnsupported
from walkextremes.oracle import enumerate_exact, returned_mass
from walkextremes.walkcore import WalkParams

W = WalkParams(Fraction(1, 3), Fraction(2, 3))


def test_distribution_examples():
    assert cycle_max_distribution(1, W)[0] == 0
    assert cycle_max_distribution(2, W)[0] == Fraction(2, 3)
    law = CycleLaw.of(W)
    assert math.fsum(float(law.pmf(k)) for k in range(1, 61)) == pytest.approx(1, abs=1e-15)


def test_symmetric_rejected():
    with pytest.raises(SymmetricUnsupported):
        cycle_max_distribution(2, WalkParams.from_p(Fraction(1, 2)))
    with pytest.raises(SymmetricUnsupported):
        cycle_max_moments(WalkParams.from_p(Fraction(1, 2)))


def test_cdf_monotone_and_telescoping():
    law = CycleLaw(Fraction(2, 5))
    cdfs = [law.cdf(k) for k in range(1, 30)]
    assert cdfs == sorted(cdfs)
    assert all(law.pmf(k) >= 0 for k in range(1, 30))
    assert sum(law.pmf(k) for k in range(1, 29)) == law.cdf(29) - law.cdf(1)


def test_algebraic_identity():
    rng = random.Random(5)
    for _ in range(50):
        x = Fraction(rng.randint(1, 99), 100)
        for k in range(1, 21):
            lhs = (1 - x**k) - (1 - x ** (k + 1))
            rhs = x ** (k + 1) * (1 - x**k) - x**k * (1 - x ** (k + 1))
            assert lhs == rhs


def test_matches_conditioned_enumeration():
    # conditioning on T <= 14 instead of T < infinity shifts each cdf by at most
    # the share of returning mass that comes back after time 14
    n = 14
    law = enumerate_exact(n, W, "cycle")
    bias = (2 * W.p - returned_mass(n, W)) / (2 * W.p)
    for k in range(1, 8):
        below = sum((law.prob(j) for j in range(1, k)), Fraction(0))
        assert abs(below - CycleLaw.of(W).cdf(k)) <= bias


def test_moments():
    m = cycle_max_moments(W)
    assert m.mean == pytest.approx(1.6066951524, abs=1e-9)
    assert m.second_moment == pytest.approx(3.8813726251, abs=1e-9)
    assert lambert_auxiliary(W) == pytest.approx(2.7440338887, abs=1e-9)


def test_moments_against_pmf_sums():
    for w in (W, WalkParams.from_p(Fraction(2, 5))):
        law = CycleLaw.of(w)
        pmf = [float(law.pmf(k)) for k in range(1, 200)]
        m = cycle_max_moments(w)
        assert m.mean == pytest.approx(math.fsum(k * v for k, v in enumerate(pmf, 1)), abs=1e-12)
        assert m.second_moment == pytest.approx(math.fsum(k * k * v for k, v in enumerate(pmf, 1)), abs=1e-10)


def test_copies():
    assert record_of_copies_mean(1, W) == pytest.approx(1.6066951524, abs=1e-9)
    two = math.fsum(1 - (1 - 1 / (2**k - 1)) ** 2 for k in range(1, 80))
    assert record_of_copies_mean(2, W) == pytest.approx(two, abs=1e-12)
    for n in (1, 2, 10, 100):
        assert record_of_copies_mean(n, W, "tail") == pytest.approx(record_of_copies_mean(n, W, "pmf"), abs=1e-12)
    means = [record_of_copies_mean(n, W) for n in (1, 2, 5, 10, 100, 1000)]
    assert means == sorted(set(means))


def test_copies_grow_like_log2():
    n = 2**20
    assert record_of_copies_mean(n, W) / math.log(n) == pytest.approx(1 / math.log(2), rel=0.02)


def test_euler_gamma():
    assert euler_gamma() == pytest.approx(0.57721566490153286, abs=1e-12)


def test_knuth_shifted_constant():
    # the sum over k >= 1 equals the trie sum without its j = 0 term, so the
    # constant it tracks is gamma/ln 2 - 1/2
    residuals = []
    for k in range(10, 21, 2):
        est = knuth_asymptotic(2**k)
        assert abs(est.shifted_residual) <= 0.01
        assert est.residual == pytest.approx(est.shifted_residual - 1, abs=1e-12)
        residuals.append(est.shifted_residual)
    assert abs(sum(residuals) / len(residuals)) <= max(abs(r) for r in residuals)

from fractions import Fraction

import pytest

from walkextremes.errors import TooLarge
from walkextremes.exactnum import PowerSeries
from walkextremes.oracle import enumerate_exact
from walkextremes.reflect_weak import (
    weak_chain,
    weak_gf_diagonal,
    weak_gf_tilde,
    weak_hit_probability,
    weak_pmf,
    weak_pmf_matrix,
    weak_pmf_recurrence,
    weak_pmf_series,
    weak_series_pmfs,
    weak_table,
)
from walkextremes.walkcore import Mode, Pmf, WalkParams

from conftest import PROBS

P, Q = Fraction(1, 3), Fraction(2, 3)
W = WalkParams(P, Q, mode=Mode.WEAK)


def test_chain_differs_only_in_row_zero():
    k = weak_chain(3, W)
    assert k.matrix[0] == (Q, P, 0, 0)
    assert k.matrix[1] == (Q, 0, P, 0)
    for a in range(1, 5):
        for n in range(0, 8):
            assert weak_chain(a, W).hit_probability(n) == weak_hit_probability(n, a, W)


def test_small_pmfs():
    for method in (weak_pmf_matrix, weak_pmf_recurrence, weak_pmf_series):
        assert method(1, W) == Pmf.from_dict({0: Q, 1: P})
        assert method(2, W) == Pmf.from_dict({0: Q * Q, 1: 2 * P * Q, 2: P * P})


def test_recurrence_table_n2():
    assert weak_table(1, W) == {(0, 0): Q, (1, 1): P}
    assert weak_table(2, W) == {(0, 0): Q * Q, (1, 1): P * Q, (0, 1): Q * P, (2, 2): P * P}


@pytest.mark.parametrize("p", PROBS)
def test_three_methods_agree(p):
    w = WalkParams.from_p(p, Mode.WEAK)
    table = weak_series_pmfs(24, w)
    for n in range(1, 25):
        law = weak_pmf_matrix(n, w)
        assert law == weak_pmf_recurrence(n, w) == table[n]
        assert law.prob(0) == (1 - p) ** n


@pytest.mark.parametrize("p", PROBS)
def test_oracle(p):
    w = WalkParams.from_p(p, Mode.WEAK)
    for n in range(1, 15):
        assert weak_pmf_recurrence(n, w) == enumerate_exact(n, w, "reflected")


def test_lazy_oracle():
    w = WalkParams(P, P, P, mode=Mode.WEAK)
    for n in range(1, 9):
        law = enumerate_exact(n, w, "reflected")
        assert weak_pmf_matrix(n, w) == law
        assert weak_pmf_recurrence(n, w) == law


def test_series_guard():
    with pytest.raises(TooLarge):
        weak_pmf_series(40, W)


def test_gf_zero_diagonal():
    g = weak_gf_diagonal(0, 10, W)
    assert g == PowerSeries([0, Q], 10) / PowerSeries([1, -Q], 10)


@pytest.mark.parametrize("p", PROBS)
def test_gf_tilde_closed_form_a1(p):
    q = 1 - p
    w = WalkParams.from_p(p, Mode.WEAK)
    lhs = weak_gf_tilde(1, 12, w)
    rhs = PowerSeries([0, p], 12) / (PowerSeries([1, -q], 12) * PowerSeries([1, -q, -p * q], 12))
    assert lhs == rhs
    assert lhs[1] == p
    assert lhs[2] == 2 * p * q


@pytest.mark.parametrize("p", PROBS)
def test_gf_tilde_gives_pmf(p):
    w = WalkParams.from_p(p, Mode.WEAK)
    table = weak_series_pmfs(12, w)
    tildes = [None] + [weak_gf_tilde(a, 12, w) for a in range(1, 13)]
    for n in range(1, 13):
        assert sum(tildes[a][n] for a in range(1, n + 1)) + (1 - p) ** n == 1
        for a in range(1, n + 1):
            assert tildes[a][n] == table[n].prob(a)


def test_float_matrix_close_to_exact():
    w = WalkParams.from_p(Fraction(1, 2), Mode.WEAK)
    exact = weak_pmf(80, w)
    approx = weak_pmf(80, w, method="matrix", arithmetic="float")
    for a in exact.support:
        assert approx.prob(a) == pytest.approx(float(exact.prob(a)), abs=1e-14)

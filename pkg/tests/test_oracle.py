from fractions import Fraction

import pytest

from walkextremes.errors import InvalidParams, TooLarge
from walkextremes.exactnum import binom
from walkextremes.oracle import enumerate_exact, returned_mass
from walkextremes.walkcore import Mode, Pmf, WalkParams

P, Q = Fraction(1, 3), Fraction(2, 3)


def test_small_examples():
    w = WalkParams(P, Q)
    assert dict(enumerate_exact(1, w, "joint").entries) == {(1, 0): P, (0, 1): Q}
    assert enumerate_exact(1, w.with_mode(Mode.STRONG), "reflected") == Pmf.point(1)
    assert enumerate_exact(2, w.with_mode(Mode.WEAK), "reflected") == Pmf.from_dict({0: Q * Q, 1: 2 * P * Q, 2: P * P})


def test_caps():
    with pytest.raises(TooLarge):
        enumerate_exact(17, WalkParams(P, Q), "max")
    with pytest.raises(TooLarge):
        enumerate_exact(11, WalkParams(P, P, P), "max")


def test_statistic_mode_consistency():
    with pytest.raises(InvalidParams):
        enumerate_exact(3, WalkParams(P, Q), "reflected")
    with pytest.raises(InvalidParams):
        enumerate_exact(3, WalkParams(P, Q, mode=Mode.STRONG), "max")


def test_symmetric_max_closed_form():
    w = WalkParams.from_p(Fraction(1, 2))
    for n in range(0, 15):
        expected = {k: Fraction(binom(n, (n - k) // 2), 2**n) for k in range(n + 1)}
        assert enumerate_exact(n, w, "max") == Pmf.from_dict(expected)


def test_cycle_conditioning():
    w = WalkParams(P, Q)
    law = enumerate_exact(2, w, "cycle")
    # the only cycles of length 2 reach height 1
    assert law == Pmf.point(1)
    assert returned_mass(2, w) == 2 * P * Q


def test_traffic_light_steps():
    w = WalkParams.traffic_light()
    law = enumerate_exact(3, w, "reflected")
    # steps 1, 2 are fair {0, +1}; step 3 is forced down
    assert law == Pmf.from_dict({0: Fraction(1, 4), 1: Fraction(1, 2), 2: Fraction(1, 4)})

"""Exact rationals, binomials and truncated power series.

Rationals are :class:`fractions.Fraction`, which already keeps every value in
lowest terms with a positive denominator.  :class:`PowerSeries` is a truncated
formal power series in ``lam`` whose coefficients past ``order`` are unknown
(not zero).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

from .errors import BadConstantTerm, SeriesError, ZeroConstantTerm

Rational = Fraction
Number = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings; floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a probability")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if any(c in text for c in ".eE"):
            raise ValueError(f"decimal input {value!r} is not exact; use NUM/DEN")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def binom(n: int, k: int) -> int:
    """C(n, k), zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError("binom needs n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


class PowerSeries:
    """Truncated power series ``c[0] + c[1] lam + ... + c[order] lam**order``."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[Number], order: int | None = None):
        c = [Fraction(x) for x in coefficients]
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise SeriesError("order must be >= 0")
        if len(c) > order + 1:
            c = c[: order + 1]
        else:
            c.extend([Fraction(0)] * (order + 1 - len(c)))
        self._c = tuple(c)

    @classmethod
    def constant(cls, value: Number, order: int) -> "PowerSeries":
        return cls([value], order)

    @classmethod
    def monomial(cls, k: int, order: int, coefficient: Number = 1) -> "PowerSeries":
        return cls([0] * k + [coefficient], order)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coefficients(self) -> tuple:
        return self._c

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            return Fraction(0)
        if k > self.order:
            raise IndexError(f"coefficient {k} is beyond truncation order {self.order}")
        return self._c[k]

    def __len__(self) -> int:
        return len(self._c)

    def __repr__(self) -> str:
        terms = ", ".join(str(x) for x in self._c)
        return f"PowerSeries([{terms}], order={self.order})"

    def __eq__(self, other) -> bool:
        if isinstance(other, PowerSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend a series known to order {self.order}")
        return PowerSeries(self._c[: order + 1], order)

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = min(self.order, other.order)
        return PowerSeries([self._c[i] + other._c[i] for i in range(m + 1)], m)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-x for x in self._c], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries([x * other for x in self._c], self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries([x / other for x in self._c], self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return series_div(self, other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = PowerSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift_down(self) -> "PowerSeries":
        """Divide by ``lam``; the constant term must vanish."""
        if self._c[0] != 0:
            raise SeriesError("division by lam needs a zero constant term")
        if self.order == 0:
            raise SeriesError("nothing left after dividing an order-0 series by lam")
        return PowerSeries(self._c[1:], self.order - 1)

    def shift_up(self, k: int = 1) -> "PowerSeries":
        """Multiply by ``lam**k`` keeping the truncation order."""
        return PowerSeries([0] * k + list(self._c[: self.order + 1 - k]), self.order)

    def partial_sums(self) -> "PowerSeries":
        """Multiply by ``1/(1 - lam)``."""
        out, acc = [], Fraction(0)
        for x in self._c:
            acc += x
            out.append(acc)
        return PowerSeries(out, self.order)


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    m = min(a.order, b.order)
    ac, bc = a.coefficients, b.coefficients
    out = []
    for k in range(m + 1):
        s = Fraction(0)
        for i in range(k + 1):
            x = ac[i]
            if x:
                y = bc[k - i]
                if y:
                    s += x * y
        out.append(s)
    return PowerSeries(out, m)


def series_div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Return ``q`` with ``q * b == a`` up to the common order."""
    b0 = b[0]
    if b0 == 0:
        raise ZeroConstantTerm("divisor has zero constant term")
    m = min(a.order, b.order)
    ac, bc = a.coefficients, b.coefficients
    q: list[Fraction] = []
    for k in range(m + 1):
        s = ac[k]
        for i in range(1, k + 1):
            y = bc[i]
            if y:
                s -= y * q[k - i]
        q.append(s / b0)
    return PowerSeries(q, m)


def series_sqrt(s: PowerSeries) -> PowerSeries:
    """Square root with constant term 1 (only ``s[0] == 1`` is accepted)."""
    if s[0] != 1:
        raise BadConstantTerm("series_sqrt needs constant term 1")
    c = s.coefficients
    r = [Fraction(1)]
    for k in range(1, s.order + 1):
        acc = c[k]
        for i in range(1, k):
            acc -= r[i] * r[k - i]
        r.append(acc / 2)
    return PowerSeries(r, s.order)


def theta_series(p: Number, q: Number, order: int) -> PowerSeries:
    """``(1 - sqrt(1 - 4 p q lam**2)) / lam`` to the requested order."""
    p, q = Fraction(p), Fraction(q)
    if p <= 0 or q <= 0 or p + q != 1:
        raise SeriesError("theta needs 0 < p, 0 < q, p + q = 1")
    if order < 1:
        raise SeriesError("theta needs order >= 1")
    radicand = PowerSeries([1, 0, -4 * p * q], order + 1)
    return (1 - series_sqrt(radicand)).shift_down()


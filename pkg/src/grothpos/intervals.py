"""Closed rational intervals, used wherever a transcendental constant must be bounded."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x: Rational) -> "Interval":
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    def _coerce(self, other) -> "Interval":
        if isinstance(other, Interval):
            return other
        if isinstance(other, (int, Fraction)):
            return Interval(other, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Interval(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(ps), max(ps))

    __rmul__ = __mul__

    def reciprocal(self) -> "Interval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError(f"interval {self} contains 0")
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.reciprocal()

    def __pow__(self, k: int):
        if k < 0:
            return self.reciprocal() ** (-k)
        out: Interval = Interval(1, 1)
        for _ in range(k):
            out = out * self
        return out

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


SpecValue = Union[Fraction, Interval]


def lower(x) -> Fraction:
    return x.lo if isinstance(x, Interval) else Fraction(x)


def upper(x) -> Fraction:
    return x.hi if isinstance(x, Interval) else Fraction(x)


def is_exact(x) -> bool:
    return not isinstance(x, Interval) or x.lo == x.hi


def exact_value(x) -> Fraction:
    if isinstance(x, Interval):
        if x.lo != x.hi:
            raise ValueError(f"{x} is not exact")
        return x.lo
    return Fraction(x)


def sign_of(x) -> int | None:
    """1, 0 or -1 when decided; None when an interval straddles zero."""
    lo, hi = lower(x), upper(x)
    if lo > 0:
        return 1
    if hi < 0:
        return -1
    if lo == hi == 0:
        return 0
    return None


def exp_interval(x: Rational, tol: Fraction = Fraction(1, 10**40)) -> SpecValue:
    """Rational enclosure of ``e^x`` from a Taylor partial sum and its Lagrange remainder."""
    x = Fraction(x)
    if x == 0:
        return Fraction(1)
    if x < 0:
        return exp_interval(-x, tol).reciprocal()
    bound = Fraction(3) ** math.ceil(x)  # e^x <= 3^ceil(x)
    total, term, k = Fraction(0), Fraction(1), 0
    while True:
        total += term
        k += 1
        term = term * x / k
        remainder = term * bound
        if remainder < tol and k > x:
            return Interval(total, total + remainder)

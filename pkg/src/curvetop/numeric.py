"""Numeric carriers: exact rational intervals, big floats, precision state.

Big floats and complex approximations are mpmath's ``mpf``/``mpc`` at a digit
count carried by :class:`PrecisionContext`.  Intervals keep exact rational
endpoints, so +, -, * and / are exact and the enclosure property is free.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

from curvetop.errors import PoleError, PrecisionExhausted

_FRACTIONABLE = (int, Fraction)


class Interval:
    """Closed interval with exact rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise ValueError("interval endpoints out of order")
        self.lo = lo
        self.hi = hi

    def __repr__(self):
        return f"Interval({self.lo}, {self.hi})"

    def __eq__(self, other):
        return (
            isinstance(other, Interval)
            and self.lo == other.lo
            and self.hi == other.hi
        )

    def __hash__(self):
        return hash((self.lo, self.hi))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def sign(self) -> int:
        """1 or -1 when certain, 0 when the interval straddles zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0

    def __add__(self, other):
        if isinstance(other, Interval):
            return Interval(self.lo + other.lo, self.hi + other.hi)
        if isinstance(other, _FRACTIONABLE):
            return Interval(self.lo + other, self.hi + other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        if isinstance(other, Interval):
            return Interval(self.lo - other.hi, self.hi - other.lo)
        if isinstance(other, _FRACTIONABLE):
            return Interval(self.lo - other, self.hi - other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Interval):
            vals = (
                self.lo * other.lo,
                self.lo * other.hi,
                self.hi * other.lo,
                self.hi * other.hi,
            )
            return Interval(min(vals), max(vals))
        if isinstance(other, _FRACTIONABLE):
            a, b = self.lo * other, self.hi * other
            return Interval(min(a, b), max(a, b))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _FRACTIONABLE):
            if other == 0:
                raise ZeroDivisionError
            other = Interval(other)
        if isinstance(other, Interval):
            if other.contains_zero():
                raise PoleError("division by an interval containing zero")
            vals = (
                self.lo / other.lo,
                self.lo / other.hi,
                self.hi / other.lo,
                self.hi / other.hi,
            )
            return Interval(min(vals), max(vals))
        return NotImplemented

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def is_inside(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi


class PrecisionContext:
    """Working digit count with the escalation policy.

    Escalation adds ``escalation_step`` digits; when this would exceed
    ``max_digits`` a :class:`PrecisionExhausted` error is raised.
    """

    __slots__ = ("digits", "max_digits", "escalation_step", "escalations")

    def __init__(self, digits=10, max_digits=500, escalation_step=5):
        if digits <= 0 or max_digits <= 0 or escalation_step <= 0:
            raise ValueError("precision parameters must be positive")
        if digits > max_digits:
            raise ValueError("digits exceeds max_digits")
        self.digits = digits
        self.max_digits = max_digits
        self.escalation_step = escalation_step
        self.escalations = 0

    def escalate(self):
        if self.digits + self.escalation_step > self.max_digits:
            raise PrecisionExhausted(
                f"needed more than {self.max_digits} digits"
            )
        self.digits += self.escalation_step
        self.escalations += 1

    def eps(self) -> Fraction:
        """Refinement width 10**-digits."""
        return Fraction(1, 10**self.digits)

    def residual_tol(self) -> Fraction:
        """Coordinate residual tolerance 10**(1 - digits)."""
        return Fraction(10, 10**self.digits)

    def copy(self) -> "PrecisionContext":
        ctx = PrecisionContext(
            self.digits, self.max_digits, self.escalation_step
        )
        ctx.escalations = self.escalations
        return ctx

    def __repr__(self):
        return f"PrecisionContext(digits={self.digits})"


def bigfloat(x, digits: int):
    """Round an exact rational (or float) to an mpf with the given digits."""
    with mpmath.workdps(digits + 5):
        if isinstance(x, Fraction):
            return mpmath.mpf(x.numerator) / x.denominator
        return mpmath.mpf(x)


def complex_approx(re, im, digits: int):
    return mpmath.mpc(bigfloat(re, digits), bigfloat(im, digits))

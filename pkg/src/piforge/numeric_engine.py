"""Arbitrary-precision interval arithmetic with an independent pi.

Values are enclosures ``[lo, hi]`` whose bounds are dyadic numbers
``m / 2**scale`` at the fixed scale of a :class:`PrecisionContext`
(``precision_bits + guard_bits`` fractional bits, unbounded integer part).
Every operation rounds outward -- lower bounds toward -inf, upper bounds
toward +inf -- so the true value of any expression is guaranteed to stay
inside the computed interval.  Addition and subtraction are exact at a
common scale; multiplication and division round each bound by at most one
unit in the last place.

Because the dyadic grids nest as the scale grows, doubling the precision
never widens a result computed over the same expression DAG.

``pi`` comes from the Machin relation 16*arctan(1/5) - 4*arctan(1/239),
evaluated by integer fixed-point summation of the alternating arctan
series with explicit bookkeeping of every floor-division error, so the
returned enclosure is rigorous without reference to any series under
study elsewhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "CertifiedReal",
    "IntervalDivisionError",
    "PrecisionContext",
    "TailedInterval",
]


class IntervalDivisionError(ZeroDivisionError):
    """Raised when dividing by an interval whose enclosure contains zero."""


def _ceil_div(a: int, b: int) -> int:
    # b > 0; Python's // already floors, ceil comes from negation.
    return -((-a) // b)


@dataclass(frozen=True)
class PrecisionContext:
    """Shared working precision for interval values.

    ``precision_bits`` is the guaranteed resolution of produced constants
    (e.g. ``pi`` has width <= 2**-precision_bits); ``guard_bits`` of extra
    headroom absorb per-operation rounding.
    """

    precision_bits: int = 128
    guard_bits: int = 32

    def __post_init__(self) -> None:
        if self.precision_bits < 64:
            raise ValueError("precision_bits must be >= 64")
        if self.guard_bits < 0:
            raise ValueError("guard_bits must be >= 0")

    @property
    def scale(self) -> int:
        return self.precision_bits + self.guard_bits

    # -- value factories ---------------------------------------------------

    def from_rational(self, value: Rational | int) -> "CertifiedReal":
        """Tightest enclosure of an exact rational: each bound within 1 ulp."""
        q = Fraction(value)
        den = q.denominator
        if den & (den - 1) == 0:  # dyadic: shifts instead of division
            bits = den.bit_length() - 1
            if bits <= self.scale:
                m = q.numerator << (self.scale - bits)
                return CertifiedReal(self, m, m)
            shifted = q.numerator
            down = bits - self.scale
            return CertifiedReal(self, shifted >> down, -((-shifted) >> down))
        shifted = q.numerator << self.scale
        return CertifiedReal(self, shifted // den, _ceil_div(shifted, den))

    def interval(self, lo: Rational | int, hi: Rational | int) -> "CertifiedReal":
        """Enclosure of ``[lo, hi]`` given as exact rationals."""
        lo_q, hi_q = Fraction(lo), Fraction(hi)
        return CertifiedReal(
            self,
            (lo_q.numerator << self.scale) // lo_q.denominator,
            _ceil_div(hi_q.numerator << self.scale, hi_q.denominator),
        )

    def zero(self) -> "CertifiedReal":
        return CertifiedReal(self, 0, 0)

    def one(self) -> "CertifiedReal":
        unit = 1 << self.scale
        return CertifiedReal(self, unit, unit)

    def pi(self) -> "CertifiedReal":
        """Enclosure of pi of width <= 2**-precision_bits (Machin formula)."""
        lo, hi = _pi_mantissas(self.scale)
        return CertifiedReal(self, lo, hi)

    def pi_power(self, p: int) -> "CertifiedReal":
        lo, hi = _pi_power_mantissas(self.scale, p)
        return CertifiedReal(self, lo, hi)

    def inv_pi_squared(self) -> "CertifiedReal":
        lo, hi = _inv_pi_squared_mantissas(self.scale)
        return CertifiedReal(self, lo, hi)


class CertifiedReal:
    """An interval ``[lo, hi]`` of dyadic bounds guaranteed to contain the
    true value; ``width`` reports the diameter."""

    __slots__ = ("ctx", "lo_m", "hi_m")

    def __init__(self, ctx: PrecisionContext, lo_m: int, hi_m: int):
        if lo_m > hi_m:
            raise ValueError("inverted interval bounds")
        self.ctx = ctx
        self.lo_m = lo_m
        self.hi_m = hi_m

    # -- inspection ----------------------------------------------------------

    @property
    def lo(self) -> Fraction:
        return Fraction(self.lo_m, 1 << self.ctx.scale)

    @property
    def hi(self) -> Fraction:
        return Fraction(self.hi_m, 1 << self.ctx.scale)

    @property
    def mid(self) -> Fraction:
        return Fraction(self.lo_m + self.hi_m, 1 << (self.ctx.scale + 1))

    @property
    def width(self) -> Fraction:
        return Fraction(self.hi_m - self.lo_m, 1 << self.ctx.scale)

    @property
    def mag(self) -> Fraction:
        """Largest absolute value the enclosure permits."""
        return Fraction(max(abs(self.lo_m), abs(self.hi_m)), 1 << self.ctx.scale)

    def contains(self, value: "CertifiedReal | Rational | int") -> bool:
        if isinstance(value, CertifiedReal):
            self._check(value)
            return self.lo_m <= value.lo_m and value.hi_m <= self.hi_m
        q = Fraction(value)
        return self.lo <= q <= self.hi

    def contains_zero(self) -> bool:
        return self.lo_m <= 0 <= self.hi_m

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CertifiedReal):
            return NotImplemented
        return (
            self.ctx.scale == other.ctx.scale
            and self.lo_m == other.lo_m
            and self.hi_m == other.hi_m
        )

    def __hash__(self) -> int:
        return hash((self.ctx.scale, self.lo_m, self.hi_m))

    def __repr__(self) -> str:
        return f"CertifiedReal(lo={self.lo!r}, hi={self.hi!r})"

    def _check(self, other: "CertifiedReal") -> "CertifiedReal":
        if self.ctx.scale != other.ctx.scale:
            raise ValueError("mixed precision contexts")
        return other

    # -- arithmetic (outward rounding) ----------------------------------------

    def __add__(self, other: "CertifiedReal") -> "CertifiedReal":
        self._check(other)
        return CertifiedReal(self.ctx, self.lo_m + other.lo_m, self.hi_m + other.hi_m)

    def __sub__(self, other: "CertifiedReal") -> "CertifiedReal":
        self._check(other)
        return CertifiedReal(self.ctx, self.lo_m - other.hi_m, self.hi_m - other.lo_m)

    def __neg__(self) -> "CertifiedReal":
        return CertifiedReal(self.ctx, -self.hi_m, -self.lo_m)

    def __mul__(self, other: "CertifiedReal") -> "CertifiedReal":
        self._check(other)
        a, b, c, d = self.lo_m, self.hi_m, other.lo_m, other.hi_m
        # sign-aware case split: two products except when both straddle zero
        if a >= 0:
            if c >= 0:
                lo, hi = a * c, b * d
            elif d <= 0:
                lo, hi = b * c, a * d
            else:
                lo, hi = b * c, b * d
        elif b <= 0:
            if c >= 0:
                lo, hi = a * d, b * c
            elif d <= 0:
                lo, hi = b * d, a * c
            else:
                lo, hi = a * d, a * c
        else:
            if c >= 0:
                lo, hi = a * d, b * d
            elif d <= 0:
                lo, hi = b * c, a * c
            else:
                lo, hi = min(a * d, b * c), max(a * c, b * d)
        scale = self.ctx.scale
        # right-shifts round toward -inf, so ceil comes from negation
        return CertifiedReal(self.ctx, lo >> scale, -((-hi) >> scale))

    def __truediv__(self, other: "CertifiedReal") -> "CertifiedReal":
        self._check(other)
        if other.contains_zero():
            raise IntervalDivisionError("division by interval containing zero")
        scale = self.ctx.scale
        lo_s, hi_s = self.lo_m << scale, self.hi_m << scale
        c, d = other.lo_m, other.hi_m
        quots_lo = (lo_s // c, lo_s // d, hi_s // c, hi_s // d)
        quots_hi = (
            _ceil_div(lo_s, c),
            _ceil_div(lo_s, d),
            _ceil_div(hi_s, c),
            _ceil_div(hi_s, d),
        )
        return CertifiedReal(self.ctx, min(quots_lo), max(quots_hi))

    def mul_ratio(self, num: int, den: int) -> "CertifiedReal":
        """Multiply by the exact rational num/den with one outward rounding
        per bound (tighter and cheaper than from_rational + mul)."""
        if den < 0:
            num, den = -num, -den
        if den == 0:
            raise ZeroDivisionError("mul_ratio by zero denominator")
        if num >= 0:
            return CertifiedReal(
                self.ctx, (self.lo_m * num) // den, _ceil_div(self.hi_m * num, den)
            )
        return CertifiedReal(
            self.ctx, (self.hi_m * num) // den, _ceil_div(self.lo_m * num, den)
        )

    def mul_rational(self, q: Rational | int) -> "CertifiedReal":
        q = Fraction(q)
        return self.mul_ratio(q.numerator, q.denominator)

    def add_rational(self, q: Rational | int) -> "CertifiedReal":
        return self + self.ctx.from_rational(q)

    def pow_int(self, exponent: int) -> "CertifiedReal":
        """x**exponent for exponent >= 0; even exponents tighten through zero
        (e.g. [-1, 1]**2 == [0, 1])."""
        if exponent < 0:
            raise ValueError("pow_int requires a nonnegative exponent")
        if exponent == 0:
            return self.ctx.one()
        if exponent == 1:
            return CertifiedReal(self.ctx, self.lo_m, self.hi_m)
        scale = self.ctx.scale
        shift = scale * (exponent - 1)
        if exponent % 2 == 1:
            # odd powers are monotone on all of R
            return CertifiedReal(
                self.ctx,
                (self.lo_m**exponent) >> shift,
                -((-(self.hi_m**exponent)) >> shift),
            )
        # even power: reduce to the magnitude interval, which is nonnegative
        if self.contains_zero():
            lo_abs, hi_abs = 0, max(-self.lo_m, self.hi_m)
        elif self.lo_m > 0:
            lo_abs, hi_abs = self.lo_m, self.hi_m
        else:
            lo_abs, hi_abs = -self.hi_m, -self.lo_m
        return CertifiedReal(
            self.ctx,
            (lo_abs**exponent) >> shift,
            -((-(hi_abs**exponent)) >> shift),
        )

    def widened(self, radius: Rational | int) -> "CertifiedReal":
        """Enclosure grown outward by an exact nonnegative radius."""
        r = Fraction(radius)
        if r < 0:
            raise ValueError("widening radius must be >= 0")
        d = _ceil_div(r.numerator << self.ctx.scale, r.denominator)
        return CertifiedReal(self.ctx, self.lo_m - d, self.hi_m + d)


@dataclass(frozen=True)
class TailedInterval:
    """A truncated-series enclosure with its certified tail bound attached.

    ``partial`` encloses the finite sum that was actually evaluated; ``tail``
    bounds the absolute value of everything omitted, so ``enclosure`` is a
    certified enclosure of the full series limit.
    """

    partial: CertifiedReal
    tail: Fraction

    @property
    def enclosure(self) -> CertifiedReal:
        return self.partial.widened(self.tail)


# -- independent pi ----------------------------------------------------------


def _arctan_inv_mantissas(q: int, work: int) -> tuple[int, int]:
    """Integer bracket of arctan(1/q) * 2**work via the alternating Taylor
    series.  Each power/term floor-division loses at most a bounded number
    of units; the returned slack covers every loss plus the truncated tail.
    """
    q2 = q * q
    power = (1 << work) // q  # floor(2**work / q**(2i+1)), error <= 2 ulp
    acc = 0
    i = 0
    terms = 0
    sign = 1
    while power:
        acc += sign * (power // (2 * i + 1))
        power //= q2
        sign = -sign
        i += 1
        terms += 1
    slack = 3 * terms + 4
    return acc - slack, acc + slack


@lru_cache(maxsize=None)
def _pi_mantissas(scale: int) -> tuple[int, int]:
    work = scale + 48
    lo5, hi5 = _arctan_inv_mantissas(5, work)
    lo239, hi239 = _arctan_inv_mantissas(239, work)
    lo = 16 * lo5 - 4 * hi239
    hi = 16 * hi5 - 4 * lo239
    shift = work - scale
    return lo >> shift, -((-hi) >> shift)


@lru_cache(maxsize=None)
def _pi_power_mantissas(scale: int, p: int) -> tuple[int, int]:
    ctx = PrecisionContext(scale - 32, 32) if scale >= 96 else PrecisionContext(64, scale - 64)
    value = ctx.pi().pow_int(p)
    return value.lo_m, value.hi_m


@lru_cache(maxsize=None)
def _inv_pi_squared_mantissas(scale: int) -> tuple[int, int]:
    ctx = PrecisionContext(scale - 32, 32) if scale >= 96 else PrecisionContext(64, scale - 64)
    value = ctx.one() / ctx.pi().pow_int(2)
    return value.lo_m, value.hi_m

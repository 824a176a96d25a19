"""Exact integer and rational primitives with directed rounding.

The only irrational quantities in this package are 2**i-th roots. This
module encloses them between rationals on a decimal grid, tracking when
the root is exact, so everything downstream stays in exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _backend as _b
from ._backend import Integer, Rational


@dataclass(frozen=True)
class RationalInterval:
    """A closed interval [lo, hi] with rational endpoints, lo <= hi."""

    lo: Rational
    hi: Rational

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: {self.lo} > {self.hi}")

    @property
    def width(self) -> Rational:
        return self.hi - self.lo

    @property
    def exact(self) -> bool:
        """True when the interval has collapsed to a single rational."""
        return self.lo == self.hi

    def __contains__(self, value) -> bool:
        return self.lo <= value <= self.hi


def isqrt_floor(x: Integer) -> Integer:
    """floor(sqrt(x)) for x >= 0."""
    if x < 0:
        raise ValueError("isqrt_floor requires x >= 0")
    return _b.isqrt(_b.mpz(x))


def isqrt_ceil(x: Integer) -> Integer:
    """ceil(sqrt(x)) for x >= 0."""
    r = isqrt_floor(x)
    if r * r == x:
        return r
    return r + 1


def rat_pow2(r: Rational, i: int) -> Rational:
    """r**(2**i) by i exact squarings; i must be >= 0."""
    if i < 0:
        raise ValueError("rat_pow2 requires i >= 0")
    q = _b.mpq(r)
    for _ in range(i):
        q = q * q
    return q


def truncate_decimal(q: Rational, digits: int) -> str:
    """Decimal string of q >= 0 truncated (floored) to ``digits`` fraction digits.

    Pure integer arithmetic; never prints a digit beyond what q certifies.
    """
    if q < 0:
        raise ValueError("truncate_decimal requires q >= 0")
    if digits < 0:
        raise ValueError("truncate_decimal requires digits >= 0")
    scaled = (_b.mpz(10) ** digits * q.numerator) // q.denominator
    text = _b.int_str(scaled)
    if digits == 0:
        return text
    text = text.rjust(digits + 1, "0")
    return f"{text[:-digits]}.{text[-digits:]}"


def pow2_root_bounds(x: Integer, i: int, digits: int) -> RationalInterval:
    """Enclose x**(2**-i) between rationals on the 10**-digits grid.

    Returns an interval containing the root, of width at most 10**-digits;
    when x is an exact 2**i-th power the interval collapses to the integer
    root exactly (lo == hi). Scaling by 10**(digits * 2**i) before rooting
    makes the floor root land directly on the output grid: the floor of a
    square root of a floor is the floor of the composed root, so iterating
    integer square roots i times yields floor(x**(2**-i) * 10**digits)
    with no accumulated error.

    Inputs: x >= 1, 0 <= i <= 64, digits >= 1. The scaled operand has
    about digits * 2**i decimal digits, so large i with large digits is
    intentionally expensive; callers pick i first and digits second.
    """
    if x < 1:
        raise ValueError("pow2_root_bounds requires x >= 1")
    if not 0 <= i <= 64:
        raise ValueError("pow2_root_bounds requires 0 <= i <= 64")
    if digits < 1:
        raise ValueError("pow2_root_bounds requires digits >= 1")
    scale = _b.mpz(10) ** digits
    m = _b.mpz(x) * scale ** (1 << i)
    exact = True
    for _ in range(i):
        r = _b.isqrt(m)
        exact = exact and r * r == m
        m = r
    lo = _b.mpq(m, scale)
    if exact:
        return RationalInterval(lo, lo)
    return RationalInterval(lo, _b.mpq(m + 1, scale))

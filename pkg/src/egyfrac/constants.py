"""Limit constants of the sequences and exact comparison of their powers.

Each seed n has a constant c_n = lim s_i(n)**(2**-i), squeezed between
sqrt(n) and sqrt(n+1). Truncating the limit at index i gives certified
bounds: (s_i - 1)**(2**-i) increases to c_n from below while
s_i**(2**-i) decreases to it from above, so a single index encloses the
constant and deeper indices tighten the enclosure doubly exponentially.

A score expression (base m, halvings k) denotes c_m**(2**-k). These
expressions have a canonical form (peel base j*(j+1) down to j, trading
one halving each time), and any two of them compare exactly: clearing
the halvings to a common level turns the comparison into c_a vs c_b for
integer seeds a, b, which the interleaved bounds above decide at the
first index where the sequences differ.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import _backend as _b
from .errors import RefinementLimitError
from .exact import RationalInterval, isqrt_floor, pow2_root_bounds
from .sylvester import term

_REFINEMENT_GUARD = 64


class Ordering(enum.Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"


@dataclass(frozen=True)
class ScoreExpr:
    """c_base**(2**-halvings); halvings may be negative (squarings)."""

    base: int
    halvings: int

    def __post_init__(self):
        if int(self.base) < 1:
            raise ValueError("score base must be >= 1")
        object.__setattr__(self, "base", int(self.base))
        object.__setattr__(self, "halvings", int(self.halvings))

    def __str__(self) -> str:
        if self.halvings == 0:
            return f"c_{self.base}"
        if self.halvings > 0:
            return f"c_{self.base}^(1/{1 << self.halvings})"
        return f"c_{self.base}^{1 << (-self.halvings)}"


def c_bounds(n: int, i: int, digits: int) -> RationalInterval:
    """Enclose c_n between the index-i bounds, rounded outward to the grid.

    Lower endpoint: (s_i - 1)**(2**-i) rounded down; upper endpoint:
    s_i**(2**-i) rounded up. Both are positive and the true constant lies
    strictly between them for every i.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if not 1 <= i <= _REFINEMENT_GUARD:
        raise ValueError(f"need 1 <= i <= {_REFINEMENT_GUARD}")
    s = term(n, i)
    lo = pow2_root_bounds(s - 1, i, digits).lo
    hi = pow2_root_bounds(s, i, digits).hi
    return RationalInterval(lo, hi)


def c_value(n: int, digits: int) -> RationalInterval:
    """Enclose c_n with width at most 10**-digits.

    Walks the index up until the enclosure is tight enough, skipping the
    root computation while a cheap certified lower bound on the gap
    (s_i**(2**-i) - (s_i-1)**(2**-i) > 1/(2**i * s_i)) already rules the
    index out. Roots are taken on a grid two digits finer than requested
    so grid rounding cannot spoil the width check.
    """
    if not 1 <= digits <= 1000:
        raise ValueError("need 1 <= digits <= 1000")
    target_num = _b.mpz(10) ** digits
    goal = _b.mpq(1, target_num)
    for i in range(1, _REFINEMENT_GUARD + 1):
        s = term(n, i)
        if (_b.mpz(1) << i) * s < target_num:
            continue
        enclosure = c_bounds(n, i, digits + 2)
        if enclosure.width <= goal:
            return enclosure
    raise RefinementLimitError(
        f"no enclosure of c_{n} of width 1e-{digits} within "
        f"{_REFINEMENT_GUARD} index refinements"
    )


def score_normalize(expr: ScoreExpr) -> ScoreExpr:
    """Canonical form: peel base j*(j+1) to base j, one halving per peel.

    c_{j(j+1)} == c_j**2, so (j*(j+1), k) and (j, k-1) denote the same
    real; the canonical representative is the one whose base is not of
    the form j*(j+1).
    """
    base = expr.base
    halvings = expr.halvings
    while True:
        j = int(isqrt_floor(base))
        if j * (j + 1) != base:
            return ScoreExpr(base, halvings)
        base = j
        halvings -= 1


def cleared_base(expr: ScoreExpr, level: int) -> int:
    """Seed b with c_b == value of ``expr`` raised to 2**level.

    Uses c_m**(2**(j-1)) == c_{s_j(m)-1}: raising (m, k) to level k
    clears the halvings, and any level >= halvings stays an integer seed.
    """
    steps = level - expr.halvings
    if steps < 0:
        raise ValueError("level must be >= expr.halvings")
    return int(term(expr.base, steps + 1) - 1)


def score_compare(lhs: ScoreExpr, rhs: ScoreExpr) -> Ordering:
    """Exact trichotomy between two score expressions.

    Equality holds exactly when the canonical forms coincide. Otherwise
    both sides are raised to the common level max(k1, k2), reducing the
    question to c_a vs c_b for distinct integer seeds, and the index is
    refined until the sequences separate: s_i(a) < s_i(b) certifies
    c_a < c_b because then the upper bound s_i(a)**(2**-i) is at most
    the lower bound (s_i(b)-1)**(2**-i). Distinct seeds separate at
    i = 1 already; the depth guard exists to surface implementation
    bugs, not to bound honest inputs.
    """
    a = score_normalize(lhs)
    b = score_normalize(rhs)
    if a == b:
        return Ordering.EQ
    level = max(a.halvings, b.halvings)
    seed_a = cleared_base(a, level)
    seed_b = cleared_base(b, level)
    for i in range(1, _REFINEMENT_GUARD + 1):
        ta = term(seed_a, i)
        tb = term(seed_b, i)
        if ta < tb:
            return Ordering.LT
        if tb < ta:
            return Ordering.GT
    raise RefinementLimitError(
        f"score_compare failed to separate {a} and {b} within "
        f"{_REFINEMENT_GUARD} refinements"
    )


def _nested_isqrt(x, k: int):
    for _ in range(k):
        x = _b.isqrt(x)
    return x


def score_enclosure(expr: ScoreExpr, digits: int) -> RationalInterval:
    """Enclose the real denoted by ``expr`` with width at most 10**-digits.

    Normalizes first. Nonpositive halvings clear to a plain constant
    enclosure; positive halvings k root an inner enclosure of c_base,
    with floor/ceil rounding on a grid one digit finer than requested
    (rooting contracts the inner width, so the grid slack dominates).
    """
    if digits < 1:
        raise ValueError("need digits >= 1")
    e = score_normalize(expr)
    if e.halvings <= 0:
        return c_value(cleared_base(e, 0), digits)
    k = e.halvings
    if k > 64:
        raise ValueError("enclosure rendering supports at most 64 halvings")
    if digits > 998:
        raise ValueError("rooted enclosures support at most 998 digits")
    inner = c_value(e.base, digits + 2)
    scale = _b.mpz(10) ** (digits + 1)
    big = scale ** (1 << k)
    lo = _nested_isqrt((inner.lo.numerator * big) // inner.lo.denominator, k)
    hi = _nested_isqrt((inner.hi.numerator * big) // inner.hi.denominator, k) + 1
    return RationalInterval(_b.mpq(lo, scale), _b.mpq(hi, scale))

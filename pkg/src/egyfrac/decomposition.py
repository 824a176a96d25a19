"""Eventually-Sylvester decompositions of 1/n and their growth scores.

A TailDecomposition is the computable model of an infinite unit-fraction
decomposition: finitely many explicit denominators a_1 <= ... <= a_k
followed by the full sequence seeded at a base m (a_{k+i} = s_i(m)).
The tail contributes exactly 1/m, so validity is a finite exact check.

For this family the growth score liminf a_i**(2**-i) has the closed
form c_m**(2**-k), a ScoreExpr, and the strict bound "every decomposition
other than the canonical one scores below c_n" becomes machine-checkable
through exact score comparison. The remaining operations build witness
decompositions and verify the bookkeeping identities behind that bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import index as _index

from . import _backend as _b
from ._backend import Rational
from .constants import Ordering, ScoreExpr, score_compare
from .errors import MassMismatchError, MonotonicityError
from .lemmas import ComparisonInstance, check_equation_hypothesis
from .sylvester import term


def _as_int(x, what: str) -> int:
    try:
        return _index(x)
    except TypeError:
        raise ValueError(f"{what} must be an integer") from None


@dataclass(frozen=True)
class TailDecomposition:
    """1/n == sum(1/a for a in prefix) + (reciprocal sum of the tail at m)."""

    n: int
    prefix: tuple[int, ...]
    tail_base: int

    def __post_init__(self):
        n = _as_int(self.n, "n")
        prefix = tuple(_as_int(a, "prefix term") for a in self.prefix)
        m = _as_int(self.tail_base, "tail_base")
        if n < 1:
            raise ValueError("n must be >= 1")
        if m < 1:
            raise ValueError("tail_base must be >= 1")
        if any(a < 2 for a in prefix):
            raise ValueError("prefix terms must be >= 2")
        if any(b < a for a, b in zip(prefix, prefix[1:])):
            raise MonotonicityError("prefix must be nondecreasing")
        if prefix and m + 1 < prefix[-1]:
            raise MonotonicityError(
                f"tail does not splice: s_1({m}) = {m + 1} < last prefix "
                f"term {prefix[-1]}"
            )
        mass = _b.mpq(1, m)
        for a in prefix:
            mass += _b.mpq(1, a)
        if mass != _b.mpq(1, n):
            raise MassMismatchError(
                f"prefix plus tail mass is {_b.rat_str(mass)}, not 1/{n}"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail_base", m)

    def leading_terms(self, count: int) -> list[int]:
        """The first ``count`` denominators a_1, a_2, ... materialized."""
        if count < 0:
            raise ValueError("count must be >= 0")
        out = list(self.prefix[:count])
        for i in range(1, count - len(out) + 1):
            out.append(int(term(self.tail_base, i)))
        return out

    def to_json_dict(self) -> dict:
        return {
            "n": _b.int_str(self.n),
            "prefix": [_b.int_str(a) for a in self.prefix],
            "tail_base": _b.int_str(self.tail_base),
        }


def make_tail(n: int, prefix, tail_base: int) -> TailDecomposition:
    """Validated constructor; exact mass and splice checks, distinct errors."""
    return TailDecomposition(n=n, prefix=tuple(prefix), tail_base=tail_base)


def from_json_dict(obj) -> TailDecomposition:
    """Parse {"n": "...", "prefix": ["...", ...], "tail_base": "..."}.

    Integers arrive as decimal strings (arbitrary precision safe); plain
    JSON integers are tolerated. Shape errors raise ValueError; the
    constructed value is validated like any other.
    """
    if not isinstance(obj, dict):
        raise ValueError("decomposition JSON must be an object")
    missing = {"n", "prefix", "tail_base"} - obj.keys()
    if missing:
        raise ValueError(f"decomposition JSON lacks keys: {sorted(missing)}")
    prefix = obj["prefix"]
    if not isinstance(prefix, list):
        raise ValueError("prefix must be a JSON array")
    return make_tail(
        _parse_int(obj["n"], "n"),
        [_parse_int(a, "prefix term") for a in prefix],
        _parse_int(obj["tail_base"], "tail_base"),
    )


def _parse_int(x, what: str) -> int:
    if isinstance(x, bool):
        raise ValueError(f"{what} must be an integer or decimal string")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        stripped = x[1:] if x.startswith("-") else x
        if stripped.isdigit():
            return int(x)
    raise ValueError(f"{what} must be an integer or decimal string")


def canonicalize(d: TailDecomposition) -> TailDecomposition:
    """Absorb prefix terms that are literally the tail's own opening terms.

    While the last prefix term p satisfies tail_base == (p-1)*p, the
    tail seeded one level down starts exactly at p, so dropping p and
    reseeding at p-1 denotes the same infinite sequence of denominators.
    """
    prefix = list(d.prefix)
    m = d.tail_base
    while prefix and m == (prefix[-1] - 1) * prefix[-1]:
        m = prefix.pop() - 1
    return TailDecomposition(n=d.n, prefix=tuple(prefix), tail_base=m)


def is_sylvester(d: TailDecomposition) -> bool:
    """True iff d denotes the unperturbed sequence of its own target."""
    c = canonicalize(d)
    return not c.prefix and c.tail_base == c.n


def score(d: TailDecomposition) -> ScoreExpr:
    """Closed form of liminf a_i**(2**-i): c_m**(2**-k) on the canonical form.

    Canonicalizing first makes the score representation-invariant: two
    decompositions denoting the same denominator sequence get the same
    (base, halvings) pair, not merely score-equal expressions.
    """
    c = canonicalize(d)
    return ScoreExpr(c.tail_base, len(c.prefix))


def theorem_check(d: TailDecomposition) -> bool:
    """Exact verdict on the growth bound for this decomposition.

    The canonical decomposition of 1/n must score exactly c_n; every
    other one must score strictly below it. Returns False (a bug, not
    an input condition) if the comparison lands anywhere else.
    """
    expected = Ordering.EQ if is_sylvester(d) else Ordering.LT
    return score_compare(score(d), ScoreExpr(d.n, 0)) is expected


def witness(n: int) -> TailDecomposition:
    """A non-Sylvester decomposition of 1/n scoring strictly below c_n.

    Even n: replace the opening term n+1 by n+2 and absorb the rest of
    the mass, 2/(n*(n+2)), as a tail at n*(n+2)/2. Odd n: 2/(n*(n+2))
    is not a unit fraction, so take one canonical step first (term n+1,
    residue 1/n' with n' = n*(n+1) even) and apply the even construction
    to n'. Both cases validate exactly and keep the splice monotone.
    """
    n = _as_int(n, "n")
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2 == 0:
        return make_tail(n, [n + 2], n * (n + 2) // 2)
    shifted = n * (n + 1)
    return make_tail(n, [n + 1, shifted + 2], shifted * (shifted + 2) // 2)


def shift_reduce(n: int, k: int) -> int:
    """Reseed k-1 steps along the sequence: n' = s_k(n) - 1.

    Contract: ScoreExpr(n', k-1) compares EQ to ScoreExpr(n, 0); the
    shifted constant is the original raised to 2**(k-1).
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    return int(term(n, k) - 1)


@dataclass(frozen=True)
class ComparisonSequenceSpec:
    """Head terms plus a reciprocal tail: u_i = 1/s_{i-|head|}(tail_seed)."""

    n: int
    t: int
    head: tuple
    tail_seed: int
    terms: tuple

    @property
    def u(self) -> Rational:
        """Target mass: the sequence decomposes 1/n."""
        return _b.mpq(1, self.n)


def comparison_sequence(n: int, count: int) -> ComparisonSequenceSpec:
    """The junction-t sequence summing to 1/n used against decompositions.

    For n >= 2: head (1/(n+2), 2/(n+1)**2) with junction t = 2 and tail
    seed l = n*(n+1)**2*(n+2)/2 (always an integer: n*(n+2) is even for
    even n, (n+1)**2 for odd n). For n = 1 that head fails monotonicity,
    so a handcrafted t = 3 head (1/3, 1/3, 3/10) with tail seed 30 is
    used instead. ``count`` terms are materialized, nonincreasing.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        t = 3
        head = (_b.mpq(1, 3), _b.mpq(1, 3), _b.mpq(3, 10))
        seed = 30
    else:
        t = 2
        head = (_b.mpq(1, n + 2), _b.mpq(2, (n + 1) * (n + 1)))
        seed_double, rem = divmod(n * (n + 1) * (n + 1) * (n + 2), 2)
        if rem:
            raise AssertionError("tail seed must be integral")
        seed = seed_double
    if count < t:
        raise ValueError(f"count must be >= the junction index t = {t}")
    terms = list(head)
    for i in range(1, count - len(head) + 1):
        terms.append(_b.mpq(1, term(seed, i)))
    return ComparisonSequenceSpec(
        n=n, t=t, head=head, tail_seed=seed, terms=tuple(terms)
    )


def verify_comparison_equation(n: int, m_max: int) -> bool:
    """Check sum + (1/n) * prod == 1/n at every length t <= m <= m_max."""
    spec = comparison_sequence(n, m_max)
    inst = ComparisonInstance(u=spec.u, t=spec.t, u_seq=spec.terms, v_seq=spec.terms)
    return check_equation_hypothesis(inst)


def residual_integrality_check(d: TailDecomposition, m: int) -> bool:
    """Check 1/n - sum(1/a_i, i <= m) >= 1/(n * prod(a_i, i <= m)) exactly.

    The residual of a strict partial decomposition, put over the common
    denominator n * prod(a_i), has a positive integer numerator, which
    is what this inequality expresses. Raises ValueError when the
    truncated sum reaches 1/n (no strict residual to bound). Equality
    holds exactly on unperturbed prefixes.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    terms = d.leading_terms(m)
    residual = _b.mpq(1, d.n)
    for a in terms:
        residual -= _b.mpq(1, a)
    if residual <= 0:
        raise ValueError(
            f"first {m} terms already exhaust 1/{d.n}; no strict residual"
        )
    prod = _b.mpz(d.n)
    for a in terms:
        prod *= a
    return residual >= _b.mpq(1, prod)


def verify_l_inequality(n: int) -> bool:
    """Check n*(n+1)*(n**2+n+1) > n*(n+1)**2*(n+2)/2 exactly; needs n >= 2.

    n = 1 is rejected: there the two sides are equal (6 = 6) and the
    strict bound is obtained along a different route.
    """
    if n < 2:
        raise ValueError("the strict tail-seed inequality needs n >= 2")
    n = _b.mpz(n)
    return 2 * n * (n + 1) * (n * n + n + 1) > n * (n + 1) ** 2 * (n + 2)


@dataclass(frozen=True)
class GreedyExpansion:
    """Result of a greedy unit-fraction expansion, possibly truncated."""

    target: Rational
    denominators: tuple[int, ...]
    remainder: Rational

    @property
    def complete(self) -> bool:
        return self.remainder == 0


def greedy_expand(p: int, q: int, max_terms: int) -> GreedyExpansion:
    """Greedy expansion of p/q into unit fractions, largest first.

    Each step takes the smallest denominator whose reciprocal fits in
    the remainder, which strictly shrinks the remainder's numerator, so
    the expansion of a proper fraction always terminates; max_terms just
    caps the output (remainder > 0 flags an incomplete expansion).
    """
    if p < 1 or q < 1:
        raise ValueError("need positive p and q")
    if max_terms < 1:
        raise ValueError("need max_terms >= 1")
    value = _b.mpq(p, q)
    if not 0 < value < 1:
        raise ValueError("greedy expansion is defined for 0 < p/q < 1")
    remainder = value
    denominators: list[int] = []
    while remainder > 0 and len(denominators) < max_terms:
        a = -(-remainder.denominator // remainder.numerator)
        denominators.append(int(a))
        remainder -= _b.mpq(1, a)
    return GreedyExpansion(
        target=value, denominators=tuple(denominators), remainder=remainder
    )

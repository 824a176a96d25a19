"""Generalized Sylvester sequences and their exact structural identities.

For an integer seed n >= 1 the sequence is

    s_1 = n + 1,    s_{i+1} = s_i**2 - s_i + 1.

Its reciprocals greedily exhaust 1/n: after any prefix the remainder is
exactly 1/(s_j - 1). Term sizes double every step (s_i has roughly
2**(i-1) times the digits of n+1), so term access is memoized per
backend lane and guarded by a digit budget.
"""

from __future__ import annotations

from . import _backend as _b
from ._backend import Integer
from .errors import DigitBudgetError

DEFAULT_DIGIT_BUDGET = 10**6

_digit_budget = DEFAULT_DIGIT_BUDGET

# (lane name, seed) -> [s_1, s_2, ...] in that lane's integer type
_memo: dict[tuple[str, int], list] = {}


def digit_budget() -> int:
    """Current per-term decimal digit budget."""
    return _digit_budget


def set_digit_budget(budget: int) -> int:
    """Set the per-term digit budget; returns the previous value."""
    if budget < 1:
        raise ValueError("digit budget must be >= 1")
    global _digit_budget
    previous = _digit_budget
    _digit_budget = budget
    return previous


def clear_terms_cache() -> None:
    """Drop all memoized sequence tables (they can hold huge integers)."""
    _memo.clear()


def _table(n: int) -> list:
    key = (_b.backend_name(), n)
    table = _memo.get(key)
    if table is None:
        first = _b.mpz(n) + 1
        est = _b.digits10_bound(first)
        if est > _digit_budget:
            raise DigitBudgetError(n, 1, est, _digit_budget)
        table = [first]
        _memo[key] = table
    return table


def term(n: int, i: int) -> Integer:
    """s_i(n), 1-indexed; raises DigitBudgetError before oversized terms."""
    n = int(n)
    i = int(i)
    if n < 1:
        raise ValueError("sequence seed must satisfy n >= 1")
    if i < 1:
        raise ValueError("term index is 1-based; need i >= 1")
    table = _table(n)
    while len(table) < i:
        last = table[-1]
        # the square roughly doubles the digit count; check before multiplying
        est = 2 * _b.digits10_bound(last)
        if est > _digit_budget:
            raise DigitBudgetError(n, len(table) + 1, est, _digit_budget)
        table.append(last * last - last + 1)
    return table[i - 1]


def terms(n: int, count: int) -> list:
    """The first ``count`` terms [s_1, ..., s_count]."""
    if count < 0:
        raise ValueError("count must be >= 0")
    if count == 0:
        return []
    term(n, count)
    return list(_memo[(_b.backend_name(), int(n))][:count])


def verify_telescoping(n: int, j: int) -> bool:
    """Check sum(1/s_i for i < j) + 1/(s_j - 1) == 1/n exactly."""
    if j < 1:
        raise ValueError("need j >= 1")
    acc = _b.mpq(0)
    for i in range(1, j):
        acc += _b.mpq(1, term(n, i))
    acc += _b.mpq(1, term(n, j) - 1)
    return acc == _b.mpq(1, n)


def verify_product(n: int, j: int) -> bool:
    """Check s_j - 1 == n * prod(s_i for i < j) exactly."""
    if j < 1:
        raise ValueError("need j >= 1")
    prod = _b.mpz(n)
    for i in range(1, j):
        prod *= term(n, i)
    return term(n, j) - 1 == prod


def verify_shift(n: int, i: int, j: int) -> bool:
    """Check the reseeding identity s_{i+j-1}(n) == s_i(s_j(n) - 1) exactly."""
    if i < 1 or j < 1:
        raise ValueError("need i >= 1 and j >= 1")
    reseeded = int(term(n, j) - 1)
    return term(n, i + j - 1) == term(reseeded, i)

"""Sequence generation, identities, memoization, and the digit budget."""

from fractions import Fraction

import pytest

import egyfrac._backend as _b
from egyfrac import (
    DEFAULT_DIGIT_BUDGET,
    DigitBudgetError,
    clear_terms_cache,
    digit_budget,
    set_digit_budget,
    term,
    terms,
    verify_product,
    verify_shift,
    verify_telescoping,
)
from egyfrac.sylvester import _memo


SYLVESTER_PREFIX = [2, 3, 7, 43, 1807, 3263443]


class TestTerm:
    def test_classic_sequence(self, lane):
        assert terms(1, 6) == SYLVESTER_PREFIX

    def test_shifted_seeds(self, lane):
        assert terms(2, 4) == [3, 7, 43, 1807]
        assert terms(3, 3) == [4, 13, 157]
        assert term(6, 1) == 7
        assert term(6, 2) == 43

    def test_recurrence_explicitly(self, lane):
        for n in (1, 2, 5, 12):
            for i in range(1, 8):
                s = term(n, i)
                assert term(n, i + 1) == s * s - s + 1

    def test_terms_count_zero(self, lane):
        assert terms(7, 0) == []

    def test_validation(self, lane):
        with pytest.raises(ValueError):
            term(0, 1)
        with pytest.raises(ValueError):
            term(1, 0)
        with pytest.raises(ValueError):
            terms(1, -1)

    def test_terms_returns_copy(self, lane, fresh_cache):
        first = terms(1, 3)
        first.append(999)
        assert terms(1, 3) == [2, 3, 7]


class TestDigitBudget:
    def test_default(self):
        assert DEFAULT_DIGIT_BUDGET == 10**6
        assert digit_budget() == DEFAULT_DIGIT_BUDGET

    def test_set_returns_previous(self):
        prev = set_digit_budget(500)
        try:
            assert digit_budget() == 500
        finally:
            set_digit_budget(prev)
        assert digit_budget() == prev

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            set_digit_budget(0)

    def test_budget_error_raised_before_computing(self, lane, fresh_cache):
        prev = set_digit_budget(30)
        try:
            term(1, 6)  # 3263443, well under 30 digits
            with pytest.raises(DigitBudgetError) as excinfo:
                term(1, 12)
            err = excinfo.value
            assert err.seed == 1
            assert err.budget == 30
            assert 7 <= err.index <= 12
            assert err.estimated_digits > 30
            # everything cached so far stays within budget
            cached = _memo[(_b.backend_name(), 1)]
            assert all(_b.digits10_bound(t) <= 30 for t in cached)
        finally:
            set_digit_budget(prev)

    def test_budget_error_on_first_term(self, lane, fresh_cache):
        prev = set_digit_budget(3)
        try:
            with pytest.raises(DigitBudgetError) as excinfo:
                term(10**6, 1)
            assert excinfo.value.index == 1
        finally:
            set_digit_budget(prev)

    def test_retry_after_raising_budget(self, lane, fresh_cache):
        prev = set_digit_budget(10)
        try:
            with pytest.raises(DigitBudgetError):
                term(1, 8)
            set_digit_budget(10**4)
            assert term(1, 8) % 10 == 3  # all terms past the first end in 3 or 7
        finally:
            set_digit_budget(prev)


class TestMemo:
    def test_lanes_are_isolated(self, fresh_cache):
        for name in _b.available_backends():
            with _b.use_backend(name):
                term(5, 3)
        keys = {key for key in _memo if key[1] == 5}
        assert keys == {(name, 5) for name in _b.available_backends()}

    def test_clear_terms_cache(self):
        term(2, 3)
        clear_terms_cache()
        assert _memo == {}


class TestIdentities:
    def test_telescoping_examples(self, lane):
        # 1/2 + 1/3 + 1/7 + 1/42 == 1
        assert verify_telescoping(1, 4)
        assert verify_telescoping(1, 1)  # 1/(s_1 - 1) == 1/1

    def test_telescoping_sweep(self, lane):
        for n in range(1, 12):
            for j in range(1, 7):
                assert verify_telescoping(n, j)

    def test_telescoping_explicit_sum(self, lane):
        total = sum(Fraction(1, s) for s in terms(3, 4)) + Fraction(
            1, int(term(3, 5)) - 1
        )
        assert total == Fraction(1, 3)

    def test_product_sweep(self, lane):
        for n in range(1, 12):
            for j in range(1, 7):
                assert verify_product(n, j)

    def test_product_example(self, lane):
        # s_4(1) - 1 == 42 == 1 * 2 * 3 * 7
        assert term(1, 4) - 1 == 42

    def test_shift_sweep(self, lane):
        for n in (1, 2, 3, 7):
            for i in range(1, 5):
                for j in range(1, 4):
                    assert verify_shift(n, i, j)

    def test_shift_example(self, lane):
        # s_3(1) == 7 == s_2(s_2(1) - 1) == s_2(2)
        assert term(1, 3) == term(2, 2) == 7

    def test_identity_validation(self, lane):
        for check in (verify_telescoping, verify_product):
            with pytest.raises(ValueError):
                check(1, 0)
        with pytest.raises(ValueError):
            verify_shift(1, 0, 1)
        with pytest.raises(ValueError):
            verify_shift(1, 1, 0)

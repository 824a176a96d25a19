"""Shared fixtures: lane selection plus the acceptance summary block."""

import pytest

import egyfrac._backend as _b
from egyfrac import clear_terms_cache

# one "PASS criterion N: ..." / "FAIL criterion N: ..." line per acceptance
# criterion, appended by tests/test_acceptance.py and echoed at the end of
# the run so the verdicts are visible without -s
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(params=_b.available_backends())
def lane(request):
    """Select one arithmetic lane for the duration of a test."""
    with _b.use_backend(request.param):
        yield request.param


@pytest.fixture
def fresh_cache():
    """Empty the sequence term cache before and after a test."""
    clear_terms_cache()
    yield
    clear_terms_cache()

"""Shared fixtures and the acceptance-report hook.

test_acceptance.py records one line per criterion through the ``acceptance``
fixture; the terminal summary prints them all after the run so the pass/fail
status of every criterion is visible in one block.
"""

import numpy as np
import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    # one fixed seed for every randomized property test
    return np.random.default_rng(20240817)


@pytest.fixture
def acceptance():
    def record(name: str, passed: bool, detail: str = "", tag: str | None = None):
        if tag is None:
            tag = "PASS" if passed else "FAIL"
        _ACCEPTANCE_LINES.append(f"[{tag}] {name}" + (f": {detail}" if detail else ""))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in _ACCEPTANCE_LINES:
        terminalreporter.write_line(line)

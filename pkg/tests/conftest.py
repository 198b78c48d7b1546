from __future__ import annotations

import contextlib

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_RESULTS: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def criterion():
    """Record the outcome of one acceptance criterion for the summary table."""

    @contextlib.contextmanager
    def record(number: int, title: str):
        try:
            yield
        except BaseException as e:
            _RESULTS[number] = (title, False, f"{type(e).__name__}: {e}".splitlines()[0][:120])
            raise
        _RESULTS[number] = (title, True, "")

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, ok, note = _RESULTS[number]
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}"
        if note:
            line += f"  ({note})"
        terminalreporter.write_line(line)

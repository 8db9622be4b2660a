import contextlib
import time

import pytest

_RESULTS = {}


@pytest.fixture
def criterion():
    """Context manager recording PASS/FAIL and wall time for one
    acceptance criterion; failures still propagate."""

    @contextlib.contextmanager
    def record(number, title):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            _RESULTS[number] = (title, ok, time.perf_counter() - start)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, ok, elapsed = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s)")

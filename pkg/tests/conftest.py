import time
from contextlib import contextmanager

import pytest

_RESULTS: list[tuple[str, bool, float, float | None, str]] = []


class Criterion:
    """Times one acceptance criterion and records a pass/fail line for the summary."""

    def __init__(self, name: str, limit: float | None, note: str = ""):
        self.name, self.limit, self.note = name, limit, note

    @contextmanager
    def run(self):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            if ok and self.limit is not None and elapsed >= self.limit:
                ok = False
            _RESULTS.append((self.name, ok, elapsed, self.limit, self.note))
        assert self.limit is None or elapsed < self.limit, f"{elapsed:.2f}s over {self.limit}s"


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, elapsed, limit, note in _RESULTS:
        budget = f" (limit {limit:g}s)" if limit is not None else ""
        tail = f"  [{note}]" if note else ""
        terminalreporter.write_line(
            f"{'PASS' if ok else 'FAIL'}  {name}  {elapsed:.2f}s{budget}{tail}"
        )

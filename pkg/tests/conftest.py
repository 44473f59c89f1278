import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_RESULTS: list[tuple[str, bool, float]] = []


@contextmanager
def criterion(label: str, time_limit: float | None = None):
    """Record one acceptance criterion's outcome for the terminal summary."""
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        ACCEPTANCE_RESULTS.append((label, False, time.perf_counter() - t0))
        raise
    dt = time.perf_counter() - t0
    ok = time_limit is None or dt <= time_limit
    ACCEPTANCE_RESULTS.append((label, ok, dt))
    if not ok:
        pytest.fail(f"{label}: runtime {dt:.1f}s exceeds limit {time_limit:.0f}s")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, dt in ACCEPTANCE_RESULTS:
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status}  {label}  ({dt:.1f}s)")

import os
import time
from contextlib import contextmanager

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=50, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


ACCEPTANCE_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE_LINES] = []


class _Record:
    value = None
    detail = ""


@pytest.fixture
def criterion(request):
    """Time a criterion body, print and collect one PASS/FAIL line for it."""
    lines = request.config.stash[ACCEPTANCE_LINES]

    @contextmanager
    def run(number, title, time_limit):
        rec = _Record()
        start = time.perf_counter()
        error = None
        try:
            yield rec
        except BaseException as exc:
            error = exc
        elapsed = time.perf_counter() - start
        slow = elapsed >= time_limit
        ok = error is None and not slow
        parts = [f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}"]
        if rec.value is not None:
            parts.append(f"worst {rec.value:.3e}")
        if rec.detail:
            parts.append(rec.detail)
        parts.append(f"{elapsed:.2f} s (limit {time_limit:g} s)")
        if error is not None:
            parts.append(f"error: {type(error).__name__}")
        line = " | ".join(parts)
        lines.append(line)
        print(line)
        if error is not None:
            raise error
        assert not slow, f"criterion {number} took {elapsed:.2f} s, limit {time_limit} s"

    return run


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)

from __future__ import annotations

import time
from collections import defaultdict
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from semihyper import builtin_fixture

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

ROOT = Path(__file__).resolve().parent.parent
FIXTURE_DIR = ROOT / "fixtures"

# remark_5_9 is excluded: its tabulated product is not associative.
CONSTRUCTIBLE = (
    "s4_mod_d8",
    "example_3_2_default",
    "nonminimal_translate",
    "left_zero",
    "right_zero",
    "z2",
)


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURE_DIR


@pytest.fixture(scope="session")
def fixtures():
    return {name: builtin_fixture(name) for name in CONSTRUCTIBLE}


class Stopwatch:
    def __init__(self, limit: float):
        self.limit = limit
        self.start = time.perf_counter()

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.start

    def check(self) -> None:
        assert self.elapsed < self.limit, f"took {self.elapsed:.2f} s, limit {self.limit} s"


@pytest.fixture
def stopwatch(request):
    """Stopwatch set to the ``limit`` of the test's criterion marker."""
    marker = request.node.get_closest_marker("criterion")
    limit = marker.kwargs.get("limit", float("inf")) if marker else float("inf")
    return Stopwatch(limit)


_CRITERIA: dict[int, dict] = defaultdict(lambda: {"title": "", "limit": None, "tests": []})


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        number, title = marker.args
        entry = _CRITERIA[number]
        entry["title"] = title
        entry["limit"] = marker.kwargs.get("limit")
        entry["tests"].append((item.name, report.passed, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        total = sum(d for _, _, d in entry["tests"])
        limit = entry["limit"]
        in_time = limit is None or total < limit
        ok = in_time and all(p for _, p, _ in entry["tests"])
        failed = [name for name, p, _ in entry["tests"] if not p]
        limit_text = f" (limit {limit:g} s)" if limit is not None else ""
        line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {entry['title']} [{total:.2f} s{limit_text}]"
        if failed:
            line += f" failing: {', '.join(failed)}"
        elif not in_time:
            line += " over time limit"
        tr.write_line(line)

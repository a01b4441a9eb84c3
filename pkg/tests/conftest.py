from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis.statistics import collector

# Property suites are deterministic: fixed example generation, at least 200 cases each.
settings.register_profile(
    "gcx", max_examples=200, derandomize=True, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("gcx")

ACCEPTANCE: dict[int, tuple[bool, str]] = {}
# per test node id: (passed, number of valid hypothesis cases or None)
OUTCOMES: dict[str, tuple[bool, int | None]] = {}
_CASES: dict[str, int] = {}


def valid_cases(stats: dict) -> int:
    return sum(tc["status"] == "valid" for tc in stats.get("generate-phase", {}).get("test-cases", []))


@pytest.hookimpl(hookwrapper=True, trylast=True)
def pytest_runtest_call(item):
    outer = collector.value

    def note(stats):
        _CASES[item.nodeid] = valid_cases(stats) + sum(
            tc["status"] == "valid" for tc in stats.get("reuse-phase", {}).get("test-cases", []))
        if outer is not None:
            outer(stats)

    with collector.with_value(note):
        yield


def pytest_runtest_logreport(report):
    if report.when == "call":
        OUTCOMES[report.nodeid] = (report.passed, _CASES.get(report.nodeid))


def pytest_collection_modifyitems(items):
    """Run the acceptance file last so it can read the property-suite outcomes."""
    items.sort(key=lambda it: "test_acceptance.py" in it.nodeid)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

_ACCEPTANCE: dict[int, tuple[str, list[str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = report.user_properties and dict(report.user_properties).get("acceptance")
    if not marker:
        return
    number, title = marker
    entry = _ACCEPTANCE.setdefault(number, (title, []))
    entry[1].append(report.outcome)


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    m = item.get_closest_marker("acceptance")
    if m:
        item.user_properties.append(("acceptance", tuple(m.args)))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, outcomes = _ACCEPTANCE[number]
        ok = all(o == "passed" for o in outcomes)
        tr.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}")

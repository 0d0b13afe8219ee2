"""Shared pytest setup.

Acceptance tests carry ``@pytest.mark.criterion(k, "title")``.  A criterion
passes when every test tagged with it passes; the terminal summary prints
one PASS/FAIL line per criterion.
"""

import pytest

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    entry = _criteria.setdefault(number, {"title": title, "tests": 0, "failed": []})
    name = item.name
    if report.when == "call":
        entry["tests"] += 1
        if not report.passed:
            entry["failed"].append(name)
    elif report.failed or (report.when == "setup" and report.skipped):
        entry["tests"] += 1
        entry["failed"].append(name)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "FAIL" if entry["failed"] else "PASS"
        line = f"criterion {number:>2}: {status}  {entry['title']} ({entry['tests']} checks)"
        if entry["failed"]:
            line += f"; failing: {', '.join(entry['failed'])}"
        tr.write_line(line)

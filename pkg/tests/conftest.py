import time

import pytest

_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_call(item):
    start = time.perf_counter()
    yield
    item.user_properties.append(("elapsed", time.perf_counter() - start))


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marks = dict(report.user_properties).get("criterion")
    if marks is None:
        return
    number, title = marks
    elapsed = dict(report.user_properties).get("elapsed", 0.0)
    _CRITERIA[number] = (title, report.passed, elapsed)


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            item.user_properties.append(("criterion", tuple(m.args)))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok, elapsed = _CRITERIA[number]
        tr.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f} s)")

import pytest

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    number, title = marker
    if report.when == "call" or report.outcome != "passed":
        previous = _criteria.get(number, (title, "PASS"))[1]
        status = "PASS" if report.outcome == "passed" and previous == "PASS" else "FAIL"
        _criteria[number] = (title, status)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status = _criteria[number]
        terminalreporter.write_line(f"[{status}] criterion {number:2d}: {title}")

import pytest

_criteria: dict[int, str] = {}
_items: dict[str, int] = {}
_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _criteria[number] = title
            _items[item.nodeid] = number


def pytest_runtest_logreport(report):
    number = _items.get(report.nodeid)
    if number is None:
        return
    if report.when == "call" or report.failed:
        _outcomes.setdefault(number, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        results = _outcomes.get(number, [])
        if not results:
            status = "NOT RUN"
        else:
            status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"AC{number} {status:<4} {_criteria[number]} ({sum(results)}/{len(results)} checks)")

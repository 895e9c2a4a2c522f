import re

_criteria = {}


def pytest_runtest_logreport(report):
    match = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not match:
        return
    key = (int(match.group(1)), match.group(2))
    if report.failed:
        _criteria[key] = "FAIL"
    elif report.when == "call":
        _criteria.setdefault(key, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, name), status in sorted(_criteria.items()):
        terminalreporter.write_line(f"criterion {number} ({name.replace('_', ' ')}): {status}")

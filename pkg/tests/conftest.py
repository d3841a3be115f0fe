import pytest

# criterion number -> (title, passed, first line of the failure)
_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    _, passed, detail = _acceptance.get(number, (title, True, ""))
    if report.failed or report.skipped:
        passed = False
        if call.excinfo is not None:
            detail = str(call.excinfo.value).splitlines()[0]
    _acceptance[number] = (title, passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, passed, detail = _acceptance[number]
        line = f"criterion {number:2d} {title}: {'PASS' if passed else 'FAIL'}"
        if not passed and detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)

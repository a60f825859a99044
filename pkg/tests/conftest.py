_BY_NODE = {}
_ROWS = {}


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker:
            _BY_NODE[item.nodeid] = (marker.args[0], marker.args[1])


def pytest_runtest_logreport(report):
    info = _BY_NODE.get(report.nodeid)
    if info is None:
        return
    number, title = info
    if report.when == "call":
        _ROWS[number] = ("PASS" if report.passed else "FAIL", title)
    elif not report.passed:
        # setup or teardown blew up; the criterion did not hold
        _ROWS[number] = ("FAIL", title)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ROWS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_ROWS):
        outcome, title = _ROWS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {outcome}  {title}")

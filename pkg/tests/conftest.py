ACCEPTANCE_RESULTS: dict[str, tuple[str, float]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    ACCEPTANCE_RESULTS[name] = ("PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (status, secs) in sorted(ACCEPTANCE_RESULTS.items()):
        terminalreporter.write_line(f"{status}  {name}  ({secs:.2f}s)")

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

_CRITERIA: dict[int, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        if hasattr(report, "wasxfail"):
            state = "FAIL (expected; " + report.wasxfail + ")" if report.skipped else "XPASS"
        else:
            state = report.outcome.upper()
        _CRITERIA.setdefault(marker.args[0], []).append((item.name, state))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        results = _CRITERIA[n]
        ok = all(state == "PASSED" for _, state in results)
        tr.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}")
        for name, state in results:
            if state != "PASSED":
                tr.write_line(f"    {name}: {state}")

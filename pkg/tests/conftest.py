import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")

ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        status = "PASS" if report.passed else "FAIL"
        if report.when == "call" or number not in ACCEPTANCE:
            ACCEPTANCE[number] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    from eqspringer import kernels

    terminalreporter.section(f"acceptance criteria (kernel backend: {kernels.BACKEND})")
    for number in sorted(ACCEPTANCE):
        status, title = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}")

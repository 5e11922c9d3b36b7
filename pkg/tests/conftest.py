import numpy as np
import pytest

from abducer.scenarios import fig1_model, fig2_model


@pytest.fixture
def fig1():
    return fig1_model()


@pytest.fixture
def fig2():
    return fig2_model()


@pytest.fixture
def rng():
    return np.random.default_rng(20181001)


_CRITERIA = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = "PASS" if report.outcome == "passed" else "FAIL"
        _CRITERIA.append(f"[{status}] criterion {marker.args[0]}: {marker.args[1]}")


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)

import pytest
from hypothesis import HealthCheck, settings

from lassokit.corpus import a2_saturated, reference_a1, reference_a2

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def A1():
    return reference_a1()


@pytest.fixture
def A2():
    return reference_a2()


@pytest.fixture
def A2sat():
    return a2_saturated()


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for r in sorted(RESULTS, key=lambda r: r.number):
            terminalreporter.write_line(r.line())

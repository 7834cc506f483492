import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile('muntz', deadline=None, derandomize=True, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile('muntz')


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line('markers', 'criterion(number, label): acceptance criterion checked by the test')


def pytest_runtest_logreport(report):
    if report.when != 'call' and not (report.when == 'setup' and report.outcome != 'passed'):
        return
    for key, value in report.user_properties:
        if key == 'criterion':
            _CRITERIA.setdefault(value, []).append(report.outcome == 'passed')


@pytest.fixture(autouse=True)
def _tag_criterion(request, record_property):
    marker = request.node.get_closest_marker('criterion')
    if marker is not None:
        record_property('criterion', marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section('acceptance criteria')
    for (number, label), outcomes in sorted(_CRITERIA.items()):
        verdict = 'PASS' if all(outcomes) else 'FAIL'
        terminalreporter.write_line(f"criterion {number:>2} {verdict}  {label}")

import pytest

from aabeta import RandomSource, keygen
from aabeta import fixtures


@pytest.fixture
def rng():
    return RandomSource(20240601)


@pytest.fixture(scope="session")
def reference_kp():
    return fixtures.reference_keypair()


@pytest.fixture(scope="session")
def strict_keys():
    rng = RandomSource(512)
    return {n: keygen(rng, n) for n in (128, 256, 512)}


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = marker.args
        status = "PASS" if report.passed else "FAIL"
        _criteria[number] = (status, title, item.user_properties)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        status, title, props = _criteria[number]
        terminalreporter.write_line(f"[{status}] {number:>2}. {title}")
        for key, value in props:
            terminalreporter.write_line(f"         {key}: {value}")

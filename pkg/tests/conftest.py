import os

import pytest

from skewcodes.field import make_field

_criteria: dict[int, tuple[str, str]] = {}


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run exhaustive slow-tier checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow") or os.environ.get("SKEWCODES_SLOW"):
        return
    skip = pytest.mark.skip(reason="slow tier: pass --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    n, text = mark.args
    label = f"{n}{'s' if 'slow' in item.keywords else ''}"
    if rep.skipped:
        status = "SKIP"
    elif rep.failed:
        status = "FAIL"
    elif rep.when == "call":
        status = "PASS"
    else:
        return
    _criteria[label] = (status, text)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: (int(s.rstrip("s")), s)):
        status, text = _criteria[label]
        terminalreporter.write_line(f"criterion {label:<3} {status}  {text}")


@pytest.fixture(scope="session")
def gf3():
    return make_field(3)


@pytest.fixture(scope="session")
def gf5():
    return make_field(5)


@pytest.fixture(scope="session")
def gf9():
    return make_field(3, 2)

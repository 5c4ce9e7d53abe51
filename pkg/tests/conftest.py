import sys

import pytest

from macq.rootdata import build_root_datum


@pytest.fixture(scope="session")
def A1():
    return build_root_datum("A", 1)


@pytest.fixture(scope="session")
def A2():
    return build_root_datum("A", 2)


@pytest.fixture(scope="session")
def B2():
    return build_root_datum("B", 2)


@pytest.fixture(scope="session")
def G2():
    return build_root_datum("G", 2)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])

import hypothesis
import numpy as np
import pytest

from lambdaop import build_lambda, labelled_group

np.seterr(all="warn")

hypothesis.settings.register_profile("fast", max_examples=5)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False)
hypothesis.settings.register_profile("ci", max_examples=50, deadline=None)
hypothesis.settings.load_profile("ci")


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running enumeration")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def lambda_c1():
    return build_lambda(labelled_group("C1"))


@pytest.fixture(scope="session")
def lambda_c2():
    return build_lambda(labelled_group("C2"))


@pytest.fixture(scope="session")
def lambda_c3():
    return build_lambda(labelled_group("C3"))


@pytest.fixture(scope="session")
def lambda_c4():
    return build_lambda(labelled_group("C4"))


@pytest.fixture(scope="session")
def lambda_klein():
    return build_lambda(labelled_group("C2xC2"))


@pytest.fixture(scope="session")
def lambda_c5():
    return build_lambda(labelled_group("C5"))

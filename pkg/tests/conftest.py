import pytest
from hypothesis import HealthCheck, settings

from maltsev import builtin

settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def so3():
    return builtin("so3")


@pytest.fixture(scope="session")
def sl2():
    return builtin("sl2")


@pytest.fixture(scope="session")
def m7():
    return builtin("m7")


@pytest.fixture(scope="session")
def nc3():
    return builtin("nc3")


@pytest.fixture(scope="session")
def abelian3():
    return builtin("abelian(3)")

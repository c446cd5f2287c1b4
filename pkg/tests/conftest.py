import pytest

from homlie.catalog import BUILTIN, load_builtin


@pytest.fixture(scope="session")
def bundled():
    return {name: load_builtin(name) for name in BUILTIN}


@pytest.fixture(scope="session")
def ex2_5(bundled):
    return bundled["ex2_5"]


@pytest.fixture(scope="session")
def abelian2(bundled):
    return bundled["abelian2"]


@pytest.fixture(scope="session")
def heisenberg3(bundled):
    return bundled["heisenberg3"]


@pytest.fixture(scope="session")
def odd_heisenberg(bundled):
    return bundled["odd_heisenberg"]

import pytest

from latrad.instances import instance_ojeda, instance_veronese33


@pytest.fixture(scope="session")
def veronese():
    return instance_veronese33()


@pytest.fixture(scope="session")
def ojeda8():
    return instance_ojeda(8)

import pytest

from hawar2sorani import EngineConfig, default_rules


@pytest.fixture(scope="session")
def rs():
    return default_rules()


@pytest.fixture(scope="session")
def cfg():
    return EngineConfig()

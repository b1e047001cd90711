import pytest

from hom.oracle import line_cohomology
from systems.decide import decide


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: interpolation runs at degree 57")


@pytest.fixture(autouse=True, scope="session")
def fresh_caches():
    decide.cache_clear()
    line_cohomology.cache_clear()
    yield

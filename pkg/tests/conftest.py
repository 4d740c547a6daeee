import pytest

from ncpoisson.catalog import heisenberg, l2, sl2, sl2_hemisemidirect
from ncpoisson.loday import liezation

ALGEBRAS = {"sl2": sl2, "L2": l2, "h3": heisenberg, "sl2+V": sl2_hemisemidirect}
_LIEZ = {}


def liez_of(name):
    if name not in _LIEZ:
        _LIEZ[name] = liezation(ALGEBRAS[name]())
    return _LIEZ[name]


@pytest.fixture(scope="session")
def sl2_liez():
    return liez_of("sl2")


@pytest.fixture(scope="session")
def h3_liez():
    return liez_of("h3")


@pytest.fixture(scope="session")
def l2_liez():
    return liez_of("L2")


@pytest.fixture(scope="session", params=["sl2", "L2", "h3"])
def test_liez(request):
    return liez_of(request.param)


@pytest.fixture(scope="session", params=["sl2", "L2", "h3", "sl2+V"])
def any_liez(request):
    return liez_of(request.param)

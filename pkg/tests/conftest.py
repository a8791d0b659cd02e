import pytest

from objects.standard import boundary, horn, terminal
from presheaf.constructions import representable
from presheaf.isosset import empty


@pytest.fixture
def delta21():
    return representable(2, 1)


@pytest.fixture
def delta01():
    return representable(0, 1)


@pytest.fixture
def boundary21():
    return boundary(2, 1)


@pytest.fixture
def horn211():
    return horn(2, 1, 1)


@pytest.fixture
def point():
    return representable(0, 0)


@pytest.fixture
def nothing():
    return empty()


@pytest.fixture
def terminal_object():
    """Not normal: its free-degree cells are fixed by sigma."""
    return terminal()

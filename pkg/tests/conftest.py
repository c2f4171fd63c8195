import pytest

from stacker import StackingManager
from stacker.groups import bg_structure, bs12_structure, gp_structure


@pytest.fixture(scope="session")
def bs12():
    return bs12_structure()


@pytest.fixture(scope="session")
def bg():
    return bg_structure()


@pytest.fixture(scope="session")
def gp2():
    return gp_structure(2)


@pytest.fixture(scope="session")
def gp3():
    return gp_structure(3)


@pytest.fixture(scope="session")
def gpinf():
    return gp_structure(None)


@pytest.fixture
def make_manager():
    def make(group, p=None, step_budget=None):
        manager = StackingManager()
        manager.setup_group(group, p, step_budget)
        return manager
    return make

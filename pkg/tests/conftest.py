import numpy as np
import pytest

from edgegame.games import DEFAULT_STAGE_COST
from edgegame.roadmaps import simple_network


@pytest.fixture
def stage_cost():
    return DEFAULT_STAGE_COST


@pytest.fixture
def network():
    """Direct edge 0->2 with six stages against the two three-stage legs
    0->1->2, all charged by the default stage cost.
    """
    return simple_network(6, 3, DEFAULT_STAGE_COST)


@pytest.fixture
def rng():
    return np.random.default_rng(20181204)

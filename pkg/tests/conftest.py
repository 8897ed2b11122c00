import numpy as np
import pytest

from linrel import graph_of, make_relation


@pytest.fixture
def E1():
    # domain span{e1}, multivalued part span{e1}, e1 -> (0, 1)
    return make_relation([((1.0, 0.0), (0.0, 1.0)), ((0.0, 0.0), (1.0, 0.0))], 2, 2)


@pytest.fixture
def E3():
    return graph_of(np.eye(2))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)

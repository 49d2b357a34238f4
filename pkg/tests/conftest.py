import pytest

from toricnccr.semigroup import build_rank1
from toricnccr.weights import validate

GOLDEN = [-3, -2, -2, 2, 2, 3]
SKEW = [(1, 0), (2, 0), (0, 1), (-1, 1), (-1, -1), (-1, -1)]
SQUARE = [(1, 0), (-1, 0), (0, 1), (0, -1)]


@pytest.fixture
def golden():
    return validate(1, GOLDEN)


@pytest.fixture
def golden_data(golden):
    return build_rank1(golden)


@pytest.fixture
def skew():
    return validate(2, SKEW)


@pytest.fixture
def square():
    return validate(2, SQUARE)

import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from simplex_economy import validate_economy  # noqa: E402

EXAMPLE_W = [
    ["0.2", "0.4", "0.1", "0.1"],
    ["0.2", "0.3", "0.2", "0.4"],
    ["0.2", "0.2", "0.2", "0.3"],
    ["0.2", "0.1", "0.3", "0.1"],
    ["0.2", "0", "0.2", "0.1"],
]
EXAMPLE_SIGMA = [1, 1, 3, 4, 4]

EXAMPLE_F_STAR = [
    ["1/2", "1/5", "0", "0"],
    ["1/2", "1/5", "1/10", "3/10"],
    ["0", "1/5", "3/5", "1/5"],
    ["0", "1/5", "1/5", "1/4"],
    ["0", "1/5", "1/10", "1/4"],
]
EXAMPLE_P_STAR = ["1/4", "0", "1/4", "1/2"]

# The reference economy with w_14 and w_24 swapped: column 4 still sums to 1, Min[4]
# moves to consumer 2, who misses Min[3], and nobody else qualifies.
NON_MINIMAL_W = [
    ["0.2", "0.4", "0.1", "0.4"],
    ["0.2", "0.3", "0.2", "0.1"],
    ["0.2", "0.2", "0.2", "0.3"],
    ["0.2", "0.1", "0.3", "0.1"],
    ["0.2", "0", "0.2", "0.1"],
]

TWO_BY_TWO_W = [["1/2", "1/4"], ["1/2", "3/4"]]
TWO_BY_TWO_SIGMA = [1, 2]


def fractions(rows):
    return [tuple(Fraction(x) for x in row) for row in rows]


@pytest.fixture
def example():
    return validate_economy(EXAMPLE_W, EXAMPLE_SIGMA)


@pytest.fixture
def non_minimal():
    return validate_economy(NON_MINIMAL_W, EXAMPLE_SIGMA)


@pytest.fixture
def two_by_two():
    return validate_economy(TWO_BY_TWO_W, TWO_BY_TWO_SIGMA)

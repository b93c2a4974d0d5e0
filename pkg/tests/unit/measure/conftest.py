import pytest

from epigame.measure import (
    FiniteSpace,
    Measure,
    Partition,
)


### Space Fixtures ###
@pytest.fixture
def three_states() -> FiniteSpace:
    return FiniteSpace(("s0", "s1", "s2"))


@pytest.fixture
def four_states() -> FiniteSpace:
    return FiniteSpace(("s0", "s1", "s2", "s3"))


### Measure Fixtures ###
@pytest.fixture
def skewed(three_states) -> Measure:
    """Weights 1/6, 1/3, 1/2."""
    return Measure.from_sequence(three_states, ["1/6", "1/3", "1/2"])


### Partition Fixtures ###
@pytest.fixture
def rows(four_states) -> Partition:
    return Partition.from_labels(four_states, [["s0", "s1"], ["s2", "s3"]])


@pytest.fixture
def columns(four_states) -> Partition:
    return Partition.from_labels(four_states, [["s0", "s2"], ["s1", "s3"]])

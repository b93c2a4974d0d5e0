import pytest

from epigame.game import EpistemicGame
from tests.utils import GameBuilder


### Game Fixtures ###
@pytest.fixture
def prisoners_dilemma() -> EpistemicGame:
    return GameBuilder.prisoners_dilemma()


@pytest.fixture
def crossing() -> EpistemicGame:
    """Four states, two crossing partitions, uniform prior."""
    return GameBuilder.crossing()


@pytest.fixture
def angels_demons() -> EpistemicGame:
    return GameBuilder.angels_demons()

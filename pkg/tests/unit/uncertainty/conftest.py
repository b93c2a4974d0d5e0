import pytest

from epigame.cli.examples import rendezvous as rendezvous_example
from epigame.game import EpistemicGame
from epigame.uncertainty import ConjectureProfile
from tests.utils import GameBuilder


### Game Fixtures ###
@pytest.fixture
def prisoners_dilemma() -> EpistemicGame:
    return GameBuilder.prisoners_dilemma()


@pytest.fixture
def rendezvous() -> EpistemicGame:
    return rendezvous_example().game


### Conjecture Fixtures ###
@pytest.fixture
def expect_confess(prisoners_dilemma) -> ConjectureProfile:
    """Both prisoners expect the other to confess whatever they do."""
    return ConjectureProfile.fixed_profile(prisoners_dilemma, {"P1": ["confess"], "P2": ["confess"]})


@pytest.fixture
def expect_deny(prisoners_dilemma) -> ConjectureProfile:
    return ConjectureProfile.fixed_profile(prisoners_dilemma, {"P1": ["deny"], "P2": ["deny"]})


@pytest.fixture
def matching() -> ConjectureProfile:
    """Each of Mary and Joe expects the other to come to the same restaurant."""
    return rendezvous_example().conjectures

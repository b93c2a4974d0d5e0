import pytest

from epigame.certainty import CoherentSystem
from epigame.game import (
    EpistemicGame,
    parse_profile,
)
from tests.utils import GameBuilder


### Game Fixtures ###
@pytest.fixture
def prisoners_dilemma() -> EpistemicGame:
    return GameBuilder.prisoners_dilemma()


@pytest.fixture
def three_action_pair() -> EpistemicGame:
    return GameBuilder.three_action_pair()


### System Fixtures ###
@pytest.fixture
def tit_for_tat(prisoners_dilemma) -> CoherentSystem:
    """Each prisoner expects the other to copy them."""
    return CoherentSystem((
        parse_profile(prisoners_dilemma, ["deny", "deny"]),
        parse_profile(prisoners_dilemma, ["confess", "confess"]),
    ))


@pytest.fixture
def anti(prisoners_dilemma) -> CoherentSystem:
    return CoherentSystem((
        parse_profile(prisoners_dilemma, ["deny", "confess"]),
        parse_profile(prisoners_dilemma, ["confess", "deny"]),
    ))

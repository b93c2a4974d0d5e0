import pytest

from epigame.equilibrium import (
    NormalFormGame,
    to_normal_form,
)
from epigame.game import EpistemicGame
from tests.utils import GameBuilder


### Game Fixtures ###
@pytest.fixture
def prisoners_dilemma() -> EpistemicGame:
    return GameBuilder.prisoners_dilemma()


@pytest.fixture
def chicken() -> EpistemicGame:
    return GameBuilder.chicken()


@pytest.fixture
def crossing() -> EpistemicGame:
    return GameBuilder.crossing()


### Normal Form Fixtures ###
@pytest.fixture
def pd_normal_form(prisoners_dilemma) -> NormalFormGame:
    return to_normal_form(prisoners_dilemma)


@pytest.fixture
def chicken_normal_form(chicken) -> NormalFormGame:
    return to_normal_form(chicken)

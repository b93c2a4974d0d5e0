import json
from typing import (
    Any,
    Callable,
    Dict,
)

import pytest

from epigame.cli.codec import game_to_dict
from epigame.cli.examples import (
    figure1,
    prisoners_dilemma,
    rendezvous,
)
from epigame.game import EpistemicGame


### Game Fixtures ###
@pytest.fixture
def pd_game() -> EpistemicGame:
    return prisoners_dilemma().game


@pytest.fixture
def figure1_game() -> EpistemicGame:
    return figure1().game


@pytest.fixture
def rendezvous_game() -> EpistemicGame:
    return rendezvous().game


### Document Fixtures ###
@pytest.fixture
def pd_document(pd_game) -> Dict[str, Any]:
    """The prisoner's dilemma game file as a mutable JSON object."""
    return game_to_dict(pd_game)


@pytest.fixture
def encode() -> Callable[[Any], bytes]:
    def _encode(document: Any) -> bytes:
        return json.dumps(document).encode("utf-8")
    return _encode

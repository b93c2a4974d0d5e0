from epigame.core import (
    EpigameException,
    ErrorCode,
    ParseError,
    SearchLimits,
    ValidationError,
    set_logger,
)
from epigame.game import (
    EpistemicGame,
    Player,
    Strategy,
    StrategyProfile,
    UtilityKind,
    UtilityTable,
)
from epigame.measure import (
    Event,
    FiniteSpace,
    Measure,
    Partition,
)

__version__ = "0.1.0"

__all__ = [
    # Core
    "EpigameException",
    "ErrorCode",
    "ParseError",
    "SearchLimits",
    "ValidationError",
    "set_logger",

    # Measure
    "Event",
    "FiniteSpace",
    "Measure",
    "Partition",

    # Game
    "EpistemicGame",
    "Player",
    "Strategy",
    "StrategyProfile",
    "UtilityKind",
    "UtilityTable",
]

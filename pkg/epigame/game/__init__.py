from .model import (
    EpistemicGame,
    Player,
    Strategy,
    StrategyProfile,
    UtilityEntry,
    UtilityTable,
)
from .operations import (
    InformationReport,
    InformationWitness,
    PlayerInformation,
    conditional_expected_utility,
    enumerate_profiles,
    enumerate_strategies,
    expected_utility,
    info_report,
    parse_profile,
    parse_strategy,
)
from .types import (
    PROFILE_SEPARATOR,
    STRATEGY_SEPARATOR,
    WILDCARD_STATE,
    ActionProfile,
    Consequence,
    InformationStatus,
    StrategyKey,
    UtilityKind,
)
from .utils import GameValidator

__all__ = [
    "PROFILE_SEPARATOR",
    "STRATEGY_SEPARATOR",
    "WILDCARD_STATE",
    "ActionProfile",
    "Consequence",
    "EpistemicGame",
    "GameValidator",
    "InformationReport",
    "InformationStatus",
    "InformationWitness",
    "Player",
    "PlayerInformation",
    "Strategy",
    "StrategyKey",
    "StrategyProfile",
    "UtilityEntry",
    "UtilityKind",
    "conditional_expected_utility",
    "enumerate_profiles",
    "enumerate_strategies",
    "expected_utility",
    "info_report",
    "parse_profile",
    "parse_strategy",
]

from .config import (
    DEFAULT_LIMITS,
    SearchLimits,
)
from .exceptions import (
    DimensionMismatch,
    EnumerationCapExceeded,
    EpigameException,
    ErrorCode,
    LPInfeasible,
    LPUnbounded,
    MixedSpaces,
    NoCommonPrior,
    NotImperfectInformation,
    NullConditioningEvent,
    ParseError,
    ScenarioSpaceTooLarge,
    StrategySpaceTooLarge,
    UnknownExample,
    UsageError,
    ValidationError,
    WrongPlayerCount,
    WrongUtilityKind,
    format_error_details,
)
from .logging import (
    Logger,
    get_logger,
    set_level,
    set_logger,
    use_logger,
)

__all__ = [
    "DEFAULT_LIMITS",
    "DimensionMismatch",
    "EnumerationCapExceeded",
    "EpigameException",
    "ErrorCode",
    "LPInfeasible",
    "LPUnbounded",
    "Logger",
    "MixedSpaces",
    "NoCommonPrior",
    "NotImperfectInformation",
    "NullConditioningEvent",
    "ParseError",
    "ScenarioSpaceTooLarge",
    "SearchLimits",
    "StrategySpaceTooLarge",
    "UnknownExample",
    "UsageError",
    "ValidationError",
    "WrongPlayerCount",
    "WrongUtilityKind",
    "format_error_details",
    "get_logger",
    "set_level",
    "set_logger",
    "use_logger",
]

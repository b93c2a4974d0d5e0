from enum import (
    Enum,
)
from typing import (
    Any,
    Dict,
    Optional,
    TYPE_CHECKING,
    TypeAlias,
    Union,
)

if TYPE_CHECKING:
    from .logging import Logger

from .logging import get_logger

ErrorDetails: TypeAlias = Dict[str, Any]


class ErrorCode(str, Enum):
    """Stable error codes, rendered verbatim in CLI error reports"""
    INTERNAL_ERROR = "INTERNAL_ERROR"
    PARSE_ERROR = "PARSE_ERROR"
    USAGE_ERROR = "USAGE_ERROR"
    VALIDATION_ERROR = "VALIDATION_ERROR"
    UNKNOWN_EXAMPLE = "UNKNOWN_EXAMPLE"
    NULL_CONDITIONING_EVENT = "NULL_CONDITIONING_EVENT"
    MIXED_SPACES = "MIXED_SPACES"
    STRATEGY_SPACE_TOO_LARGE = "STRATEGY_SPACE_TOO_LARGE"
    ENUMERATION_CAP_EXCEEDED = "ENUMERATION_CAP_EXCEEDED"
    SCENARIO_SPACE_TOO_LARGE = "SCENARIO_SPACE_TOO_LARGE"
    WRONG_UTILITY_KIND = "WRONG_UTILITY_KIND"
    WRONG_PLAYER_COUNT = "WRONG_PLAYER_COUNT"
    NO_COMMON_PRIOR = "NO_COMMON_PRIOR"
    DIMENSION_MISMATCH = "DIMENSION_MISMATCH"
    NOT_IMPERFECT_INFORMATION = "NOT_IMPERFECT_INFORMATION"
    LP_INFEASIBLE = "LP_INFEASIBLE"
    LP_UNBOUNDED = "LP_UNBOUNDED"

    @property
    def is_input_error(self) -> bool:
        """Whether the code blames the caller's input or limits (CLI exit 2)."""
        return self not in {
            ErrorCode.INTERNAL_ERROR,
            ErrorCode.LP_INFEASIBLE,
            ErrorCode.LP_UNBOUNDED,
        }


class EpigameException(Exception):
    """
    Base exception class for epigame.

    Attributes:
        message (str): Human-readable error message
        code (ErrorCode): Error code for categorizing errors
        details (Dict[str, Any]): Additional error details
    """

    if TYPE_CHECKING:
        _logger: Logger

    _logger = get_logger()

    def __init__(
        self,
        message: str,
        code: Union[ErrorCode, str] = ErrorCode.INTERNAL_ERROR,
        details: Optional[ErrorDetails] = None,
        parent: Optional[Exception] = None
    ) -> None:
        """
        Initialize epigame exception.

        Args:
            message: Human-readable error message
            code: Error code for categorizing errors
            details: Additional error details
            parent: Exception that caused this one, if any
        """
        self.message = message
        self.code = ErrorCode(code) if isinstance(code, str) else code
        self.details = details or {}
        self.parent = parent

        self._log_error()
        super().__init__(message)

    def _log_error(self) -> None:
        """Log the error with structured details."""
        log_details = {
            "error_code"   : self.code.value,
            "error_message": self.message,
            "error_details": self.details,
        }

        if self.parent:
            log_details["parent_error"] = str(self.parent)
            log_details["parent_type"] = type(self.parent).__name__

        self._logger.error(f"Exception occurred: {self.code.value}", extra=log_details)

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert exception to dictionary format.

        Returns:
            Dictionary representation of the exception.
        """
        error_dict: Dict[str, Any] = {
            "code"   : self.code.value,
            "message": self.message,
            "details": self.details
        }

        if self.parent:
            error_dict["parent"] = {
                "message": str(self.parent),
                "type"   : type(self.parent).__name__,
            }

        return {
            "error": error_dict
        }


class ParseError(EpigameException):
    """Raised for malformed input documents (JSON syntax, wrong shapes)."""

    def __init__(
        self,
        message: str = "Input could not be parsed",
        details: Optional[ErrorDetails] = None,
        parent: Optional[Exception] = None
    ) -> None:
        super().__init__(message=message, code=ErrorCode.PARSE_ERROR, details=details, parent=parent)


class ValidationError(EpigameException):
    """Raised when a well-formed object violates a model invariant."""

    def __init__(
        self,
        message: str = "Validation error occurred",
        details: Optional[ErrorDetails] = None
    ) -> None:
        super().__init__(message=message, code=ErrorCode.VALIDATION_ERROR, details=details)


class UsageError(EpigameException):
    """Raised for invalid command-line usage."""

    def __init__(self, message: str, details: Optional[ErrorDetails] = None) -> None:
        super().__init__(message=message, code=ErrorCode.USAGE_ERROR, details=details)


class UnknownExample(EpigameException):
    """Raised when a built-in example name is not registered."""

    def __init__(self, name: str, available: Optional[list] = None) -> None:
        super().__init__(
            message=f"Unknown example: {name}",
            code=ErrorCode.UNKNOWN_EXAMPLE,
            details={"name": name, "available": available or []},
        )


class NullConditioningEvent(EpigameException):
    """Raised when conditioning on an event of probability zero."""

    def __init__(self, event: list, details: Optional[ErrorDetails] = None) -> None:
        super().__init__(
            message="Cannot condition on a null event",
            code=ErrorCode.NULL_CONDITIONING_EVENT,
            details={"event": event, **(details or {})},
        )


class MixedSpaces(EpigameException):
    """Raised when objects over different state spaces are combined."""

    def __init__(self, message: str = "Objects are defined over different state spaces") -> None:
        super().__init__(message=message, code=ErrorCode.MIXED_SPACES)


class _CapError(EpigameException):
    """Shared shape of the 'too large to enumerate' errors: exact count and cap."""

    def __init__(self, message: str, code: ErrorCode, count: int, cap: int, **extra: Any) -> None:
        self.count = count
        self.cap = cap
        super().__init__(
            message=message,
            code=code,
            details={"count": str(count), "cap": str(cap), **extra},
        )


class StrategySpaceTooLarge(_CapError):
    """Raised when a strategy or profile space exceeds its cap."""

    def __init__(self, count: int, cap: int, **extra: Any) -> None:
        super().__init__(
            f"Strategy space of size {count} exceeds the cap {cap}",
            ErrorCode.STRATEGY_SPACE_TOO_LARGE, count, cap, **extra,
        )


class EnumerationCapExceeded(_CapError):
    """Raised before enumerating more coherent systems than the cap allows."""

    def __init__(self, count: int, cap: int) -> None:
        super().__init__(
            f"{count} coherent systems exceed the cap {cap}",
            ErrorCode.ENUMERATION_CAP_EXCEEDED, count, cap,
        )


class ScenarioSpaceTooLarge(_CapError):
    """Raised when a response-scenario space exceeds its cap."""

    def __init__(self, count: int, cap: int, **extra: Any) -> None:
        super().__init__(
            f"Scenario space of size {count} exceeds the cap {cap}",
            ErrorCode.SCENARIO_SPACE_TOO_LARGE, count, cap, **extra,
        )


class WrongUtilityKind(EpigameException):
    """Raised when an operation needs a different utility table kind."""

    def __init__(self, expected: str, actual: str, message: Optional[str] = None) -> None:
        super().__init__(
            message=message or f"Operation requires utility kind '{expected}', got '{actual}'",
            code=ErrorCode.WRONG_UTILITY_KIND,
            details={"expected": expected, "actual": actual},
        )


class WrongPlayerCount(EpigameException):
    """Raised when an operation needs a different number of players."""

    def __init__(self, expected: str, actual: int) -> None:
        super().__init__(
            message=f"Operation requires {expected} player(s), got {actual}",
            code=ErrorCode.WRONG_PLAYER_COUNT,
            details={"expected": expected, "actual": actual},
        )


class NoCommonPrior(EpigameException):
    """Raised when a single profile distribution is requested without a common prior."""

    def __init__(self, players: Optional[list] = None) -> None:
        super().__init__(
            message="Players do not share a common prior; no single profile distribution exists",
            code=ErrorCode.NO_COMMON_PRIOR,
            details={"players": players or []},
        )


class DimensionMismatch(EpigameException):
    """Raised when a distribution does not live on a game's profile space."""

    def __init__(self, message: str, details: Optional[ErrorDetails] = None) -> None:
        super().__init__(message=message, code=ErrorCode.DIMENSION_MISMATCH, details=details)


class NotImperfectInformation(EpigameException):
    """Raised when an imperfect-information statement is checked on a perfect-information game."""

    def __init__(self) -> None:
        super().__init__(
            message="No player has imperfect information",
            code=ErrorCode.NOT_IMPERFECT_INFORMATION,
        )


class LPInfeasible(EpigameException):
    """Raised when phase one of the simplex finds no feasible point."""

    def __init__(self, residual: str) -> None:
        super().__init__(
            message="Linear program is infeasible",
            code=ErrorCode.LP_INFEASIBLE,
            details={"phase_one_residual": residual},
        )


class LPUnbounded(EpigameException):
    """Raised when the objective grows without bound."""

    def __init__(self, column: int) -> None:
        super().__init__(
            message="Linear program is unbounded",
            code=ErrorCode.LP_UNBOUNDED,
            details={"entering_column": column},
        )


def format_error_details(error: Exception) -> Dict[str, Any]:
    """Format exception details for logging and error reporting."""
    return {
        "error"       : str(error),
        "error_type"  : type(error).__name__,
        "error_module": error.__class__.__module__
    }

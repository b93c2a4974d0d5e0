from enum import Enum
from typing import (
    Tuple,
    TypeAlias,
)

# separators reserved for strategy labels and distribution keys
STRATEGY_SEPARATOR = "|"
PROFILE_SEPARATOR = ","
WILDCARD_STATE = "*"

Consequence: TypeAlias = Tuple[str, ...]
ActionProfile: TypeAlias = Tuple[str, ...]
StrategyKey: TypeAlias = Tuple[Tuple[str, ...], ...]


class UtilityKind(str, Enum):
    """What a utility entry is keyed on."""
    ACTION = "action"  # realized action profile at a state
    STRATEGY = "strategy"  # whole strategy profile (counterfactual payoffs)

    @classmethod
    def validate(cls, value: "str | UtilityKind") -> "UtilityKind":
        """Validate and convert utility kind value."""
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise ValueError(f"Invalid utility kind: {value}")


class InformationStatus(str, Enum):
    PERFECT = "perfect"
    IMPERFECT = "imperfect"

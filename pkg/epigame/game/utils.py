from itertools import product
from math import prod
from typing import (
    TYPE_CHECKING,
    Tuple,
)

from ..core import (
    DEFAULT_LIMITS,
    StrategySpaceTooLarge,
    ValidationError,
)
from .types import (
    PROFILE_SEPARATOR,
    STRATEGY_SEPARATOR,
    UtilityKind,
)

if TYPE_CHECKING:
    from .model import EpistemicGame

_RESERVED = (STRATEGY_SEPARATOR, PROFILE_SEPARATOR)


class GameValidator:
    """Validator for epistemic games."""

    @staticmethod
    def validate(game: "EpistemicGame") -> None:
        """Validate a game; raises ValidationError naming the offending field."""
        GameValidator._validate_players(game)
        GameValidator._validate_actions(game)
        GameValidator._validate_partitions(game)
        GameValidator._validate_priors(game)
        GameValidator._validate_utility_entries(game)
        GameValidator._validate_utility_totality(game)

    @staticmethod
    def _validate_players(game: "EpistemicGame") -> None:
        """Validate player count and names."""
        if not game.players:
            raise ValidationError("A game needs at least one player", details={"field": "players"})
        seen = set()
        for position, player in enumerate(game.players):
            if not player.name:
                raise ValidationError("Player name cannot be empty", details={"field": f"players[{position}].name"})
            if player.name in seen:
                raise ValidationError(
                    f"Duplicate player name: {player.name}",
                    details={"field": f"players[{position}].name"},
                )
            seen.add(player.name)

    @staticmethod
    def _validate_actions(game: "EpistemicGame") -> None:
        """Validate action sets: at least two distinct, separator-free labels."""
        for position, player in enumerate(game.players):
            where = f"players[{position}].actions"
            if len(player.actions) < 2:
                raise ValidationError(
                    f"Player {player.name} needs at least 2 actions",
                    details={"field": where, "player": player.name},
                )
            if len(set(player.actions)) != len(player.actions):
                raise ValidationError(f"Duplicate action for player {player.name}", details={"field": where})
            for action in player.actions:
                if not isinstance(action, str) or not action or any(sep in action for sep in _RESERVED):
                    raise ValidationError(
                        f"Invalid action label {action!r} for player {player.name}",
                        details={"field": where, "reserved": list(_RESERVED)},
                    )

    @staticmethod
    def _validate_partitions(game: "EpistemicGame") -> None:
        """Validate that every partition lives on the game's space."""
        for position, player in enumerate(game.players):
            if player.partition.space != game.space:
                raise ValidationError(
                    f"Partition of {player.name} is over a different space",
                    details={"field": f"players[{position}].partition"},
                )

    @staticmethod
    def _validate_priors(game: "EpistemicGame") -> None:
        """Validate priors: same space, strictly positive on every state."""
        for position, player in enumerate(game.players):
            where = f"players[{position}].prior"
            if player.prior.space != game.space:
                raise ValidationError(f"Prior of {player.name} is over a different space", details={"field": where})
            null = sorted(player.prior.null_states())
            if null:
                raise ValidationError(
                    f"Prior of {player.name} gives zero weight to a state",
                    details={
                        "field" : where,
                        "player": player.name,
                        "states": [game.space.label(s) for s in null],
                    },
                )

    @staticmethod
    def _validate_utility_entries(game: "EpistemicGame") -> None:
        """Validate that each utility entry addresses a real player, state and key."""
        table = game.utilities
        if table.kind is not game.utility_kind:
            raise ValidationError(
                "Utility table kind does not match the game",
                details={"field": "utility_kind", "table": table.kind.value},
            )
        for position, entry in enumerate(table.entries):
            where = f"utilities[{position}]"
            if not 0 <= entry.player < game.n:
                raise ValidationError("Utility entry names an unknown player", details={"field": f"{where}.player"})
            if entry.state is not None and not 0 <= entry.state < len(game.space):
                raise ValidationError("Utility entry names an unknown state", details={"field": f"{where}.state"})
            if game.utility_kind is UtilityKind.ACTION:
                GameValidator._validate_action_key(game, entry.key, where)
            else:
                GameValidator._validate_strategy_key(game, entry.key, where)

    @staticmethod
    def _validate_action_key(game: "EpistemicGame", key: Tuple, where: str) -> None:
        if not isinstance(key, tuple) or len(key) != game.n:
            raise ValidationError("Action profile has the wrong length", details={"field": f"{where}.profile"})
        for player, action in zip(game.players, key):
            if action not in player.actions:
                raise ValidationError(
                    f"Unknown action '{action}' for player {player.name}",
                    details={"field": f"{where}.profile"},
                )

    @staticmethod
    def _validate_strategy_key(game: "EpistemicGame", key: Tuple, where: str) -> None:
        if not isinstance(key, tuple) or len(key) != game.n:
            raise ValidationError("Strategy profile has the wrong length", details={"field": f"{where}.strategies"})
        for player, assignment in zip(game.players, key):
            if len(assignment) != player.cells or any(a not in player.actions for a in assignment):
                raise ValidationError(
                    f"Invalid strategy for player {player.name}",
                    details={"field": f"{where}.strategies"},
                )

    @staticmethod
    def _validate_utility_totality(game: "EpistemicGame") -> None:
        """Validate that every (player, state, key) in the declared domain has a value."""
        if game.utility_kind is UtilityKind.ACTION:
            keys = list(product(*(player.actions for player in game.players)))
        else:
            count = prod(len(p.actions) ** p.cells for p in game.players)
            if count > DEFAULT_LIMITS.profile_cap:
                raise StrategySpaceTooLarge(count, DEFAULT_LIMITS.profile_cap, field="utilities")
            keys = list(product(*(
                list(product(player.actions, repeat=player.cells)) for player in game.players
            )))
        table = game.utilities
        for player_index, player in enumerate(game.players):
            for state in game.space:
                for key in keys:
                    if not table.has(player_index, state, key):
                        raise ValidationError(
                            f"Missing utility entry for player {player.name}",
                            details={
                                "field" : "utilities",
                                "player": player.name,
                                "state" : game.space.label(state),
                                "key"   : [list(k) if isinstance(k, tuple) else k for k in key],
                            },
                        )

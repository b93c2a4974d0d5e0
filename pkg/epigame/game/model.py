from __future__ import annotations

from dataclasses import (
    dataclass,
    field,
    replace,
)
from fractions import Fraction
from typing import (
    Dict,
    Hashable,
    Iterator,
    Optional,
    Tuple,
)

from ..core import ValidationError
from ..measure import (
    FiniteSpace,
    Measure,
    Partition,
)
from .types import (
    STRATEGY_SEPARATOR,
    Consequence,
    StrategyKey,
    UtilityKind,
)


@dataclass(frozen=True)
class Player:
    """One player: action set, information partition and prior."""
    name: str
    actions: Tuple[str, ...]
    partition: Partition
    prior: Measure

    def __post_init__(self) -> None:
        object.__setattr__(self, "actions", tuple(self.actions))

    @property
    def cells(self) -> int:
        return len(self.partition)

    def action_index(self, action: str) -> int:
        try:
            return self.actions.index(action)
        except ValueError:
            raise ValidationError(
                f"Unknown action '{action}' for player {self.name}",
                details={"player": self.name, "action": action},
            ) from None


@dataclass(frozen=True)
class Strategy:
    """A player's action per partition cell, i.e. a measurable map from states to actions."""
    player: int
    assignment: Tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", tuple(self.assignment))

    @property
    def label(self) -> str:
        return STRATEGY_SEPARATOR.join(self.assignment)

    def action(self, cell: int) -> str:
        return self.assignment[cell]

    def with_action(self, cell: int, action: str) -> Strategy:
        assignment = list(self.assignment)
        assignment[cell] = action
        return Strategy(self.player, tuple(assignment))

    def is_constant(self) -> bool:
        return len(set(self.assignment)) == 1


@dataclass(frozen=True)
class StrategyProfile:
    """One strategy per player, in player order (a Savage act)."""
    strategies: Tuple[Strategy, ...]

    def __post_init__(self) -> None:
        strategies = tuple(self.strategies)
        for position, strategy in enumerate(strategies):
            if strategy.player != position:
                raise ValidationError(
                    "Profile strategies must follow player order",
                    details={"position": position, "player": strategy.player},
                )
        object.__setattr__(self, "strategies", strategies)

    def __getitem__(self, player: int) -> Strategy:
        return self.strategies[player]

    def __iter__(self) -> Iterator[Strategy]:
        return iter(self.strategies)

    def __len__(self) -> int:
        return len(self.strategies)

    def labels(self) -> Tuple[str, ...]:
        return tuple(strategy.label for strategy in self.strategies)

    def key(self) -> StrategyKey:
        """Key of the profile in a strategy-kind utility table."""
        return tuple(strategy.assignment for strategy in self.strategies)

    def replace(self, strategy: Strategy) -> StrategyProfile:
        """Profile with one player's strategy swapped."""
        strategies = list(self.strategies)
        strategies[strategy.player] = strategy
        return StrategyProfile(tuple(strategies))

    def others(self, player: int) -> Tuple[Strategy, ...]:
        return tuple(s for s in self.strategies if s.player != player)

    @classmethod
    def assemble(cls, own: Strategy, others: Tuple[Strategy, ...]) -> StrategyProfile:
        """Insert ``own`` into the others' tuple at its player position."""
        return cls(tuple(sorted((own, *others), key=lambda s: s.player)))


@dataclass(frozen=True)
class UtilityEntry:
    """One row of a utility table; ``state`` None is the wildcard "*"."""
    player: int
    state: Optional[int]
    key: Hashable
    value: Fraction


@dataclass(frozen=True)
class UtilityTable:
    """Exact utility values keyed on (player, state, action profile or strategy profile)."""
    kind: UtilityKind
    entries: Tuple[UtilityEntry, ...]
    _lookup: Dict[tuple, Fraction] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", UtilityKind.validate(self.kind))
        lookup: Dict[tuple, Fraction] = {}
        for position, entry in enumerate(self.entries):
            address = (entry.player, entry.state, entry.key)
            if address in lookup:
                raise ValidationError(
                    "Duplicate utility entry",
                    details={"field": f"utilities[{position}]"},
                )
            lookup[address] = Fraction(entry.value)
        object.__setattr__(self, "entries", tuple(self.entries))
        object.__setattr__(self, "_lookup", lookup)

    def has(self, player: int, state: int, key: Hashable) -> bool:
        return (player, state, key) in self._lookup or (player, None, key) in self._lookup

    def value(self, player: int, state: int, key: Hashable) -> Fraction:
        """Utility at a state; an explicit state entry overrides the wildcard."""
        found = self._lookup.get((player, state, key))
        if found is None:
            found = self._lookup.get((player, None, key))
        if found is None:
            raise ValidationError(
                "Missing utility entry",
                details={"player": player, "state": state, "key": repr(key)},
            )
        return found

    def is_state_independent(self, player: int) -> bool:
        return all(entry.state is None for entry in self.entries if entry.player == player)

    def rescaled(self, player: int, scale: Fraction, shift: Fraction) -> UtilityTable:
        """Positive affine transform of one player's utilities."""
        if scale <= 0:
            raise ValueError("scale must be positive")
        return UtilityTable(
            self.kind,
            tuple(
                replace(entry, value=entry.value * scale + shift) if entry.player == player else entry
                for entry in self.entries
            ),
        )


@dataclass(frozen=True)
class EpistemicGame:
    """Aumann-style game: shared state space, per-player partitions, priors and actions."""
    space: FiniteSpace
    players: Tuple[Player, ...]
    utility_kind: UtilityKind
    utilities: UtilityTable
    comment: str = ""

    def __post_init__(self) -> None:
        from .utils import GameValidator

        object.__setattr__(self, "players", tuple(self.players))
        object.__setattr__(self, "utility_kind", UtilityKind.validate(self.utility_kind))
        GameValidator.validate(self)

    @property
    def n(self) -> int:
        return len(self.players)

    def player_index(self, name: str) -> int:
        for position, player in enumerate(self.players):
            if player.name == name:
                return position
        raise ValidationError(f"Unknown player: {name}", details={"player": name})

    def strategy_count(self, player: int) -> int:
        """|A_i| ** (#cells of the partition)."""
        record = self.players[player]
        return len(record.actions) ** record.cells

    def action_at(self, strategy: Strategy, state: int) -> str:
        return strategy.action(self.players[strategy.player].partition.block_of(state))

    def consequence(self, profile: StrategyProfile, state: int) -> Consequence:
        """Action profile realized at a state."""
        return tuple(self.action_at(strategy, state) for strategy in profile)

    def utility(self, player: int, state: int, profile: StrategyProfile) -> Fraction:
        if self.utility_kind is UtilityKind.ACTION:
            return self.utilities.value(player, state, self.consequence(profile, state))
        return self.utilities.value(player, state, profile.key())

    def common_prior(self) -> Optional[Measure]:
        """The shared prior, or None when priors differ."""
        first = self.players[0].prior
        if all(player.prior == first for player in self.players[1:]):
            return first
        return None

    def with_utilities(self, utilities: UtilityTable) -> EpistemicGame:
        return replace(self, utilities=utilities)

from __future__ import annotations

from dataclasses import (
    dataclass,
    field,
)
from fractions import Fraction
from typing import (
    Dict,
    Iterator,
    Mapping,
    Sequence,
    Tuple,
)

from ..core import (
    DEFAULT_LIMITS,
    SearchLimits,
    ValidationError,
)
from ..game import (
    EpistemicGame,
    Strategy,
    enumerate_strategies,
    parse_strategy,
)
from ..game.operations import StrategySpec

Others = Tuple[Strategy, ...]


@dataclass(frozen=True)
class Conjecture:
    """One player's map from own strategy to the strategies of everyone else (player order)."""
    player: int
    pairs: Tuple[Tuple[Strategy, Others], ...]
    _mapping: Dict[Strategy, Others] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        pairs = tuple((src, tuple(others)) for src, others in self.pairs)
        mapping: Dict[Strategy, Others] = {}
        for src, others in pairs:
            if src.player != self.player:
                raise ValidationError(
                    "Conjecture domain holds another player's strategy",
                    details={"player": self.player, "strategy": src.label},
                )
            if any(s.player == self.player for s in others):
                raise ValidationError(
                    "Conjectured response includes the player's own strategy",
                    details={"player": self.player},
                )
            if src in mapping:
                raise ValidationError("Conjecture assigns a strategy twice", details={"strategy": src.label})
            mapping[src] = others
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "_mapping", mapping)

    def __call__(self, strategy: Strategy) -> Others:
        try:
            return self._mapping[strategy]
        except KeyError:
            raise ValidationError(
                "Conjecture is not defined for the strategy",
                details={"player": self.player, "strategy": strategy.label},
            ) from None

    @property
    def fixed(self) -> bool:
        """Whether the conjecture ignores the player's own strategy."""
        return len({others for _, others in self.pairs}) <= 1


@dataclass(frozen=True)
class ConjectureProfile:
    conjectures: Tuple[Conjecture, ...]

    def __post_init__(self) -> None:
        conjectures = tuple(self.conjectures)
        for position, conjecture in enumerate(conjectures):
            if conjecture.player != position:
                raise ValidationError(
                    "Conjectures must follow player order",
                    details={"position": position, "player": conjecture.player},
                )
        object.__setattr__(self, "conjectures", conjectures)

    def __getitem__(self, player: int) -> Conjecture:
        return self.conjectures[player]

    def __iter__(self) -> Iterator[Conjecture]:
        return iter(self.conjectures)

    @property
    def fixed(self) -> bool:
        return all(c.fixed for c in self.conjectures)

    def validate(self, g: EpistemicGame, limits: SearchLimits = DEFAULT_LIMITS) -> ConjectureProfile:
        """Check totality and that responses are strategies of the right players."""
        if len(self.conjectures) != g.n:
            raise ValidationError(
                "One conjecture per player is required",
                details={"players": g.n, "conjectures": len(self.conjectures)},
            )
        for i, conjecture in enumerate(self.conjectures):
            name = g.players[i].name
            expected = [j for j in range(g.n) if j != i]
            for strategy in enumerate_strategies(g, i, limits):
                others = conjecture(strategy)
                if [s.player for s in others] != expected:
                    raise ValidationError(
                        f"Conjecture of {name} must name one strategy per other player",
                        details={"player": name, "strategy": strategy.label},
                    )
                for other in others:
                    parse_strategy(g, other.player, other)
            if len(conjecture.pairs) != g.strategy_count(i):
                raise ValidationError(
                    f"Conjecture of {name} has entries for unknown strategies",
                    details={"player": name},
                )
        return self

    @classmethod
    def fixed_profile(
        cls,
        g: EpistemicGame,
        responses: Mapping[str, Sequence[StrategySpec]],
        limits: SearchLimits = DEFAULT_LIMITS
    ) -> ConjectureProfile:
        """Constant conjectures: ``{player name: strategies of the others, in player order}``."""
        conjectures = []
        for i, player in enumerate(g.players):
            if player.name not in responses:
                raise ValidationError(f"Missing conjecture for {player.name}", details={"player": player.name})
            others = _others(g, i, responses[player.name])
            conjectures.append(Conjecture(
                i, tuple((s, others) for s in enumerate_strategies(g, i, limits))
            ))
        return cls(tuple(conjectures)).validate(g, limits)

    @classmethod
    def from_maps(
        cls,
        g: EpistemicGame,
        maps: Mapping[str, Sequence[Tuple[StrategySpec, Sequence[StrategySpec]]]],
        limits: SearchLimits = DEFAULT_LIMITS
    ) -> ConjectureProfile:
        """Explicit conjectures: ``{player name: [(own strategy, strategies of the others)]}``."""
        conjectures = []
        for i, player in enumerate(g.players):
            if player.name not in maps:
                raise ValidationError(f"Missing conjecture for {player.name}", details={"player": player.name})
            pairs = tuple(
                (parse_strategy(g, i, own), _others(g, i, others))
                for own, others in maps[player.name]
            )
            conjectures.append(Conjecture(i, pairs))
        return cls(tuple(conjectures)).validate(g, limits)


def _others(g: EpistemicGame, player: int, specs: Sequence[StrategySpec]) -> Others:
    positions = [j for j in range(g.n) if j != player]
    if len(specs) != len(positions):
        raise ValidationError(
            f"Conjecture of {g.players[player].name} must name {len(positions)} strateg(ies)",
            details={"player": g.players[player].name, "given": len(specs)},
        )
    return tuple(parse_strategy(g, j, spec) for j, spec in zip(positions, specs))


@dataclass(frozen=True)
class SubjectiveViolation:
    player: str
    strategy: str
    value: Fraction
    best_value: Fraction
    best_responses: Tuple[str, ...]


@dataclass(frozen=True)
class SubjectiveReport:
    violations: Tuple[SubjectiveViolation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

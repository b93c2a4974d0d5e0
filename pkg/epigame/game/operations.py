from dataclasses import (
    dataclass,
    field,
)
from fractions import Fraction
from itertools import product
from math import prod
from typing import (
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from ..core import (
    DEFAULT_LIMITS,
    SearchLimits,
    StrategySpaceTooLarge,
    ValidationError,
    get_logger,
)
from ..measure import (
    Event,
    Measure,
    posterior,
)
from .model import (
    EpistemicGame,
    Strategy,
    StrategyProfile,
)
from .types import (
    STRATEGY_SEPARATOR,
    InformationStatus,
)

_logger = get_logger()

StrategySpec = Union[str, Sequence[str], Strategy]


def enumerate_strategies(
    g: EpistemicGame,
    player: int,
    limits: SearchLimits = DEFAULT_LIMITS
) -> List[Strategy]:
    """
    All strategies of a player, lexicographic by (cell, action index).

    Raises:
        StrategySpaceTooLarge: when |A_i| ** cells exceeds ``limits.strategy_cap``
    """
    record = g.players[player]
    count = g.strategy_count(player)
    if count > limits.strategy_cap:
        raise StrategySpaceTooLarge(count, limits.strategy_cap, player=record.name)
    return [Strategy(player, assignment) for assignment in product(record.actions, repeat=record.cells)]


def enumerate_profiles(g: EpistemicGame, limits: SearchLimits = DEFAULT_LIMITS) -> List[StrategyProfile]:
    """Every strategy profile, lexicographic in player order."""
    count = prod(g.strategy_count(i) for i in range(g.n))
    if count > limits.profile_cap:
        raise StrategySpaceTooLarge(count, limits.profile_cap, scope="profiles")
    spaces = [enumerate_strategies(g, i, limits) for i in range(g.n)]
    return [StrategyProfile(strategies) for strategies in product(*spaces)]


def expected_utility(
    g: EpistemicGame,
    profile: StrategyProfile,
    player: int,
    m: Optional[Measure] = None
) -> Fraction:
    """E(u_i(s)) under ``m``, defaulting to the player's own prior."""
    measure = m if m is not None else g.players[player].prior
    return sum(
        (weight * g.utility(player, state, profile) for state, weight in enumerate(measure.weights) if weight),
        Fraction(0),
    )


def conditional_expected_utility(
    g: EpistemicGame,
    profile: StrategyProfile,
    player: int,
    cell: Event
) -> Fraction:
    """Expected utility under the player's prior conditioned on one of their cells."""
    record = g.players[player]
    record.partition.index(cell)
    return expected_utility(g, profile, player, posterior(record.prior, cell))


def parse_strategy(g: EpistemicGame, player: int, spec: StrategySpec) -> Strategy:
    """Resolve a strategy label ("a|b"), an action list or a Strategy for ``player``."""
    if isinstance(spec, Strategy):
        assignment: Tuple[str, ...] = spec.assignment
    elif isinstance(spec, str):
        assignment = tuple(spec.split(STRATEGY_SEPARATOR))
    else:
        assignment = tuple(spec)
    record = g.players[player]
    if len(assignment) != record.cells:
        raise ValidationError(
            f"Strategy for {record.name} needs one action per cell",
            details={"player": record.name, "cells": record.cells, "strategy": list(assignment)},
        )
    for action in assignment:
        record.action_index(action)
    return Strategy(player, assignment)


def parse_profile(g: EpistemicGame, specs: Sequence[StrategySpec]) -> StrategyProfile:
    """One strategy spec per player, in player order."""
    if len(specs) != g.n:
        raise ValidationError(
            "A profile needs one strategy per player",
            details={"players": g.n, "strategies": len(specs)},
        )
    return StrategyProfile(tuple(parse_strategy(g, i, spec) for i, spec in enumerate(specs)))


@dataclass(frozen=True)
class InformationWitness:
    """A cell of one player that splits a cell of another: 0 < p_i(I_j | I_i) < 1."""
    player: str
    other: str
    cell: str
    other_cell: str
    probability: Fraction


@dataclass(frozen=True)
class PlayerInformation:
    player: str
    status: InformationStatus
    witnesses: Tuple[InformationWitness, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class InformationReport:
    players: Tuple[PlayerInformation, ...]

    @property
    def imperfect(self) -> Tuple[str, ...]:
        """Names of players with imperfect information."""
        return tuple(p.player for p in self.players if p.status is InformationStatus.IMPERFECT)

    def witnesses_between(self, player: str, other: str) -> Tuple[InformationWitness, ...]:
        return tuple(
            w for p in self.players for w in p.witnesses if w.player == player and w.other == other
        )


def info_report(g: EpistemicGame) -> InformationReport:
    """Flag each player perfect or imperfect, listing every splitting (cell, other cell) pair."""
    players = []
    for i, record in enumerate(g.players):
        witnesses = []
        for cell in record.partition:
            mass = record.prior.of(cell)
            for j, other in enumerate(g.players):
                if j == i:
                    continue
                for other_cell in other.partition:
                    probability = record.prior.of(cell & other_cell) / mass
                    if 0 < probability < 1:
                        witnesses.append(InformationWitness(
                            player=record.name,
                            other=other.name,
                            cell=cell.label(),
                            other_cell=other_cell.label(),
                            probability=probability,
                        ))
        status = InformationStatus.IMPERFECT if witnesses else InformationStatus.PERFECT
        players.append(PlayerInformation(record.name, status, tuple(witnesses)))
    report = InformationReport(tuple(players))
    _logger.debug(f"Information report: imperfect players {list(report.imperfect)}")
    return report

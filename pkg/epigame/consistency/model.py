from __future__ import annotations

from dataclasses import (
    dataclass,
    field,
)
from fractions import Fraction
from typing import (
    Optional,
    Tuple,
)

from ..certainty import ResponseMap
from ..game import (
    STRATEGY_SEPARATOR,
    WILDCARD_STATE,
    EpistemicGame,
    Strategy,
    enumerate_strategies,
)


@dataclass(frozen=True)
class PartialStrategy:
    """
    A strategy pinned down on some cells of its player only.

    ``None`` marks a cell the conjecture says nothing about, i.e. one that
    never meets the cell the conjecture is held on.
    """
    player: int
    assignment: Tuple[Optional[str], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", tuple(self.assignment))

    @property
    def label(self) -> str:
        return STRATEGY_SEPARATOR.join(WILDCARD_STATE if a is None else a for a in self.assignment)

    def action(self, cell: int) -> Optional[str]:
        return self.assignment[cell]

    def agrees_with(self, other: PartialStrategy) -> bool:
        return all(a is None or b is None or a == b for a, b in zip(self.assignment, other.assignment))

    def matches(self, strategy: Strategy) -> bool:
        """True iff ``strategy`` plays the pinned action on every pinned cell."""
        return all(a is None or a == b for a, b in zip(self.assignment, strategy.assignment))

    def merge(self, other: PartialStrategy) -> Optional[PartialStrategy]:
        """Union of both assignments, or None where they disagree."""
        if not self.agrees_with(other):
            return None
        pairs = zip(self.assignment, other.assignment)
        return PartialStrategy(self.player, tuple(a if a is not None else b for a, b in pairs))

    def to_strategy(self) -> Optional[Strategy]:
        if any(a is None for a in self.assignment):
            return None
        return Strategy(self.player, tuple(a for a in self.assignment if a is not None))


Table = Tuple[Tuple[PartialStrategy, ...], ...]


@dataclass(frozen=True)
class ResponseScenario:
    """
    Per-cell, per-action conjectures for an ordered pair (source, target).

    ``forward[c][a]`` is what source expects of target when choosing its
    a-th action on its c-th cell, pinned on the cells of target that meet
    cell c; ``backward`` is the same table from target's side.
    """
    source: int
    target: int
    forward: Table
    backward: Table

    @staticmethod
    def _response(table: Table, g: EpistemicGame, strategy: Strategy) -> Optional[Strategy]:
        actions = g.players[strategy.player].actions
        merged: Optional[PartialStrategy] = table[0][actions.index(strategy.action(0))]
        for c in range(1, len(table)):
            if merged is None:
                return None
            merged = merged.merge(table[c][actions.index(strategy.action(c))])
        return None if merged is None else merged.to_strategy()

    def response_maps(self, g: EpistemicGame) -> Optional[Tuple[ResponseMap, ResponseMap]]:
        """Strategy-level maps source→target and target→source, or None if the cells of a side disagree."""
        maps = []
        for player, other, table in ((self.source, self.target, self.forward), (self.target, self.source, self.backward)):
            pairs = []
            for strategy in enumerate_strategies(g, player):
                response = self._response(table, g, strategy)
                if response is None:
                    return None
                pairs.append((strategy, response))
            maps.append(ResponseMap(player, other, tuple(pairs)))
        return maps[0], maps[1]


@dataclass(frozen=True)
class ScenarioSearch:
    """Outcome of one exhaustive (or budget-stopped) scenario search."""
    source: str
    target: str
    require_inv: bool
    search_size: int
    nodes: int
    witnesses: Tuple[ResponseScenario, ...]
    exhausted: bool


@dataclass(frozen=True)
class TheoremReport:
    theorem: int
    holds: bool
    pairs: Tuple[ScenarioSearch, ...]
    detail: str


@dataclass(frozen=True)
class CellChoice:
    """Actions that stay optimal on a cell whatever is chosen on the other cells."""
    cell: str
    robust_actions: Tuple[str, ...]


@dataclass(frozen=True)
class DecompositionReport:
    global_optima: Tuple[Strategy, ...]
    optimum: Fraction
    robust_choices: Tuple[CellChoice, ...]
    cellwise_consistent: bool
    detail: str = field(default="")

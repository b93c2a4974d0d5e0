from itertools import product
from math import prod
from typing import (
    Dict,
    FrozenSet,
    List,
    Optional,
    Tuple,
)

from ..core import (
    DEFAULT_LIMITS,
    ScenarioSpaceTooLarge,
    SearchLimits,
    ValidationError,
    get_logger,
)
from ..game import (
    EpistemicGame,
    Strategy,
    enumerate_strategies,
)
from .config import ConsistencyConstraints
from .model import (
    PartialStrategy,
    ResponseScenario,
    ScenarioSearch,
)

# variable: (side, cell, action index or None under INV); side 0 = source's table
Variable = Tuple[int, int, Optional[int]]
# per chooser cell, the cells of the other player it meets
Relevance = Tuple[Tuple[int, ...], ...]


def relevant_cells(g: EpistemicGame, player: int, other: int) -> Relevance:
    """For each cell of ``player``, the cells of ``other`` it meets."""
    blocks = g.players[other].partition
    return tuple(
        tuple(d for d, block in enumerate(blocks) if not (cell & block).is_empty())
        for cell in g.players[player].partition
    )


def scenario_space_size(g: EpistemicGame, source: int, target: int, require_inv: bool) -> int:
    """Raw number of (forward, backward) tables, before any constraint."""
    size = 1
    for chooser, other in ((source, target), (target, source)):
        per_cell = 1 if require_inv else len(g.players[chooser].actions)
        options = len(g.players[other].actions)
        size *= prod(options ** (len(cells) * per_cell) for cells in relevant_cells(g, chooser, other))
    return size


def _conjectures(g: EpistemicGame, player: int, relevance: Relevance) -> Tuple[Tuple[PartialStrategy, ...], ...]:
    """Every partial strategy of ``player`` a conjecture held on each chooser cell can name."""
    record = g.players[player]
    tables = []
    for cells in relevance:
        options = []
        for actions in product(record.actions, repeat=len(cells)):
            assignment: List[Optional[str]] = [None] * record.cells
            for cell, action in zip(cells, actions):
                assignment[cell] = action
            options.append(PartialStrategy(player, tuple(assignment)))
        tables.append(tuple(options))
    return tuple(tables)


def _shared_elsewhere(relevance: Relevance) -> Tuple[FrozenSet[int], ...]:
    """Per chooser cell, the other player's cells it shares with some other chooser cell."""
    return tuple(
        frozenset(cells) & frozenset(d for other, rest in enumerate(relevance) if other != c for d in rest)
        for c, cells in enumerate(relevance)
    )


class _BaySearch:
    """
    Backtracking over the conjecture tables of one ordered pair.

    Source's table is assigned first, then target's. Partial assignments are
    cut as soon as they break a constraint or one of its consequences:
    conjectures held on two cells agree wherever both speak, two
    conjectures of one cell agree on the cells another cell also speaks
    about, and the strategy-level response of source is one-to-one.
    """

    def __init__(self, g: EpistemicGame, source: int, target: int, require_inv: bool, node_budget: int) -> None:
        self.g = g
        self.require_inv = require_inv
        self.node_budget = node_budget
        self.source = source
        self.target = target
        self.src_strategies = enumerate_strategies(g, source)
        self.actions = (g.players[source].actions, g.players[target].actions)
        relevance = (relevant_cells(g, source, target), relevant_cells(g, target, source))
        self.conjectures = (_conjectures(g, target, relevance[0]), _conjectures(g, source, relevance[1]))
        self.shared = (_shared_elsewhere(relevance[0]), _shared_elsewhere(relevance[1]))
        self.variables: List[Variable] = self._variables(0) + self._variables(1)
        self.values: Dict[Variable, int] = {}
        self.nodes = 0
        self.stopped = False
        self.witnesses: List[ResponseScenario] = []

    def _variables(self, side: int) -> List[Variable]:
        cells, actions = len(self.conjectures[side]), len(self.actions[side])
        if self.require_inv:
            return [(side, c, None) for c in range(cells)]
        return [(side, c, a) for c in range(cells) for a in range(actions)]

    def _key(self, side: int, cell: int, action: int) -> Variable:
        return (side, cell, None if self.require_inv else action)

    def _conjecture(self, variable: Variable) -> Optional[PartialStrategy]:
        value = self.values.get(variable)
        return None if value is None else self.conjectures[variable[0]][variable[1]][value]

    def _response(self, side: int, strategy: Strategy) -> Optional[PartialStrategy]:
        """Conjectures along ``strategy`` merged over the chooser's cells; None while one is unassigned."""
        merged: Optional[PartialStrategy] = None
        for cell, action in enumerate(strategy.assignment):
            conjecture = self._conjecture(self._key(side, cell, self.actions[side].index(action)))
            if conjecture is None:
                return None
            merged = conjecture if merged is None else merged.merge(conjecture)
            if merged is None:
                return None
        return merged

    def _consistent(self, variable: Variable, value: int) -> bool:
        side, cell, action = variable
        conjecture = self.conjectures[side][cell][value]
        if not self._cellwise_agreement(variable, conjecture):
            return False
        if side == 0:
            return self._injective()
        return self._target_side_correct(cell, action, conjecture)

    def _cellwise_agreement(self, variable: Variable, conjecture: PartialStrategy) -> bool:
        side, cell, _ = variable
        for other in self.values:
            if other[0] != side or other == variable:
                continue
            held = self.conjectures[side][other[1]][self.values[other]]
            if other[1] != cell:
                if not conjecture.agrees_with(held):
                    return False
            elif any(conjecture.action(d) != held.action(d) for d in self.shared[side][cell]):
                return False
        return True

    def _injective(self) -> bool:
        seen = set()
        for s in self.src_strategies:
            response = self._response(0, s)
            if response is None:
                continue
            if response in seen:
                return False
            seen.add(response)
        return True

    def _target_side_correct(self, cell: int, action: Optional[int], conjecture: PartialStrategy) -> bool:
        """Target's conjecture at (cell, action) must match every source strategy whose response leads there."""
        for s in self.src_strategies:
            response = self._response(0, s)
            if response is None:
                continue
            if action is None or response.action(cell) == self.actions[1][action]:
                if not conjecture.matches(s):
                    return False
        return True

    def run(self) -> None:
        self._backtrack(0)

    def _backtrack(self, depth: int) -> None:
        if depth == len(self.variables):
            self.witnesses.append(self._scenario())
            return
        variable = self.variables[depth]
        for value in range(len(self.conjectures[variable[0]][variable[1]])):
            if self.nodes >= self.node_budget:
                self.stopped = True
                return
            self.nodes += 1
            self.values[variable] = value
            if self._consistent(variable, value):
                self._backtrack(depth + 1)
            del self.values[variable]
            if self.stopped:
                return

    def _table(self, side: int) -> Tuple[Tuple[PartialStrategy, ...], ...]:
        return tuple(
            tuple(
                self.conjectures[side][c][self.values[self._key(side, c, a)]]
                for a in range(len(self.actions[side]))
            )
            for c in range(len(self.conjectures[side]))
        )

    def _scenario(self) -> ResponseScenario:
        return ResponseScenario(self.source, self.target, self._table(0), self._table(1))


def search_bay_scenarios(
    g: EpistemicGame,
    pair: Tuple[int, int],
    constraints: ConsistencyConstraints = ConsistencyConstraints(),
    limits: SearchLimits = DEFAULT_LIMITS
) -> ScenarioSearch:
    """
    All BAY-consistent response scenarios for the ordered pair.

    A conjecture held on a cell pins the other player's actions only on the
    other player's cells that meet it; everywhere else it is silent, since
    priors are strictly positive and nothing else is observable from there.
    A scenario is kept when, for every strategy of source, the conjectures
    along it agree wherever two of them speak (so they assemble into one
    strategy of target, its response), the same holds on target's side,
    and target's conjecture at each of its cells matches source's actual
    strategy wherever it speaks. With ``require_inv`` every conjecture
    ignores the chooser's own action.

    Raises:
        ScenarioSpaceTooLarge: when the raw scenario space exceeds ``limits.scenario_cap``
    """
    source, target = pair
    if source == target:
        raise ValidationError("A scenario pair needs two different players", details={"pair": list(pair)})
    names = [g.players[source].name, g.players[target].name]
    size = scenario_space_size(g, source, target, constraints.require_inv)
    if size > limits.scenario_cap:
        raise ScenarioSpaceTooLarge(size, limits.scenario_cap, pair=names)

    logger = get_logger()
    search = _BaySearch(g, source, target, constraints.require_inv, limits.node_budget)
    search.run()
    if search.stopped:
        logger.warning(f"Scenario search {names} stopped after {search.nodes} nodes without exhausting the space")
    logger.info(
        f"Scenario search {names} (inv={constraints.require_inv}): size {size}, "
        f"{search.nodes} nodes, {len(search.witnesses)} witness(es)"
    )
    return ScenarioSearch(
        source=names[0],
        target=names[1],
        require_inv=constraints.require_inv,
        search_size=size,
        nodes=search.nodes,
        witnesses=tuple(search.witnesses),
        exhausted=not search.stopped,
    )

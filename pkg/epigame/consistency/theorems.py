from itertools import (
    permutations,
    product,
)
from typing import (
    List,
    Sequence,
    Tuple,
)

from ..core import (
    DEFAULT_LIMITS,
    NotImperfectInformation,
    SearchLimits,
    WrongPlayerCount,
    get_logger,
)
from ..game import (
    EpistemicGame,
    StrategyProfile,
    conditional_expected_utility,
    enumerate_strategies,
    expected_utility,
    info_report,
)
from .config import ConsistencyConstraints
from .model import (
    CellChoice,
    DecompositionReport,
    ScenarioSearch,
    TheoremReport,
)
from .search import search_bay_scenarios

_logger = get_logger()


def _verdict(theorem: int, searches: Sequence[ScenarioSearch]) -> TheoremReport:
    for search in searches:
        if not search.exhausted:
            return TheoremReport(
                theorem, False, tuple(searches),
                f"search for ({search.source}, {search.target}) stopped on the node budget",
            )
        if search.witnesses:
            return TheoremReport(
                theorem, False, tuple(searches),
                f"{len(search.witnesses)} consistent scenario(s) for ({search.source}, {search.target})",
            )
    return TheoremReport(theorem, True, tuple(searches), "no consistent scenario for any checked pair")


def check_theorem1(g: EpistemicGame, limits: SearchLimits = DEFAULT_LIMITS) -> TheoremReport:
    """BAY and INV together admit no scenario, checked over every ordered pair."""
    if g.n < 2:
        raise WrongPlayerCount("at least 2", g.n)
    constraints = ConsistencyConstraints(require_inv=True)
    searches = [search_bay_scenarios(g, pair, constraints, limits) for pair in permutations(range(g.n), 2)]
    report = _verdict(1, searches)
    _logger.info(f"Theorem 1 on {len(searches)} pair(s): holds={report.holds}")
    return report


def imperfect_pairs(g: EpistemicGame) -> List[Tuple[int, int]]:
    """Ordered pairs (i, j) where a cell of i splits cells of j."""
    report = info_report(g)
    return [
        (i, j)
        for i, j in permutations(range(g.n), 2)
        if report.witnesses_between(g.players[i].name, g.players[j].name)
    ]


def check_theorem2(g: EpistemicGame, limits: SearchLimits = DEFAULT_LIMITS) -> TheoremReport:
    """BAY admits no scenario for any pair with imperfect information."""
    if g.n < 2:
        raise WrongPlayerCount("at least 2", g.n)
    pairs = imperfect_pairs(g)
    if not pairs:
        raise NotImperfectInformation()
    searches = [search_bay_scenarios(g, pair, ConsistencyConstraints(), limits) for pair in pairs]
    report = _verdict(2, searches)
    _logger.info(f"Theorem 2 on {len(searches)} pair(s): holds={report.holds}")
    return report


def decomposition_check(g: EpistemicGame, limits: SearchLimits = DEFAULT_LIMITS) -> DecompositionReport:
    """
    Compare the global optimum of a game against nature with cell-by-cell optimization.

    An action is robustly optimal on a cell when its conditional expected
    utility is at least that of every alternative, whatever the strategy
    does on the other cells. The problem separates across cells when some
    strategy built only from robustly optimal actions is a global optimum.
    """
    if g.n != 1:
        raise WrongPlayerCount("exactly 1", g.n)
    player = g.players[0]
    strategies = enumerate_strategies(g, 0, limits)
    values = {s: expected_utility(g, StrategyProfile((s,)), 0) for s in strategies}
    optimum = max(values.values())
    optima = tuple(s for s in strategies if values[s] == optimum)

    choices = []
    for index, cell in enumerate(player.partition):
        robust = []
        for action in player.actions:
            if all(
                conditional_expected_utility(g, StrategyProfile((s.with_action(index, action),)), 0, cell)
                >= conditional_expected_utility(g, StrategyProfile((s.with_action(index, other),)), 0, cell)
                for s in strategies
                for other in player.actions
            ):
                robust.append(action)
        choices.append(CellChoice(cell.label(), tuple(robust)))

    separable = any(
        tuple(assignment) in {s.assignment for s in optima}
        for assignment in product(*(c.robust_actions for c in choices))
    )
    if separable:
        detail = "a cell-by-cell optimal choice attains the global optimum"
    elif not all(c.robust_actions for c in choices):
        detail = "some cell has no action that is optimal whatever happens elsewhere"
    else:
        detail = "cell-by-cell optimal choices miss the global optimum"
    return DecompositionReport(
        global_optima=optima,
        optimum=optimum,
        robust_choices=tuple(choices),
        cellwise_consistent=separable,
        detail=detail,
    )

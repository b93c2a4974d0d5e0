from fractions import Fraction
from typing import (
    Dict,
    List,
    Optional,
)

from ..core import (
    DEFAULT_LIMITS,
    NoCommonPrior,
    SearchLimits,
    WrongUtilityKind,
    get_logger,
)
from ..game import (
    Consequence,
    EpistemicGame,
    StrategyProfile,
    UtilityKind,
    conditional_expected_utility,
    enumerate_profiles,
)
from ..measure import Measure
from .model import (
    ActionDistribution,
    BayesReport,
    BayesViolation,
)

_logger = get_logger()


def require_action_kind(g: EpistemicGame) -> None:
    if g.utility_kind is not UtilityKind.ACTION:
        raise WrongUtilityKind(UtilityKind.ACTION.value, g.utility_kind.value)


def is_bayes_rational(g: EpistemicGame, profile: StrategyProfile) -> BayesReport:
    """
    Check every player's action at every cell against every alternative.

    Other players' strategies are held fixed while one action is swapped, and
    each comparison uses the player's posterior on the cell. Every strict
    improvement is reported with its exact gain.
    """
    require_action_kind(g)
    violations = []
    for i, player in enumerate(g.players):
        strategy = profile[i]
        for cell_index, cell in enumerate(player.partition):
            current = strategy.action(cell_index)
            baseline = conditional_expected_utility(g, profile, i, cell)
            for action in player.actions:
                if action == current:
                    continue
                deviation = profile.replace(strategy.with_action(cell_index, action))
                gain = conditional_expected_utility(g, deviation, i, cell) - baseline
                if gain > 0:
                    violations.append(BayesViolation(
                        player=player.name,
                        cell=cell.label(),
                        action=current,
                        better_action=action,
                        gain=gain,
                    ))
    return BayesReport(tuple(violations))


def enumerate_bayes_rational(g: EpistemicGame, limits: SearchLimits = DEFAULT_LIMITS) -> List[StrategyProfile]:
    """All profiles passing ``is_bayes_rational``, in lexicographic profile order; ties are all kept."""
    require_action_kind(g)
    profiles = enumerate_profiles(g, limits)
    result = [profile for profile in profiles if is_bayes_rational(g, profile).ok]
    _logger.info(f"Bayes-rational search: {len(result)} of {len(profiles)} profiles pass")
    return result


def induced_distribution(
    g: EpistemicGame,
    profile: StrategyProfile,
    m: Optional[Measure] = None
) -> ActionDistribution:
    """Pushforward of ``m`` (default: the common prior) through the profile's consequence map."""
    require_action_kind(g)
    if m is None:
        m = g.common_prior()
        if m is None:
            raise NoCommonPrior([p.name for p in g.players])
    weights: Dict[Consequence, Fraction] = {}
    for state, weight in enumerate(m.weights):
        if weight:
            consequence = g.consequence(profile, state)
            weights[consequence] = weights.get(consequence, Fraction(0)) + weight
    return ActionDistribution(weights)

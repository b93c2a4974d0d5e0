from fractions import Fraction
from itertools import product
from typing import (
    List,
    Tuple,
)

from ..core import (
    DEFAULT_LIMITS,
    SearchLimits,
    StrategySpaceTooLarge,
    get_logger,
)
from ..game import (
    EpistemicGame,
    Strategy,
    StrategyProfile,
    enumerate_strategies,
    expected_utility,
)
from .model import (
    Conjecture,
    ConjectureProfile,
    SubjectiveReport,
    SubjectiveViolation,
)
from .types import SolutionClass

_logger = get_logger()


def _conjectured_value(g: EpistemicGame, player: int, conjecture: Conjecture, strategy: Strategy) -> Fraction:
    return expected_utility(g, StrategyProfile.assemble(strategy, conjecture(strategy)), player)


def _values(
    g: EpistemicGame,
    player: int,
    conjecture: Conjecture,
    limits: SearchLimits
) -> List[Tuple[Strategy, Fraction]]:
    return [
        (strategy, _conjectured_value(g, player, conjecture, strategy))
        for strategy in enumerate_strategies(g, player, limits)
    ]


def best_responses_to_conjecture(
    g: EpistemicGame,
    player: int,
    conjecture: Conjecture,
    limits: SearchLimits = DEFAULT_LIMITS
) -> List[Strategy]:
    """Every strategy maximizing E_i(u_i(s_i, Ψ_i(s_i))), in enumeration order."""
    values = _values(g, player, conjecture, limits)
    best = max(value for _, value in values)
    return [strategy for strategy, value in values if value == best]


def subjectively_rational(
    g: EpistemicGame,
    conj: ConjectureProfile,
    profile: StrategyProfile,
    limits: SearchLimits = DEFAULT_LIMITS
) -> SubjectiveReport:
    violations = []
    for i, player in enumerate(g.players):
        values = _values(g, i, conj[i], limits)
        best = max(value for _, value in values)
        own = dict(values)[profile[i]]
        if own < best:
            violations.append(SubjectiveViolation(
                player=player.name,
                strategy=profile[i].label,
                value=own,
                best_value=best,
                best_responses=tuple(s.label for s, v in values if v == best),
            ))
    return SubjectiveReport(tuple(violations))


def conjectures_correct(g: EpistemicGame, conj: ConjectureProfile, profile: StrategyProfile) -> bool:
    """Whether every player's conjecture at their actual strategy names the others' actual strategies."""
    return all(conj[i](profile[i]) == profile.others(i) for i in range(g.n))


def classify_solution(
    g: EpistemicGame,
    conj: ConjectureProfile,
    profile: StrategyProfile,
    limits: SearchLimits = DEFAULT_LIMITS
) -> SolutionClass:
    if not subjectively_rational(g, conj, profile, limits).ok:
        return SolutionClass.IRRATIONAL
    if conjectures_correct(g, conj, profile):
        return SolutionClass.SUBJECTIVE_CORRELATED_EQUILIBRIUM
    return SolutionClass.RATIONAL_INCORRECT_CONJECTURES


def rational_profiles(
    g: EpistemicGame,
    conj: ConjectureProfile,
    limits: SearchLimits = DEFAULT_LIMITS
) -> List[Tuple[StrategyProfile, SolutionClass]]:
    """Every combination of best responses, each with its classification."""
    responses = [best_responses_to_conjecture(g, i, conj[i], limits) for i in range(g.n)]
    count = 1
    for strategies in responses:
        count *= len(strategies)
    if count > limits.profile_cap:
        raise StrategySpaceTooLarge(count, limits.profile_cap, scope="rational profiles")
    result = []
    for strategies in product(*responses):
        profile = StrategyProfile(strategies)
        correct = conjectures_correct(g, conj, profile)
        result.append((
            profile,
            SolutionClass.SUBJECTIVE_CORRELATED_EQUILIBRIUM if correct else SolutionClass.RATIONAL_INCORRECT_CONJECTURES,
        ))
    _logger.info(f"Rational profiles under conjectures: {len(result)}")
    return result

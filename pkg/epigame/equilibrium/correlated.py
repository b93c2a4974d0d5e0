from fractions import Fraction
from itertools import product
from typing import (
    Callable,
    Dict,
    List,
    Optional,
    Tuple,
)

from ..core import (
    DEFAULT_LIMITS,
    NoCommonPrior,
    SearchLimits,
    StrategySpaceTooLarge,
    WrongUtilityKind,
    get_logger,
)
from ..game import (
    EpistemicGame,
    StrategyProfile,
    enumerate_strategies,
    expected_utility,
)
from ..measure import Measure
from .bayes import require_action_kind
from .lp import maximize
from .model import (
    ActionDistribution,
    CECheckReport,
    CEConstraint,
    CEResult,
    ConstraintId,
    NormalFormGame,
)
from .types import (
    ChoiceProfile,
    Objective,
)

_logger = get_logger()


def _require_common_prior(g: EpistemicGame) -> Measure:
    prior = g.common_prior()
    if prior is None:
        raise NoCommonPrior([p.name for p in g.players])
    return prior


def to_normal_form(g: EpistemicGame, limits: SearchLimits = DEFAULT_LIMITS) -> NormalFormGame:
    """Strategies as choices, common-prior expected utilities as payoffs."""
    require_action_kind(g)
    prior = _require_common_prior(g)
    spaces = [enumerate_strategies(g, i, limits) for i in range(g.n)]
    count = 1
    for space in spaces:
        count *= len(space)
    if count > limits.profile_cap:
        raise StrategySpaceTooLarge(count, limits.profile_cap, scope="normal form")
    payoffs: Dict[Tuple[int, ChoiceProfile], Fraction] = {}
    for strategies in product(*spaces):
        profile = StrategyProfile(strategies)
        labels = profile.labels()
        for i in range(g.n):
            payoffs[(i, labels)] = expected_utility(g, profile, i, prior)
    return NormalFormGame(
        players=tuple(p.name for p in g.players),
        choices=tuple(tuple(s.label for s in space) for space in spaces),
        payoffs=payoffs,
    )


def action_normal_form(g: EpistemicGame) -> NormalFormGame:
    """
    Actions as choices, ``u_i(·, a)`` as payoffs.

    Defined only when every player's utility of an action profile is the same
    in every state; this is the form on which induced distributions are
    checked for the correlated-equilibrium property.
    """
    require_action_kind(g)
    _require_common_prior(g)
    payoffs: Dict[Tuple[int, ChoiceProfile], Fraction] = {}
    for profile in product(*(p.actions for p in g.players)):
        for i in range(g.n):
            values = {g.utilities.value(i, state, profile) for state in g.space}
            if len(values) != 1:
                raise WrongUtilityKind(
                    "state-independent action",
                    "state-dependent action",
                    message=f"Utility of {g.players[i].name} depends on the state",
                )
            payoffs[(i, profile)] = values.pop()
    return NormalFormGame(
        players=tuple(p.name for p in g.players),
        choices=tuple(p.actions for p in g.players),
        payoffs=payoffs,
    )


def _constraint_slack(
    nf: NormalFormGame,
    weight_of: Callable[[ChoiceProfile], Fraction],
    player: int,
    told: str,
    deviation: str
) -> Fraction:
    """Σ over profiles recommending ``told`` of d(p)·(u_i(p) − u_i(p with ``deviation``))."""
    total = Fraction(0)
    for profile in nf.profiles():
        if profile[player] != told:
            continue
        weight = weight_of(profile)
        if weight:
            swapped = nf.deviate(profile, player, deviation)
            total += weight * (nf.payoff(player, profile) - nf.payoff(player, swapped))
    return total


def _constraint_ids(nf: NormalFormGame) -> List[Tuple[int, ConstraintId]]:
    return [
        (i, ConstraintId(nf.players[i], told, deviation))
        for i in range(nf.n)
        for told in nf.choices[i]
        for deviation in nf.choices[i]
        if told != deviation
    ]


def _certificate(nf: NormalFormGame, d: ActionDistribution) -> Tuple[CEConstraint, ...]:
    return tuple(
        CEConstraint(cid, _constraint_slack(nf, d.__getitem__, i, cid.told, cid.deviation))
        for i, cid in _constraint_ids(nf)
    )


def is_correlated_equilibrium(nf: NormalFormGame, d: ActionDistribution) -> CECheckReport:
    """Evaluate every action-swap incentive constraint exactly."""
    d.check_dimensions(nf)
    constraints = _certificate(nf, d)
    return CECheckReport(ok=not any(c.violated for c in constraints), constraints=constraints)


def sum_objective(nf: NormalFormGame) -> Objective:
    return {
        profile: sum((nf.payoff(i, profile) for i in range(nf.n)), Fraction(0))
        for profile in nf.profiles()
    }


def player_objective(nf: NormalFormGame, name: str) -> Objective:
    i = nf.player_index(name)
    return {profile: nf.payoff(i, profile) for profile in nf.profiles()}


def find_correlated_equilibrium(
    nf: NormalFormGame,
    objective: Optional[Objective] = None,
    limits: SearchLimits = DEFAULT_LIMITS
) -> CEResult:
    """
    Optimal vertex of the correlated-equilibrium polytope.

    Variables are the profile weights; each incentive constraint becomes the
    row ``-slack(x) <= 0`` and the weights must sum to one. The objective
    defaults to the sum of payoffs.
    """
    count = nf.profile_count()
    if count > limits.profile_cap:
        raise StrategySpaceTooLarge(count, limits.profile_cap, scope="correlated equilibrium")
    objective = objective if objective is not None else sum_objective(nf)
    profiles = list(nf.profiles())
    column = {profile: k for k, profile in enumerate(profiles)}

    a_ub: List[List[Fraction]] = []
    for i, cid in _constraint_ids(nf):
        row = [Fraction(0)] * len(profiles)
        for profile in profiles:
            if profile[i] == cid.told:
                swapped = nf.deviate(profile, i, cid.deviation)
                row[column[profile]] = -(nf.payoff(i, profile) - nf.payoff(i, swapped))
        a_ub.append(row)

    solution = maximize(
        c=[Fraction(objective.get(profile, 0)) for profile in profiles],
        a_ub=a_ub,
        b_ub=[Fraction(0)] * len(a_ub),
        a_eq=[[Fraction(1)] * len(profiles)],
        b_eq=[Fraction(1)],
    )
    distribution = ActionDistribution({p: w for p, w in zip(profiles, solution.x) if w})
    _logger.info(
        f"Correlated equilibrium found: objective {solution.objective}, "
        f"support {len(distribution.support())}, {solution.pivots} pivots"
    )
    return CEResult(
        distribution=distribution,
        objective=solution.objective,
        certificate=_certificate(nf, distribution),
    )

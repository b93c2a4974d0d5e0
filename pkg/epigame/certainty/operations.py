from fractions import Fraction
from itertools import (
    islice,
    permutations,
    product,
)
from math import factorial
from typing import (
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

from ..core import (
    DEFAULT_LIMITS,
    EnumerationCapExceeded,
    SearchLimits,
    ValidationError,
    get_logger,
)
from ..game import (
    EpistemicGame,
    StrategyProfile,
    enumerate_strategies,
    expected_utility,
)
from .model import (
    AdmissibleSystem,
    CoherentSystem,
    CongruenceReport,
    EfficiencyReport,
    ProfileEfficiency,
    ResponseMap,
)

_logger = get_logger()


def check_congruence(f: ResponseMap, g: ResponseMap) -> CongruenceReport:
    """True iff ``g`` inverts ``f`` on both sides."""
    if f.source != g.target or f.target != g.source:
        raise ValidationError(
            "Response maps do not run between the same two players",
            details={"f": [f.source, f.target], "g": [g.source, g.target]},
        )
    for strategy in f.domain():
        image = f(strategy)
        if image not in g or g(image) != strategy:
            return CongruenceReport(ok=False, counterexample=strategy)
    for strategy in g.domain():
        image = g(strategy)
        if image not in f or f(image) != strategy:
            return CongruenceReport(ok=False, counterexample=strategy)
    return CongruenceReport(ok=True)


def count_coherent_systems(g: EpistemicGame) -> int:
    """(m!)^(n-1) when every player has m strategies, else 0."""
    counts = {g.strategy_count(i) for i in range(g.n)}
    if len(counts) != 1:
        return 0
    return factorial(counts.pop()) ** (g.n - 1)


def enumerate_coherent_systems(
    g: EpistemicGame,
    cap: Optional[int] = None,
    *,
    max_systems: Optional[int] = None,
    limits: SearchLimits = DEFAULT_LIMITS
) -> Iterator[CoherentSystem]:
    """
    Stream every coherent system in a fixed order.

    Player 1's strategies keep their enumeration order; every other player's
    list ranges over all permutations, so the first system pairs the k-th
    strategies of all players.

    Raises:
        ValidationError: when ``max_systems`` is negative
        EnumerationCapExceeded: before anything is yielded, when the total
            exceeds ``cap`` and ``max_systems`` does not bring it under
    """
    if max_systems is not None and max_systems < 0:
        raise ValidationError("max_systems must be non-negative", details={"max_systems": max_systems})
    cap = cap if cap is not None else limits.system_cap
    total = count_coherent_systems(g)
    if total > cap and (max_systems is None or max_systems > cap):
        raise EnumerationCapExceeded(total, cap)
    _logger.info(f"Enumerating coherent systems: {total} in total")
    if total == 0:
        return iter(())
    spaces = [enumerate_strategies(g, i, limits) for i in range(g.n)]
    systems = _systems(spaces)
    return islice(systems, max_systems) if max_systems is not None else systems


def _systems(spaces: Sequence[List]) -> Iterator[CoherentSystem]:
    m = len(spaces[0])
    for orders in product(*(permutations(range(m)) for _ in spaces[1:])):
        yield CoherentSystem(tuple(
            StrategyProfile((spaces[0][k],) + tuple(space[order[k]] for space, order in zip(spaces[1:], orders)))
            for k in range(m)
        ))


def utility_vector(g: EpistemicGame, profile: StrategyProfile) -> Tuple[Fraction, ...]:
    """Each player's expected utility of the profile under their own prior."""
    return tuple(expected_utility(g, profile, i) for i in range(g.n))


def rational_solutions(g: EpistemicGame, system: CoherentSystem) -> List[StrategyProfile]:
    """Profiles of the system that maximize every player's expected utility over the system."""
    vectors = [utility_vector(g, profile) for profile in system]
    if not vectors:
        return []
    best = [max(v[i] for v in vectors) for i in range(g.n)]
    return [profile for profile, vector in zip(system, vectors) if list(vector) == best]


def efficiency_report(
    g: EpistemicGame,
    system: CoherentSystem,
    subset: Sequence[StrategyProfile]
) -> EfficiencyReport:
    """Pareto flag per subset member (within the system) and essential uniqueness of the subset."""
    for profile in subset:
        if profile not in system:
            raise ValidationError(
                "Profile is not a member of the system",
                details={"profile": list(profile.labels())},
            )
    vectors = {profile: utility_vector(g, profile) for profile in system}
    entries = []
    for profile in subset:
        own = vectors[profile]
        dominated = any(
            all(o >= s for o, s in zip(other, own)) and any(o > s for o, s in zip(other, own))
            for other in vectors.values()
        )
        entries.append(ProfileEfficiency(profile, own, pareto=not dominated))
    return EfficiencyReport(
        profiles=tuple(entries),
        essentially_unique=len({vectors[p] for p in subset}) <= 1,
    )


def admissible_systems(
    g: EpistemicGame,
    cap: Optional[int] = None,
    *,
    limits: SearchLimits = DEFAULT_LIMITS
) -> List[AdmissibleSystem]:
    """Systems with at least one rational solution, each with its solutions."""
    result = []
    for index, system in enumerate(enumerate_coherent_systems(g, cap, limits=limits)):
        solutions = rational_solutions(g, system)
        if solutions:
            result.append(AdmissibleSystem(index, system, tuple(solutions)))
    _logger.info(f"Admissible systems: {len(result)}")
    return result

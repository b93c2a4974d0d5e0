from itertools import product
from math import factorial

import pytest
from hypothesis import (
    given,
    settings,
    strategies as st,
)

from epigame.certainty import check_congruence
from epigame.consistency import (
    check_theorem1,
    check_theorem2,
    decomposition_check,
    imperfect_pairs,
    search_bay_scenarios,
)
from epigame.core import NotImperfectInformation
from epigame.game import (
    EpistemicGame,
    Player,
    UtilityKind,
)
from tests.settings import PROPERTY_EXAMPLES
from tests.strategies import (
    common_prior_games,
    measures,
    partitions,
    payoffs,
    spaces,
)
from tests.utils import GameBuilder

SCENARIO_EXAMPLES = PROPERTY_EXAMPLES // 5


@st.composite
def one_state_games(draw):
    """Plain strategic forms with m in 2..4 actions per player."""
    m = draw(st.integers(2, 4))
    actions = tuple(f"a{k}" for k in range(m))
    table = {profile: (draw(payoffs), draw(payoffs)) for profile in product(actions, repeat=2)}
    return GameBuilder.matrix([actions] * 2, table)


@st.composite
def shared_partition_games(draw):
    """Both players on one drawn partition of up to three states, m actions each, at most nine strategies."""
    space = draw(spaces(1, 3))
    partition = draw(partitions(space))
    m = draw(st.integers(2, 3 if len(partition) <= 2 else 2))
    prior = draw(measures(space, positive=True))
    players = tuple(
        Player(name, tuple(f"{prefix}{k}" for k in range(m)), partition, prior)
        for name, prefix in (("P1", "a"), ("P2", "b"))
    )
    table = {profile: (draw(payoffs), draw(payoffs)) for profile in product(*(p.actions for p in players))}
    return EpistemicGame(space, players, UtilityKind.ACTION, GameBuilder.action_table(2, table))


class TestScenarioSearchProperties:
    """Property suite for BAY-consistent scenarios."""

    @settings(max_examples=SCENARIO_EXAMPLES)
    @given(one_state_games())
    def test_one_cell_witnesses_are_bijections(self, g):
        """Test that without INV a one-cell pair admits exactly the m! bijections, each congruent."""
        search = search_bay_scenarios(g, (0, 1))
        assert search.exhausted
        assert len(search.witnesses) == factorial(len(g.players[0].actions))
        for witness in search.witnesses:
            forward, backward = witness.response_maps(g)
            assert check_congruence(forward, backward).ok

    @settings(max_examples=SCENARIO_EXAMPLES)
    @given(shared_partition_games())
    def test_perfect_information_witnesses_are_cellwise_bijections(self, g):
        """Test that a shared partition admits one action bijection per cell, (m!)^k in all, each congruent."""
        m, k = len(g.players[0].actions), g.players[0].cells
        search = search_bay_scenarios(g, (0, 1))
        assert search.exhausted
        assert len(search.witnesses) == factorial(m) ** k
        for witness in search.witnesses:
            forward, backward = witness.response_maps(g)
            assert check_congruence(forward, backward).ok

    @settings(max_examples=SCENARIO_EXAMPLES)
    @given(common_prior_games())
    def test_distinct_partitions_admit_no_witness(self, g):
        if g.players[0].partition == g.players[1].partition:
            return
        search = search_bay_scenarios(g, (0, 1))
        assert search.exhausted
        assert search.witnesses == ()

    @settings(max_examples=SCENARIO_EXAMPLES)
    @given(common_prior_games())
    def test_theorem_one_holds(self, g):
        assert check_theorem1(g).holds

    @settings(max_examples=SCENARIO_EXAMPLES)
    @given(common_prior_games())
    def test_theorem_two_holds_when_information_is_imperfect(self, g):
        if not imperfect_pairs(g):
            with pytest.raises(NotImperfectInformation):
                check_theorem2(g)
            return
        assert check_theorem2(g).holds


class TestDecompositionProperties:
    """Property suite for decomposition_check."""

    @given(st.lists(payoffs, min_size=4, max_size=4))
    def test_action_utilities_always_separate(self, values):
        cells = product(("heads", "tails"), ("honest", "dishonest"))
        report = decomposition_check(GameBuilder.nature(dict(zip(cells, values))))
        assert report.cellwise_consistent
